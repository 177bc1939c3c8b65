#include "cmnet/recurrence.hpp"

#include "cmnet/curve.hpp"
#include "cmnet/error.hpp"
#include "cmnet/theorems.hpp"

namespace cmnet {

namespace {

MaxElem to_max(const QFElem& x)
{
    mpq_class a = x.ka();
    mpq_class b = x.kb();
    if (a.get_den() != 1 || b.get_den() != 1) {
        fail(ErrorKind::NotIntegral, x.to_string() + " is not integral");
    }
    return MaxElem{a.get_num(), b.get_num()};
}

}  // namespace

bool order_is_pid(const FieldParams& params)
{
    std::int64_t disc = params.f * params.f * params.disc_K();
    return cm_j_invariant(disc).has_value();
}

bool generates_denominator(const QFElem& x, const QFElem& B)
{
    if (B.is_zero() || !B.is_integral()) {
        return false;
    }
    QFElem B2 = B * B;
    QFElem A = x * B2;
    if (!A.is_integral()) {
        return false;
    }
    if (A.is_zero()) {
        return B2.norm() == 1;
    }
    return ideals_coprime(A, B2);
}

RecurrenceContext::RecurrenceContext(NetLattice& L, std::vector<PrimeIdeal> support, std::optional<OrderElem> M)
    : L_(L), support_(std::move(support)), M_(std::move(M))
{
    pid_ = order_is_pid(L.params());
    units_ = unit_group(L.params());
    for (const QFElem& u : units_) {
        unitsm_.push_back(to_max(u));
    }
}

MaxElem RecurrenceContext::mul(const MaxElem& u, const MaxElem& v) const
{
    // wK^2 = AK wK - DK
    const FieldParams& p = L_.params();
    mpz_class yy = u.y * v.y;
    MaxElem out;
    out.x = u.x * v.x - yy * static_cast<long>(p.DK());
    out.y = u.x * v.y + u.y * v.x + yy * static_cast<long>(p.AK());
    return out;
}

const RecurrenceContext::Site& RecurrenceContext::site(const OrderElem& z)
{
    Index key{z.a, z.b};
    auto it = sites_.find(key);
    if (it != sites_.end()) {
        return it->second;
    }
    Site s;
    const FieldParams& params = L_.params();
    s.g.assign(support_.size(), 0);
    if (z.is_zero() || L_.point(z).infinity) {
        s.zero = true;
        s.psi = QFElem(params);
        s.B = QFElem(params);
        s.Bm = MaxElem{0, 0};
        return sites_.emplace(key, std::move(s)).first->second;
    }
    s.psi = L_.psi(z);
    QFElem G(params, 1L, 0L);
    for (std::size_t i = 0; i < support_.size(); ++i) {
        long g = g_direct(L_, z, support_[i]);
        if (g % 2 != 0) {
            fail(ErrorKind::OddGValue, "g = " + std::to_string(g) + " at " + support_[i].to_string());
        }
        s.g[i] = g;
        if (g != 0) {
            G *= support_[i].gen.pow(g / 2);
        }
    }
    s.B = canonical_associate(s.psi / G);
    s.Bm = to_max(s.B);
    return sites_.emplace(key, std::move(s)).first->second;
}

bool RecurrenceContext::hypothesis(const OrderElem& alpha, const OrderElem& beta, const OrderElem& gamma,
                                   std::string* reason) const
{
    if (!pid_) {
        if (reason) {
            *reason = "order is not a principal ideal domain";
        }
        return false;
    }
    if (!M_) {
        if (reason) {
            *reason = "no generator for M(P)";
        }
        return false;
    }
    int hits = 0;
    for (const OrderElem* t : {&alpha, &beta, &gamma}) {
        if (ord_divides(*M_, *t)) {
            ++hits;
        }
    }
    if (hits < 2) {
        if (reason) {
            *reason = "fewer than two indices in M(P) = (" + M_->to_string() + ")";
        }
        return false;
    }
    return true;
}

bool RecurrenceContext::b_identity(const MaxElem& t1, const MaxElem& t2, const MaxElem& t3,
                                   std::optional<std::array<QFElem, 2>>& witness) const
{
    for (std::size_t i = 0; i < units_.size(); ++i) {
        MaxElem a = mul(unitsm_[i], t2);
        for (std::size_t j = 0; j < units_.size(); ++j) {
            MaxElem b = mul(unitsm_[j], t3);
            if (t1.x == a.x - b.x && t1.y == a.y - b.y) {
                witness = std::array<QFElem, 2>{units_[i], units_[j]};
                return true;
            }
        }
    }
    return false;
}

RecurrenceReport RecurrenceContext::verify(const OrderElem& alpha, const OrderElem& beta, const OrderElem& gamma,
                                           bool enforce)
{
    RecurrenceReport r;
    r.alpha = alpha;
    r.beta = beta;
    r.gamma = gamma;
    r.hypothesis = hypothesis(alpha, beta, gamma, &r.skip_reason);
    if (enforce && !r.hypothesis) {
        return r;
    }

    const Site& s1 = site(alpha + beta);
    const Site& s2 = site(alpha - beta);
    const Site& s3 = site(gamma);
    const Site& s4 = site(alpha + gamma);
    const Site& s5 = site(alpha - gamma);
    const Site& s6 = site(beta);
    const Site& s7 = site(beta + gamma);
    const Site& s8 = site(beta - gamma);
    const Site& s9 = site(alpha);

    QFElem p1 = s1.psi * s2.psi * s3.psi * s3.psi;
    QFElem p2 = s4.psi * s5.psi * s6.psi * s6.psi;
    QFElem p3 = s7.psi * s8.psi * s9.psi * s9.psi;
    r.psi_ok = p1 == p2 - p3;

    r.g_ok = true;
    for (std::size_t i = 0; i < support_.size(); ++i) {
        long g1 = s1.g[i] + s2.g[i] + 2 * s3.g[i];
        long g2 = s4.g[i] + s5.g[i] + 2 * s6.g[i];
        long g3 = s7.g[i] + s8.g[i] + 2 * s9.g[i];
        if (g1 != g2 || g2 != g3) {
            r.g_ok = false;
            break;
        }
    }

    MaxElem b1 = mul(mul(s1.Bm, s2.Bm), mul(s3.Bm, s3.Bm));
    MaxElem b2 = mul(mul(s4.Bm, s5.Bm), mul(s6.Bm, s6.Bm));
    MaxElem b3 = mul(mul(s7.Bm, s8.Bm), mul(s9.Bm, s9.Bm));
    r.b_ok = b_identity(b1, b2, b3, r.witness);
    return r;
}

RecurrenceReport verify_general_recurrence(NetLattice& L, const OrderElem& alpha, const OrderElem& beta,
                                           const OrderElem& gamma, const std::vector<PrimeIdeal>& support)
{
    std::optional<OrderElem> M;
    try {
        M = M_ideal(L.base(), bad_primes(L.base().curve, support), 200).generator;
    } catch (const Error&) {
        M.reset();
    }
    RecurrenceContext ctx(L, support, M);
    return ctx.verify(alpha, beta, gamma);
}

std::optional<RecurrenceReport> find_expected_failure(RecurrenceContext& ctx, std::int64_t radius)
{
    const FieldParams& params = ctx.net().params();
    std::vector<OrderElem> box;
    for (std::int64_t a = -radius; a <= radius; ++a) {
        for (std::int64_t b = -radius; b <= radius; ++b) {
            box.emplace_back(params, a, b);
        }
    }
    for (const OrderElem& al : box) {
        for (const OrderElem& be : box) {
            for (const OrderElem& ga : box) {
                if (ctx.hypothesis(al, be, ga)) {
                    continue;
                }
                RecurrenceReport r = ctx.verify(al, be, ga, false);
                if (r.psi_ok && !r.b_ok) {
                    return r;
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace cmnet
