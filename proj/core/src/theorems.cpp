#include "cmnet/theorems.hpp"

#include <algorithm>
#include <set>

#include "cmnet/error.hpp"

namespace cmnet {

namespace {

long nu_or_zero(const QFElem& x, const PrimeIdeal& prime)
{
    if (x.is_zero()) {
        fail(ErrorKind::ZeroElement, "valuation of zero");
    }
    return valuation(x, prime);
}

}  // namespace

std::vector<PrimeIdeal> default_support(NetLattice& L, const std::vector<std::int64_t>& extra)
{
    const Curve& E = L.base().curve;
    std::set<std::int64_t> rational(extra.begin(), extra.end());
    mpz_class dn = E.discriminant().norm().get_num();
    for (std::int64_t p : rational_prime_factors(dn)) {
        rational.insert(p);
    }
    for (const CurvePoint* R : {&L.base().P, &L.base().Q, &L.point(1, 1)}) {
        if (R->infinity) {
            continue;
        }
        for (std::int64_t p : rational_prime_factors(R->x.denominator())) {
            rational.insert(p);
        }
    }
    std::vector<PrimeIdeal> out;
    for (std::int64_t p : rational) {
        for (const PrimeIdeal& q : factor_rational_prime(p, L.params())) {
            out.push_back(q);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<PrimeIdeal> bad_primes(const Curve& E, const std::vector<PrimeIdeal>& support)
{
    std::vector<PrimeIdeal> out;
    for (const PrimeIdeal& q : support) {
        if (valuation(E.discriminant(), q) > 0) {
            out.push_back(q);
        }
    }
    return out;
}

FactoredIdeal point_denominator(const CurvePoint& R, const std::vector<PrimeIdeal>& support)
{
    if (R.infinity) {
        fail(ErrorKind::Precondition, "denominator of O");
    }
    FactoredIdeal out;
    if (R.x.is_zero()) {
        return out;
    }
    for (const PrimeIdeal& q : support) {
        long v = valuation(R.x, q);
        if (v >= 0) {
            continue;
        }
        if (v % 2 != 0) {
            fail(ErrorKind::OddDenominatorValuation, "nu(x) = " + std::to_string(v) + " at " + q.to_string());
        }
        out.add(q, -v / 2);
    }
    return out;
}

FactoredIdeal denominator_ideal(NetLattice& L, const Index& v, const std::vector<PrimeIdeal>& support)
{
    return point_denominator(L.point(v.first, v.second), support);
}

NetQuadraticForm quadratic_form_F(NetLattice& L, const std::vector<PrimeIdeal>& support)
{
    FactoredIdeal dP = point_denominator(L.base().P, support);
    FactoredIdeal dQ = point_denominator(L.base().Q, support);
    FactoredIdeal dPQ = point_denominator(L.point(1, 1), support);
    return NetQuadraticForm{dP, dQ, dPQ * dP.inverse() * dQ.inverse()};
}

FactoredIdeal F_at(const NetQuadraticForm& F, const Index& v)
{
    long a = static_cast<long>(v.first);
    long b = static_cast<long>(v.second);
    return F.A11.pow(a * a) * F.A22.pow(b * b) * F.A12.pow(a * b);
}

long g_direct(NetLattice& L, const OrderElem& z, const PrimeIdeal& prime)
{
    if (z.is_zero() || L.point(z).infinity) {
        return 0;
    }
    long vpsi = nu_or_zero(L.psi(z), prime);
    QFElem ph = L.phi(z);
    if (ph.is_zero()) {
        return 2 * vpsi;
    }
    return std::min(2 * vpsi, valuation(ph, prime));
}

long g_formula_good(NetLattice& L, const NetQuadraticForm& F, const OrderElem& z, const PrimeIdeal& prime)
{
    const Curve& E = L.base().curve;
    if (is_singular_reduction(E, L.base().P, prime) || is_singular_reduction(E, L.base().Q, prime)) {
        fail(ErrorKind::SingularBase, "P or wP is singular at " + prime.to_string());
    }
    return -2 * F_at(F, {z.a, z.b}).d_p(prime);
}

bool in_annihilator(NetLattice& L, const OrderElem& z, const PrimeIdeal& prime)
{
    return !is_singular_reduction(L.base().curve, L.point(z), prime);
}

BadFormulaResult g_formula_bad(NetLattice& L, const OrderElem& r, const OrderElem& z, const PrimeIdeal& prime,
                               std::int64_t norm_bound)
{
    MuTriple mu = mu_triple(L, r, prime);
    auto quad = [&](const OrderElem& al) {
        long a = static_cast<long>(al.a);
        long b = static_cast<long>(al.b);
        return (a * a - a * b) * mu.mu + (b * b - a * b) * mu.mu_w + a * b * mu.mu_1w;
    };

    BadFormulaResult out;
    if (auto q = ord_divides(r, z)) {
        out.branch = 1;
        out.alpha = *q;
        out.value = quad(*q);
        return out;
    }

    OrderElem w(r.params, 0, 1);
    for (const OrderElem& beta : ord_enumerate_by_norm(r.params, norm_bound)) {
        if (in_annihilator(L, beta, prime)) {
            continue;
        }
        for (int sign : {1, -1}) {
            auto q = ord_divides(r, sign > 0 ? z - beta : z + beta);
            if (!q) {
                continue;
            }
            long a = static_cast<long>(q->a);
            long b = static_cast<long>(q->b);
            long vb = nu_or_zero(L.psi(beta), prime);
            long t1 = vb - nu_or_zero(L.psi(r - beta), prime);
            long t2 = vb - nu_or_zero(L.psi(r * w - beta), prime);
            out.branch = 2;
            out.alpha = *q;
            out.beta = beta;
            out.sign = sign;
            out.value = 2 * vb + sign * (2 * a * t1 + a * mu.mu) + sign * (2 * b * t2 + b * mu.mu_w) + quad(*q);
            return out;
        }
    }
    fail(ErrorKind::NoDecomposition, "no beta of norm <= " + std::to_string(norm_bound) + " for " + z.to_string());
}

MIdeal M_ideal(const BasePair& B, const std::vector<PrimeIdeal>& bad, std::int64_t norm_bound)
{
    MIdeal out;
    const FieldParams& params = B.params();
    std::int64_t prod = 1;
    for (const PrimeIdeal& q : bad) {
        OrderElem r = annihilator_generator(B, q, norm_bound);
        out.annihilators.emplace_back(q, r);
        prod = checked_mul(prod, r.norm());
    }
    for (const OrderElem& m : ord_enumerate_by_norm(params, prod)) {
        bool all = true;
        for (const auto& [q, r] : out.annihilators) {
            if (!ord_divides(r, m)) {
                all = false;
                break;
            }
        }
        if (all) {
            out.generator = m;
            return out;
        }
    }
    fail(ErrorKind::BoundExceeded, "no common multiple of the annihilators of norm <= " + std::to_string(prod));
}

FactoredIdeal g_sequence_ideal(NetLattice& L, const OrderElem& alpha, const std::vector<PrimeIdeal>& support)
{
    FactoredIdeal out;
    for (const PrimeIdeal& q : support) {
        long g = g_direct(L, alpha, q);
        if (g % 2 != 0) {
            fail(ErrorKind::OddGValue, "g = " + std::to_string(g) + " at " + q.to_string());
        }
        out.add(q, g / 2);
    }
    return out;
}

QfRecurrenceResult verify_qf_recurrence(NetLattice& L, const OrderElem& alpha, const OrderElem& beta,
                                        const PrimeIdeal& prime, const OrderElem& r)
{
    QfRecurrenceResult out;
    if (!ord_divides(r, alpha) && !ord_divides(r, beta)) {
        out.skipped = true;
        out.skip_reason = "neither index lies in Ann(P) = (" + r.to_string() + ")";
        return out;
    }
    out.lhs = g_direct(L, alpha + beta, prime) + g_direct(L, alpha - beta, prime);
    out.rhs = 2 * (g_direct(L, alpha, prime) + g_direct(L, beta, prime));
    out.pass = out.lhs == out.rhs;
    return out;
}

namespace {

struct XVals {
    long p, q, pq;
};

XVals x_valuations(NetLattice& L, const PrimeIdeal& prime)
{
    return XVals{nu_or_zero(L.base().P.x, prime), nu_or_zero(L.base().Q.x, prime),
                 nu_or_zero(L.point(1, 1).x, prime)};
}

}  // namespace

long g_good_closed_form(NetLattice& L, const OrderElem& z, const PrimeIdeal& prime)
{
    XVals v = x_valuations(L, prime);
    long z1 = static_cast<long>(z.a);
    long z2 = static_cast<long>(z.b);
    long m1 = std::max(0L, -v.p);
    long m2 = std::max(0L, -v.q);
    long m3 = std::max(0L, -v.pq);
    return (z1 * z2 - z1 * z1) * m1 + (z1 * z2 - z2 * z2) * m2 - z1 * z2 * m3;
}

long g_good_restated_form(NetLattice& L, const OrderElem& z, const PrimeIdeal& prime)
{
    XVals v = x_valuations(L, prime);
    long z1 = static_cast<long>(z.a);
    long z2 = static_cast<long>(z.b);
    return (z1 * z1 - z1 * z2) * std::max(0L, v.p) + (z2 * z2 - z1 * z2) * std::max(0L, v.q) +
           z1 * z2 * std::max(0L, v.pq);
}

}  // namespace cmnet
