#include "cmnet/primes.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <tuple>

#include "cmnet/error.hpp"
#include "int128.hpp"

namespace cmnet {

const char* to_string(PrimeKind kind)
{
    switch (kind) {
    case PrimeKind::Split: return "split";
    case PrimeKind::Inert: return "inert";
    case PrimeKind::Ramified: return "ramified";
    }
    return "?";
}

bool operator<(const PrimeIdeal& x, const PrimeIdeal& y)
{
    return std::make_tuple(x.p, static_cast<int>(x.kind), x.root) <
           std::make_tuple(y.p, static_cast<int>(y.kind), y.root);
}

ResidueField PrimeIdeal::residue_field() const
{
    ResidueField f;
    f.p = p;
    f.degree = residue_degree;
    f.root = residue_degree == 1 ? root : 0;
    f.A = mod_reduce(gen.params().AK(), p);
    f.D = mod_reduce(gen.params().DK(), p);
    return f;
}

std::string PrimeIdeal::to_string() const
{
    return "p=" + std::to_string(p) + ";kind=" + cmnet::to_string(kind) + ";gen=" + gen.to_string();
}

// ---------------------------------------------------------------- ideals

FactoredIdeal::FactoredIdeal(const PrimeIdeal& prime, long e)
{
    add(prime, e);
}

bool FactoredIdeal::is_integral() const
{
    return std::all_of(e_.begin(), e_.end(), [](const auto& kv) { return kv.second > 0; });
}

long FactoredIdeal::d_p(const PrimeIdeal& prime) const
{
    auto it = e_.find(prime);
    return it == e_.end() ? 0 : it->second;
}

void FactoredIdeal::add(const PrimeIdeal& prime, long e)
{
    if (e == 0) {
        return;
    }
    long& slot = e_[prime];
    slot += e;
    if (slot == 0) {
        e_.erase(prime);
    }
}

FactoredIdeal& FactoredIdeal::operator*=(const FactoredIdeal& o)
{
    for (const auto& [prime, e] : o.e_) {
        add(prime, e);
    }
    return *this;
}

FactoredIdeal FactoredIdeal::operator*(const FactoredIdeal& o) const
{
    FactoredIdeal r = *this;
    r *= o;
    return r;
}

FactoredIdeal FactoredIdeal::pow(long k) const
{
    FactoredIdeal r;
    if (k == 0) {
        return r;
    }
    for (const auto& [prime, e] : e_) {
        r.e_[prime] = e * k;
    }
    return r;
}

FactoredIdeal FactoredIdeal::inverse() const
{
    return pow(-1);
}

QFElem FactoredIdeal::generator(const FieldParams& params) const
{
    QFElem g(params, 1L, 0L);
    for (const auto& [prime, e] : e_) {
        g *= prime.gen.pow(e);
    }
    return g;
}

std::string FactoredIdeal::to_string() const
{
    if (e_.empty()) {
        return "(1)";
    }
    std::string s;
    for (const auto& [prime, e] : e_) {
        if (!s.empty()) {
            s += "*";
        }
        s += "(" + prime.gen.to_string() + ")";
        if (e != 1) {
            s += "^" + std::to_string(e);
        }
    }
    return s;
}

long d_p(const FactoredIdeal& ideal, const PrimeIdeal& prime)
{
    return ideal.d_p(prime);
}

// ---------------------------------------------------------------- primes

bool is_prime(std::int64_t n)
{
    if (n < 2) {
        return false;
    }
    mpz_class z(static_cast<long>(n));
    return mpz_probab_prime_p(z.get_mpz_t(), 30) > 0;
}

int kronecker_kind(std::int64_t dK, std::int64_t p)
{
    mpz_class a(static_cast<long>(dK)), b(static_cast<long>(p));
    return mpz_kronecker(a.get_mpz_t(), b.get_mpz_t());
}

namespace {

struct Candidate {
    std::int64_t c;
    std::int64_t d;
};

auto gen_key(const Candidate& k)
{
    return std::make_tuple(k.c < 0 ? -k.c : k.c, k.d < 0 ? -k.d : k.d, k.c < 0, k.d < 0);
}

std::int64_t root_of(std::int64_t c, std::int64_t d, std::int64_t p)
{
    // c + d wK = 0 mod the prime, so wK = -c/d
    return mod_reduce(static_cast<std::int64_t>((static_cast<i128>(mod_reduce(-c, p)) * mod_inverse(d, p)) % p), p);
}

std::int64_t isqrt_exact(i128 s, bool& ok)
{
    ok = false;
    if (s < 0) {
        return 0;
    }
    auto t = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(s)));
    for (std::int64_t u = std::max<std::int64_t>(0, t - 2); u <= t + 2; ++u) {
        if (static_cast<i128>(u) * u == s) {
            ok = true;
            return u;
        }
    }
    return 0;
}

long vp(mpz_class n, std::int64_t p)
{
    if (n == 0) {
        fail(ErrorKind::ZeroElement, "p-adic valuation of zero");
    }
    mpz_class P(static_cast<long>(p));
    return static_cast<long>(mpz_remove(n.get_mpz_t(), n.get_mpz_t(), P.get_mpz_t()));
}

// valuation of the integral element c + d wK
long integral_valuation(const mpz_class& c, const mpz_class& d, const PrimeIdeal& prime, const FieldParams& fp)
{
    mpz_class n = c * c + c * d * fp.AK() + d * d * fp.DK();
    long m = vp(n, prime.p);
    if (m == 0 || prime.kind == PrimeKind::Ramified) {
        return m;
    }
    if (prime.kind == PrimeKind::Inert) {
        return m / 2;
    }
    long g = c == 0 ? vp(d, prime.p) : (d == 0 ? vp(c, prime.p) : std::min(vp(c, prime.p), vp(d, prime.p)));
    long rest = m - 2 * g;
    if (rest == 0) {
        return g;
    }
    mpz_class pg;
    mpz_ui_pow_ui(pg.get_mpz_t(), static_cast<unsigned long>(prime.p), static_cast<unsigned long>(g));
    mpz_class c1 = c / pg, d1 = d / pg;
    mpz_class t = c1 + d1 * prime.root;
    return mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(prime.p)) ? g + rest : g;
}

long ramification(const PrimeIdeal& prime)
{
    return prime.kind == PrimeKind::Ramified ? 2 : 1;
}

}  // namespace

long rational_valuation(const mpz_class& n, std::int64_t p)
{
    return vp(n, p);
}

std::vector<std::int64_t> rational_prime_factors(mpz_class n, std::int64_t trial_bound)
{
    n = abs(n);
    std::vector<std::int64_t> out;
    if (n == 0) {
        fail(ErrorKind::ZeroElement, "factoring zero");
    }
    for (std::int64_t p = 2; n != 1 && p <= trial_bound; p += (p == 2 ? 1 : 2)) {
        if (mpz_class(static_cast<long>(p)) * p > n) {
            break;
        }
        if (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
            out.push_back(p);
            mpz_class P(static_cast<long>(p));
            mpz_remove(n.get_mpz_t(), n.get_mpz_t(), P.get_mpz_t());
        }
    }
    if (n != 1) {
        if (!n.fits_slong_p() || !is_prime(n.get_si())) {
            fail(ErrorKind::IncompleteSupport, "could not factor cofactor " + n.get_str());
        }
        out.push_back(n.get_si());
    }
    return out;
}

std::vector<PrimeIdeal> factor_rational_prime(std::int64_t p, const FieldParams& params)
{
    if (!is_prime(p)) {
        fail(ErrorKind::InvalidParams, std::to_string(p) + " is not prime");
    }
    int k = kronecker_kind(params.disc_K(), p);
    if (k == -1) {
        PrimeIdeal pr;
        pr.p = p;
        pr.kind = PrimeKind::Inert;
        pr.gen = QFElem(params, static_cast<long>(p), 0L);
        pr.residue_degree = 2;
        pr.root = -1;
        return {pr};
    }
    const std::int64_t AK = params.AK(), DK = params.DK();
    const std::int64_t gap = 4 * DK - AK * AK;
    const auto dmax = static_cast<std::int64_t>(std::sqrt(4.0L * p / gap)) + 1;
    std::map<std::int64_t, Candidate> best;
    for (std::int64_t d = -dmax; d <= dmax; ++d) {
        i128 s = static_cast<i128>(4) * p - static_cast<i128>(d) * d * gap;
        bool ok = false;
        std::int64_t t = isqrt_exact(s, ok);
        if (!ok) {
            continue;
        }
        for (std::int64_t sign : {1, -1}) {
            std::int64_t twice_c = sign * t - d * AK;
            if (twice_c % 2 != 0) {
                continue;
            }
            Candidate cand{twice_c / 2, d};
            if (mod_reduce(cand.d, p) == 0) {
                continue;
            }
            std::int64_t r = root_of(cand.c, cand.d, p);
            auto it = best.find(r);
            if (it == best.end() || gen_key(cand) < gen_key(it->second)) {
                best[r] = cand;
            }
        }
    }
    std::size_t expected = k == 0 ? 1 : 2;
    if (best.size() != expected) {
        fail(ErrorKind::GeneratorNotFound,
             "no principal generator of norm " + std::to_string(p) + " (class number > 1?)");
    }
    std::vector<std::pair<Candidate, std::int64_t>> found;
    for (const auto& [r, cand] : best) {
        found.emplace_back(cand, r);
    }
    std::sort(found.begin(), found.end(),
              [](const auto& x, const auto& y) { return gen_key(x.first) < gen_key(y.first); });
    std::vector<PrimeIdeal> out;
    for (const auto& [cand, r] : found) {
        PrimeIdeal pr;
        pr.p = p;
        pr.kind = k == 0 ? PrimeKind::Ramified : PrimeKind::Split;
        pr.gen = QFElem::from_maximal(params, mpq_class(static_cast<long>(cand.c)), mpq_class(static_cast<long>(cand.d)));
        pr.residue_degree = 1;
        pr.root = r;
        out.push_back(pr);
    }
    return out;
}

PrimeIdeal prime_from_generator(const QFElem& gen)
{
    const FieldParams& fp = gen.params();
    if (gen.is_zero() || !gen.is_integral()) {
        fail(ErrorKind::InvalidParams, "prime generator must be a nonzero integral element");
    }
    mpz_class n = gen.norm().get_num();
    if (!n.fits_slong_p()) {
        fail(ErrorKind::InvalidParams, "generator norm too large");
    }
    std::int64_t N = n.get_si();
    if (is_prime(N)) {
        auto primes = factor_rational_prime(N, fp);
        mpz_class c = gen.ka().get_num(), d = gen.kb().get_num();
        for (const auto& pr : primes) {
            if (pr.kind == PrimeKind::Inert) {
                continue;
            }
            mpz_class t = c + d * pr.root;
            if (mpz_divisible_ui_p(t.get_mpz_t(), static_cast<unsigned long>(N))) {
                return pr;
            }
        }
    }
    auto r = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(N))));
    if (r * r == N && is_prime(r) && kronecker_kind(fp.disc_K(), r) == -1) {
        QFElem u = gen / QFElem(fp, static_cast<long>(r), 0L);
        if (u.is_integral() && u.norm() == 1) {
            return factor_rational_prime(r, fp).front();
        }
    }
    fail(ErrorKind::InvalidParams, gen.to_string() + " does not generate a prime ideal");
}

PrimeIdeal parse_prime_spec(const FieldParams& params, const std::string& text)
{
    if (text.find('=') == std::string::npos) {
        return prime_from_generator(QFElem::parse(params, text));
    }
    std::map<std::string, std::string> fields;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(';', pos);
        std::string item = text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
        if (!item.empty()) {
            std::size_t eq = item.find('=');
            if (eq == std::string::npos) {
                fail(ErrorKind::Parse, "malformed prime field '" + item + "'");
            }
            fields[item.substr(0, eq)] = item.substr(eq + 1);
        }
        if (end == std::string::npos) {
            break;
        }
        pos = end + 1;
    }
    if (!fields.count("gen")) {
        fail(ErrorKind::Parse, "prime spec needs gen=ELEM: '" + text + "'");
    }
    PrimeIdeal pr = prime_from_generator(QFElem::parse(params, fields["gen"]));
    if (fields.count("p") && std::to_string(pr.p) != fields["p"]) {
        fail(ErrorKind::Parse, "generator lies over " + std::to_string(pr.p) + ", not p=" + fields["p"]);
    }
    if (fields.count("kind") && fields["kind"] != to_string(pr.kind)) {
        fail(ErrorKind::Parse, "prime over " + std::to_string(pr.p) + " is " + to_string(pr.kind));
    }
    return pr;
}

long valuation(const QFElem& x, const PrimeIdeal& prime)
{
    if (x.is_zero()) {
        fail(ErrorKind::ZeroElement, "valuation of zero");
    }
    mpz_class d = x.denominator();
    mpq_class c = x.ka() * d, e = x.kb() * d;
    long v = integral_valuation(c.get_num(), e.get_num(), prime, x.params());
    if (d != 1) {
        v -= ramification(prime) * vp(d, prime.p);
    }
    return v;
}

long valuation_by_division(const QFElem& x, const PrimeIdeal& prime)
{
    if (x.is_zero()) {
        fail(ErrorKind::ZeroElement, "valuation of zero");
    }
    mpz_class d = x.denominator();
    QFElem y = x * QFElem(x.params(), mpq_class(d), mpq_class(0));
    long k = 0;
    for (;;) {
        QFElem t = y / prime.gen;
        if (!t.is_integral()) {
            break;
        }
        y = t;
        ++k;
    }
    QFElem dd(x.params(), mpq_class(d), mpq_class(0));
    for (;;) {
        QFElem t = dd / prime.gen;
        if (!t.is_integral()) {
            break;
        }
        dd = t;
        --k;
    }
    return k;
}

FactoredIdeal ideal_on_support(const QFElem& x, const std::vector<PrimeIdeal>& support)
{
    FactoredIdeal r;
    for (const auto& pr : support) {
        r.add(pr, valuation(x, pr));
    }
    return r;
}

FactoredIdeal element_ideal(const QFElem& x, const std::vector<std::int64_t>& support_hint, const FactorOptions& opts)
{
    if (x.is_zero()) {
        fail(ErrorKind::ZeroElement, "ideal of zero");
    }
    mpz_class d = x.denominator();
    mpq_class nq = (x * QFElem(x.params(), mpq_class(d), mpq_class(0))).norm();
    mpz_class rest = nq.get_num() * d;
    std::set<std::int64_t> rational;
    for (std::int64_t p : support_hint) {
        mpz_class P(static_cast<long>(p));
        if (p >= 2 && mpz_divisible_p(rest.get_mpz_t(), P.get_mpz_t())) {
            rational.insert(p);
            mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), P.get_mpz_t());
        }
    }
    if (rest != 1 && opts.strict) {
        fail(ErrorKind::IncompleteSupport, "norm factor " + rest.get_str() + " outside the support hint");
    }
    for (std::int64_t p = 2; rest != 1 && p <= opts.trial_bound; p += (p == 2 ? 1 : 2)) {
        if (mpz_class(static_cast<long>(p)) * p > rest) {
            break;
        }
        if (mpz_divisible_ui_p(rest.get_mpz_t(), static_cast<unsigned long>(p))) {
            rational.insert(p);
            mpz_class P(static_cast<long>(p));
            mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), P.get_mpz_t());
        }
    }
    if (rest != 1) {
        if (!rest.fits_slong_p() || !is_prime(rest.get_si())) {
            fail(ErrorKind::IncompleteSupport, "could not factor norm cofactor " + rest.get_str());
        }
        rational.insert(rest.get_si());
    }
    FactoredIdeal r;
    for (std::int64_t p : rational) {
        for (const auto& pr : factor_rational_prime(p, x.params())) {
            r.add(pr, valuation(x, pr));
        }
    }
    return r;
}

ResidueElem reduce_mod(const QFElem& x, const PrimeIdeal& prime)
{
    ResidueField field = prime.residue_field();
    if (x.is_zero()) {
        return ResidueElem(field, 0);
    }
    if (valuation(x, prime) < 0) {
        fail(ErrorKind::NegativeValuation, x.to_string() + " is not integral at " + prime.to_string());
    }
    const FieldParams& fp = x.params();
    mpz_class d = x.denominator();
    QFElem num = x * QFElem(fp, mpq_class(d), mpq_class(0));
    QFElem den(fp, mpq_class(d), mpq_class(0));
    long m = d == 1 ? 0 : ramification(prime) * vp(d, prime.p);
    if (m > 0) {
        QFElem pim = prime.gen.pow(m);
        num /= pim;
        den /= pim;
    }
    auto red = [&](const QFElem& y) {
        mpz_class c = y.ka().get_num(), e = y.kb().get_num();
        auto p = static_cast<unsigned long>(prime.p);
        auto c0 = static_cast<std::int64_t>(mpz_fdiv_ui(c.get_mpz_t(), p));
        auto c1 = static_cast<std::int64_t>(mpz_fdiv_ui(e.get_mpz_t(), p));
        return ResidueElem(field, c0, c1);
    };
    return red(num) / red(den);
}

// ---------------------------------------------------------------- units

std::vector<QFElem> unit_group(const FieldParams& params)
{
    std::vector<QFElem> u{QFElem(params, 1L, 0L), QFElem(params, -1L, 0L)};
    if (params.f == 1 && params.N == -1) {
        u.emplace_back(params, 0L, 1L);
        u.emplace_back(params, 0L, -1L);
    } else if (params.f == 1 && params.N == -3) {
        // w is a primitive sixth root of unity here
        u.emplace_back(params, 0L, 1L);
        u.emplace_back(params, 0L, -1L);
        u.emplace_back(params, -1L, 1L);
        u.emplace_back(params, 1L, -1L);
    }
    return u;
}

QFElem canonical_associate(const QFElem& x)
{
    if (x.is_zero() || !x.is_integral()) {
        fail(ErrorKind::NotIntegral, "canonical associate needs a nonzero integral element, got " + x.to_string());
    }
    QFElem best = x;
    auto key = [](const QFElem& y) { return std::make_tuple(sgn(y.a()), sgn(y.b())); };
    for (const auto& u : unit_group(x.params())) {
        QFElem y = u * x;
        auto ky = key(y), kb = key(best);
        if (ky > kb || (ky == kb && (y.a() > best.a() || (y.a() == best.a() && y.b() > best.b())))) {
            best = y;
        }
    }
    return best;
}

bool are_associates(const QFElem& x, const QFElem& y)
{
    if (x.is_zero() || y.is_zero()) {
        return x.is_zero() && y.is_zero();
    }
    QFElem q = y / x;
    for (const auto& u : unit_group(x.params())) {
        if (q == u) {
            return true;
        }
    }
    return false;
}

bool ideals_coprime(const QFElem& x, const QFElem& y)
{
    if (!x.is_integral() || !y.is_integral()) {
        fail(ErrorKind::NotIntegral, "coprimality test needs integral elements");
    }
    const FieldParams& fp = x.params();
    std::vector<std::pair<mpz_class, mpz_class>> v;
    for (const QFElem* e : {&x, &y}) {
        mpz_class c = e->ka().get_num(), d = e->kb().get_num();
        v.emplace_back(c, d);
        v.emplace_back(-d * fp.DK(), c + d * fp.AK());
    }
    mpz_class g = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            mpz_class m = v[i].first * v[j].second - v[i].second * v[j].first;
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.get_mpz_t());
        }
    }
    return g == 1;
}

}  // namespace cmnet
