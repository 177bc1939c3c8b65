#include <random>

#include "cmnet/primes.hpp"
#include "doctest.h"
#include "expect.hpp"
#include "oracles.hpp"

using namespace cmnet;
using oracle::ev;
using oracle::kind_of;

namespace {
const FieldParams Zi = FieldParams::make(-1);
const FieldParams Z2 = FieldParams::make(-2);
}  // namespace

TEST_CASE("primes above rational primes")
{
    auto two = factor_rational_prime(2, Zi);
    REQUIRE(two.size() == 1);
    CHECK(two[0].kind == PrimeKind::Ramified);
    CHECK(are_associates(two[0].gen, ev(Zi, "1+i")));

    auto three = factor_rational_prime(3, Z2);
    REQUIRE(three.size() == 2);
    CHECK(three[0].kind == PrimeKind::Split);
    CHECK(three[0] != three[1]);
    bool plus = are_associates(three[0].gen, ev(Z2, "1+w")) || are_associates(three[1].gen, ev(Z2, "1+w"));
    bool minus = are_associates(three[0].gen, ev(Z2, "1-w")) || are_associates(three[1].gen, ev(Z2, "1-w"));
    CHECK(plus);
    CHECK(minus);

    auto inert = factor_rational_prime(3, Zi);
    REQUIRE(inert.size() == 1);
    CHECK(inert[0].kind == PrimeKind::Inert);
    CHECK(inert[0].residue_degree == 2);
    CHECK(inert[0].gen.norm() == 9);

    CHECK(kronecker_kind(-4, 5) == 1);
    CHECK(kronecker_kind(-4, 7) == -1);
    CHECK(kronecker_kind(-8, 2) == 0);
    // class number two: no element of norm 2 or 3 in Z[sqrt-5]
    CHECK(kind_of([] { factor_rational_prime(3, FieldParams::make(-5)); }) == ErrorKind::GeneratorNotFound);
}

TEST_CASE("prime identity and text")
{
    PrimeIdeal a = prime_from_generator(ev(Z2, "1-w"));
    PrimeIdeal b = prime_from_generator(ev(Z2, "-1+w"));
    CHECK(a == b);
    CHECK(a != prime_from_generator(ev(Z2, "1+w")));
    PrimeIdeal c = parse_prime_spec(Z2, a.to_string());
    CHECK(c == a);
    CHECK(parse_prime_spec(Z2, "0+1*w").kind == PrimeKind::Ramified);
    CHECK(kind_of([] { parse_prime_spec(Z2, "p=5;gen=1-1*w"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_prime_spec(Z2, "p=3;kind=inert;gen=1-1*w"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { parse_prime_spec(Z2, "p=3"); }) == ErrorKind::Parse);
}

TEST_CASE("valuations")
{
    PrimeIdeal w = prime_from_generator(QFElem::w(Z2));
    PrimeIdeal m = prime_from_generator(ev(Z2, "1-w"));
    CHECK(valuation(QFElem(Z2, 20L), w) == 4);
    CHECK(valuation(QFElem(Z2, 1L), m) == 0);
    CHECK(valuation(ev(Z2, "(1-w)^4"), m) == 4);
    CHECK(valuation(ev(Z2, "(1+w)/(1-w)^3"), m) == -3);
    CHECK(kind_of([&] { valuation(QFElem(Z2), w); }) == ErrorKind::ZeroElement);
    CHECK(rational_valuation(mpz_class(48), 2) == 4);
}

TEST_CASE("factored ideals")
{
    FactoredIdeal two = element_ideal(QFElem(Zi, 2L), {2});
    PrimeIdeal pi = prime_from_generator(ev(Zi, "1+i"));
    CHECK(two == FactoredIdeal(pi, 2));
    CHECK(two.d_p(pi) == 2);
    CHECK(FactoredIdeal().d_p(pi) == 0);
    CHECK(FactoredIdeal(pi, 3).d_p(pi) == 3);

    FactoredIdeal x = element_ideal(ev(Z2, "-3/(1-w)"), {3});
    CHECK(x == FactoredIdeal(prime_from_generator(ev(Z2, "1+w")), 1));
    CHECK(element_ideal(ev(Z2, "w^4"), {2}) == FactoredIdeal(prime_from_generator(QFElem::w(Z2)), 4));
    CHECK(d_p(element_ideal(QFElem(Z2, 20L), {2, 5}), prime_from_generator(QFElem::w(Z2))) == 4);

    FactoredIdeal y = FactoredIdeal(pi, 2) * FactoredIdeal(pi, -2);
    CHECK(y.is_unit());
    CHECK(FactoredIdeal(pi, 1).inverse() == FactoredIdeal(pi, -1));
    CHECK(FactoredIdeal(pi, 2).pow(3) == FactoredIdeal(pi, 6));
    CHECK_FALSE(FactoredIdeal(pi, -1).is_integral());
    CHECK(are_associates(FactoredIdeal(pi, 2).generator(Zi), QFElem(Zi, 2L)));

    CHECK(kind_of([] {
              FactorOptions o;
              o.strict = true;
              element_ideal(QFElem(Zi, 15L), {3}, o);
          }) == ErrorKind::IncompleteSupport);
    CHECK(kind_of([] { element_ideal(QFElem(Zi), {2}); }) == ErrorKind::ZeroElement);
}

TEST_CASE("residues")
{
    PrimeIdeal w = prime_from_generator(QFElem::w(Z2));
    ResidueElem r = reduce_mod(QFElem(Z2, -1L), w);
    CHECK(r.field().p == 2);
    CHECK(r == ResidueElem(r.field(), 1));

    // i = -2 mod (2+i), and 2 - i reduces to 0 there
    PrimeIdeal q = prime_from_generator(ev(Zi, "2+i"));
    ResidueElem ri = reduce_mod(QFElem::w(Zi), q);
    CHECK(ri == ResidueElem(ri.field(), 3));
    CHECK((ri * ri + ResidueElem(ri.field(), 1)).is_zero());

    PrimeIdeal three = factor_rational_prime(3, Zi)[0];
    CHECK(reduce_mod(QFElem(Zi, 3L), three).is_zero());
    ResidueElem t = reduce_mod(ev(Zi, "1+i"), three);
    CHECK(t * t.inverse() == ResidueElem(t.field(), 1));
    CHECK(kind_of([&] { reduce_mod(QFElem(Z2, mpq_class(1, 2)), w); }) == ErrorKind::NegativeValuation);
}

TEST_CASE("units and associates")
{
    CHECK(canonical_associate(QFElem(Z2, -3L)) == QFElem(Z2, 3L));
    QFElem c = canonical_associate(ev(Zi, "i(1+i)"));
    CHECK(are_associates(c, ev(Zi, "1+i")));
    CHECK(canonical_associate(c) == c);
    CHECK(unit_group(Zi).size() == 4);
    CHECK(unit_group(Z2).size() == 2);
    CHECK(unit_group(FieldParams::make(-3)).size() == 6);
    CHECK(kind_of([] { canonical_associate(QFElem(Zi, mpq_class(1, 2))); }) == ErrorKind::NotIntegral);
    CHECK(ideals_coprime(ev(Zi, "2+i"), ev(Zi, "2-i")));
    CHECK_FALSE(ideals_coprime(ev(Zi, "1+i"), ev(Zi, "1-i")));
}

TEST_CASE("valuation properties")
{
    std::mt19937_64 rng(99);
    for (const FieldParams& params : {Zi, Z2, FieldParams::make(-3), FieldParams::make(-7)}) {
        std::vector<PrimeIdeal> primes;
        for (std::int64_t p : {2, 3, 5, 7, 11}) {
            for (const PrimeIdeal& q : factor_rational_prime(p, params)) {
                primes.push_back(q);
            }
        }
        for (int k = 0; k < 120; ++k) {
            QFElem x = oracle::random_elem(rng, params, 30, 12);
            QFElem y = oracle::random_elem(rng, params, 30, 12);
            if (x.is_zero() || y.is_zero()) {
                continue;
            }
            for (const PrimeIdeal& q : primes) {
                long vx = valuation(x, q);
                CHECK(vx == valuation_by_division(x, q));
                CHECK(valuation(x * y, q) == vx + valuation(y, q));
                if (q.kind == PrimeKind::Split) {
                    PrimeIdeal qbar = prime_from_generator(q.gen.conj());
                    CHECK(valuation(x, qbar) == valuation(x.conj(), q));
                }
            }
            // residue degree times valuations over p add up to the p-adic valuation of the norm
            for (std::int64_t p : {2, 3, 5, 7, 11}) {
                long sum = 0;
                for (const PrimeIdeal& q : factor_rational_prime(p, params)) {
                    sum += q.residue_degree * valuation(x, q);
                }
                mpq_class n = x.norm();
                CHECK(sum == rational_valuation(n.get_num(), p) - rational_valuation(n.get_den(), p));
            }
            CHECK(element_ideal(x, {}) * element_ideal(y, {}) == element_ideal(x * y, {}));
        }
    }
}
