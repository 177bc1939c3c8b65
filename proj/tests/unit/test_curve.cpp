#include <random>

#include "cmnet/curve.hpp"
#include "cmnet/error.hpp"
#include "doctest.h"
#include "expect.hpp"
#include "oracles.hpp"

using namespace cmnet;
using oracle::ev;
using oracle::kind_of;

namespace {

const FieldParams Zi = FieldParams::make(-1);
const FieldParams Z2 = FieldParams::make(-2);

Curve curve1() { return oracle::example1().curve(); }
Curve curve2() { return oracle::example2().curve(); }

CurvePoint pt(const FieldParams& params, const std::string& x, const std::string& y)
{
    return CurvePoint::affine(ev(params, x), ev(params, y));
}

}  // namespace

TEST_CASE("curve invariants")
{
    Curve E = curve1();
    CHECK(E.discriminant() == QFElem(Zi, 512L));
    CHECK(E.j_invariant() == QFElem(Zi, 1728L));
    CHECK(check_cm_consistency(E) == CmCheck::Consistent);
    CHECK(check_cm_consistency(curve2()) == CmCheck::Consistent);
    CHECK(cm_j_invariant(-8) == mpz_class(8000));
    CHECK_FALSE(cm_j_invariant(-20).has_value());
    // y^2 = x^3 + 1 has j = 0, which is not the CM j-invariant of Z[i]
    Curve F = Curve::short_form(QFElem(Zi), QFElem(Zi, 1L));
    CHECK(check_cm_consistency(F) == CmCheck::Inconsistent);
    CHECK(kind_of([] { Curve::short_form(QFElem(Zi), QFElem(Zi)); }) == ErrorKind::InvalidCurve);
    CHECK(kind_of([] { Curve::short_form(QFElem(Zi, mpq_class(1, 2)), QFElem(Zi, 1L)); }) ==
          ErrorKind::InvalidCurve);
}

TEST_CASE("group law examples")
{
    Curve E = curve1();
    CurvePoint P = pt(Zi, "-1", "1");
    CHECK(point_add(E, P, CurvePoint::at_infinity()) == P);
    CHECK(point_add(E, P, P) == pt(Zi, "9/4", "-21/8"));
    CHECK(point_add(E, P, point_neg(E, P)).infinity);
    Curve E2 = curve2();
    CHECK(point_mul(E2, 2, pt(Z2, "-1", "2")) == pt(Z2, "5/4", "-7/8"));
    CHECK(kind_of([&] { point_add(E, P, pt(Zi, "0", "1")); }) == ErrorKind::NotOnCurve);
}

TEST_CASE("linear combinations")
{
    BasePair B1 = oracle::example1().base_pair();
    CHECK(linear_combination(B1, 1, 0) == B1.P);
    CHECK(linear_combination(B1, 1, 1) == pt(Zi, "-i/2", "(-3i-3)/4"));
    BasePair B2 = oracle::example2().base_pair();
    CHECK(linear_combination(B2, 2, 2).x == ev(Z2, "(-147-32w)/(w^4(1-w)^2(3-2w)^2)"));
    // w acting twice is multiplication by -2
    CHECK(linear_combination(B2, 0, 0).infinity);
    CHECK(kind_of([&] { BasePair(B2.curve, B2.P, B2.P); }) == ErrorKind::InvalidBasePair);
    CHECK(kind_of([&] { BasePair(B2.curve, B2.P, CurvePoint::at_infinity()); }) == ErrorKind::InvalidBasePair);
}

TEST_CASE("group law against the chord-tangent oracle")
{
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> c(-3, 3);
    for (const auto& cfg : {oracle::example1(), oracle::example2()}) {
        BasePair B = cfg.base_pair();
        for (int k = 0; k < 40; ++k) {
            int a = c(rng), b = c(rng), d = c(rng), e = c(rng);
            CurvePoint R = linear_combination(B, a, b);
            CurvePoint S = linear_combination(B, d, e);
            oracle::Pt r = oracle::combo(B, a, b);
            CHECK(R.infinity == r.inf);
            if (!R.infinity) {
                CHECK(R.x == r.x);
                CHECK(R.y == r.y);
                CHECK(on_curve(B.curve, R));
            }
            CHECK(point_add(B.curve, R, S) == point_add(B.curve, S, R));
            CHECK(point_add(B.curve, R, S) == linear_combination(B, a + d, b + e));
            CurvePoint T = linear_combination(B, c(rng), c(rng));
            CHECK(point_add(B.curve, point_add(B.curve, R, S), T) ==
                  point_add(B.curve, R, point_add(B.curve, S, T)));
            CHECK(point_add(B.curve, R, point_neg(B.curve, R)).infinity);
        }
    }
}

TEST_CASE("reduction and singularity")
{
    Curve E2 = curve2();
    PrimeIdeal w = prime_from_generator(QFElem::w(Z2));
    BasePair B2 = oracle::example2().base_pair();
    CHECK(reduce_point(E2, B2.Q, w).infinity);
    CHECK(is_singular_reduction(E2, B2.P, w));
    CHECK_FALSE(is_singular_reduction(E2, B2.Q, w));
    CHECK(is_singular_reduction(E2, linear_combination(B2, 1, 1), w));
    PrimeIdeal five = prime_from_generator(ev(Z2, "3+w"));
    CHECK_FALSE(is_singular_reduction(E2, B2.P, five));

    Curve E1 = curve1();
    PrimeIdeal pi = prime_from_generator(ev(Zi, "1+i"));
    ReducedPoint r = reduce_point(E1, pt(Zi, "-1", "1"), pi);
    REQUIRE_FALSE(r.infinity);
    CHECK(r.x == ResidueElem(r.x.field(), 1));
    CHECK(r.y == ResidueElem(r.y.field(), 1));

    CHECK(filtration_level(E2, B2.Q, w) == 1);
    CHECK(filtration_level(E1, pt(Zi, "-1", "1"), pi) == 0);
    CHECK(kind_of([&] { filtration_level(E2, B2.P, w); }) == ErrorKind::SingularPoint);

    Curve half = Curve::short_form(QFElem(Zi, -2L), QFElem(Zi, 1L));
    PrimeIdeal q = prime_from_generator(ev(Zi, "2+i"));
    CHECK(half.integral_at(q));
}

TEST_CASE("reduction is a homomorphism at good primes")
{
    BasePair B = oracle::example1().base_pair();
    PrimeIdeal q = prime_from_generator(ev(Zi, "2+i"));
    ReducedCurve C = reduce_curve(B.curve, q);
    for (int a = -2; a <= 2; ++a) {
        for (int b = -2; b <= 2; ++b) {
            CurvePoint R = linear_combination(B, a, b);
            CurvePoint S = linear_combination(B, b, 1);
            if (R.infinity || S.infinity) {
                continue;
            }
            if (is_singular_reduction(B.curve, R, q) || is_singular_reduction(B.curve, S, q)) {
                continue;
            }
            CurvePoint RS = point_add(B.curve, R, S);
            CHECK(reduce_point(B.curve, RS, q) ==
                  reduced_add(C, reduce_point(B.curve, R, q), reduce_point(B.curve, S, q)));
        }
    }
}

TEST_CASE("annihilators")
{
    BasePair B2 = oracle::example2().base_pair();
    PrimeIdeal w = prime_from_generator(QFElem::w(Z2));
    OrderElem r = annihilator_generator(B2, w, 200);
    CHECK(r.norm() == 2);
    CHECK(ord_divides(OrderElem(Z2, 0, 1), r));
    CHECK(kind_of([&] { annihilator_generator(B2, w, 0); }) == ErrorKind::BoundExceeded);
    PrimeIdeal m = prime_from_generator(ev(Z2, "1-w"));
    CHECK(annihilator_generator(B2, m, 200) == OrderElem(Z2, 1, 0));

    // the multiples of r stay nonsingular
    for (int a = -3; a <= 3; ++a) {
        for (int b = -3; b <= 3; ++b) {
            OrderElem z = ord_mul(r, OrderElem(Z2, a, b));
            CurvePoint R = linear_combination(B2, z.a, z.b);
            if (!R.infinity) {
                CHECK_FALSE(is_singular_reduction(B2.curve, R, w));
                long v = valuation(R.x, w);
                if (v < 0) {
                    CHECK(v % 2 == 0);
                    CHECK(2 * valuation(R.y, w) == 3 * v);
                }
            }
        }
    }
}
