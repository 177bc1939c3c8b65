#ifndef CMNET_CURVE_HPP
#define CMNET_CURVE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "cmnet/order.hpp"
#include "cmnet/primes.hpp"
#include "cmnet/quadfield.hpp"

namespace cmnet {

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 with integral coefficients.
class Curve {
public:
    Curve(const QFElem& a1, const QFElem& a2, const QFElem& a3, const QFElem& a4, const QFElem& a6);
    static Curve short_form(const QFElem& a4, const QFElem& a6);

    const FieldParams& params() const { return a1_.params(); }
    const QFElem& a1() const { return a1_; }
    const QFElem& a2() const { return a2_; }
    const QFElem& a3() const { return a3_; }
    const QFElem& a4() const { return a4_; }
    const QFElem& a6() const { return a6_; }
    const QFElem& b2() const { return b2_; }
    const QFElem& b4() const { return b4_; }
    const QFElem& b6() const { return b6_; }
    const QFElem& b8() const { return b8_; }
    const QFElem& c4() const { return c4_; }
    const QFElem& discriminant() const { return disc_; }
    QFElem j_invariant() const;

    bool integral_at(const PrimeIdeal& prime) const;

private:
    QFElem a1_, a2_, a3_, a4_, a6_;
    QFElem b2_, b4_, b6_, b8_, c4_, disc_;
};

struct CurvePoint {
    bool infinity = true;
    QFElem x;
    QFElem y;

    static CurvePoint at_infinity() { return CurvePoint{}; }
    static CurvePoint affine(const QFElem& x, const QFElem& y) { return CurvePoint{false, x, y}; }

    friend bool operator==(const CurvePoint& P, const CurvePoint& Q)
    {
        if (P.infinity || Q.infinity) {
            return P.infinity == Q.infinity;
        }
        return P.x == Q.x && P.y == Q.y;
    }
    friend bool operator!=(const CurvePoint& P, const CurvePoint& Q) { return !(P == Q); }
    std::string to_string() const;
};

bool on_curve(const Curve& E, const CurvePoint& P);
CurvePoint point_neg(const Curve& E, const CurvePoint& P);
CurvePoint point_add(const Curve& E, const CurvePoint& P, const CurvePoint& Q);
/// Chord-tangent addition without the on-curve checks.
CurvePoint point_add_unchecked(const Curve& E, const CurvePoint& P, const CurvePoint& Q);
CurvePoint point_mul(const Curve& E, std::int64_t n, const CurvePoint& P);

/// (P, Q) with Q standing in for [w]P.
struct BasePair {
    Curve curve;
    CurvePoint P;
    CurvePoint Q;

    BasePair(const Curve& E, const CurvePoint& P_, const CurvePoint& Q_);
    const FieldParams& params() const { return curve.params(); }
};

CurvePoint linear_combination(const BasePair& B, std::int64_t a, std::int64_t b);

/// j-invariants of the class-number-one CM orders, keyed by discriminant.
std::optional<mpz_class> cm_j_invariant(std::int64_t disc);

enum class CmCheck { Consistent, Inconsistent, Unknown };
/// Compares j(E) with the j-invariant of Z[w] when that order has class number one.
CmCheck check_cm_consistency(const Curve& E);

struct ReducedPoint {
    bool infinity = true;
    ResidueElem x;
    ResidueElem y;

    friend bool operator==(const ReducedPoint& P, const ReducedPoint& Q)
    {
        if (P.infinity || Q.infinity) {
            return P.infinity == Q.infinity;
        }
        return P.x == Q.x && P.y == Q.y;
    }
};

struct ReducedCurve {
    std::array<ResidueElem, 5> a;  // a1 a2 a3 a4 a6
};

ReducedCurve reduce_curve(const Curve& E, const PrimeIdeal& prime);
ReducedPoint reduce_point(const Curve& E, const CurvePoint& P, const PrimeIdeal& prime);
bool reduced_is_singular(const ReducedCurve& C, const ReducedPoint& P);
/// Group law on nonsingular reduced points.
ReducedPoint reduced_add(const ReducedCurve& C, const ReducedPoint& P, const ReducedPoint& Q);

bool is_singular_reduction(const Curve& E, const CurvePoint& P, const PrimeIdeal& prime);
long filtration_level(const Curve& E, const CurvePoint& P, const PrimeIdeal& prime);
OrderElem annihilator_generator(const BasePair& B, const PrimeIdeal& prime, std::int64_t norm_bound);

}  // namespace cmnet

#endif
