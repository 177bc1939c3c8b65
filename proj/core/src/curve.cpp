#include "cmnet/curve.hpp"

#include <map>

#include "cmnet/error.hpp"
#include "int128.hpp"

namespace cmnet {

Curve::Curve(const QFElem& a1, const QFElem& a2, const QFElem& a3, const QFElem& a4, const QFElem& a6)
    : a1_(a1), a2_(a2), a3_(a3), a4_(a4), a6_(a6)
{
    for (const QFElem* c : {&a1_, &a2_, &a3_, &a4_, &a6_}) {
        if (c->params() != a1_.params()) {
            fail(ErrorKind::ParamsMismatch, "curve coefficients from different fields");
        }
        if (!c->is_integral()) {
            fail(ErrorKind::InvalidCurve, "coefficient " + c->to_string() + " is not integral");
        }
    }
    b2_ = a1_ * a1_ + 4L * a2_;
    b4_ = 2L * a4_ + a1_ * a3_;
    b6_ = a3_ * a3_ + 4L * a6_;
    b8_ = a1_ * a1_ * a6_ + 4L * a2_ * a6_ - a1_ * a3_ * a4_ + a2_ * a3_ * a3_ - a4_ * a4_;
    c4_ = b2_ * b2_ - 24L * b4_;
    disc_ = -(b2_ * b2_ * b8_) - 8L * b4_ * b4_ * b4_ - 27L * b6_ * b6_ + 9L * b2_ * b4_ * b6_;
    if (disc_.is_zero()) {
        fail(ErrorKind::InvalidCurve, "singular Weierstrass equation (zero discriminant)");
    }
}

Curve Curve::short_form(const QFElem& a4, const QFElem& a6)
{
    QFElem zero(a4.params());
    return Curve(zero, zero, zero, a4, a6);
}

QFElem Curve::j_invariant() const
{
    return c4_ * c4_ * c4_ / disc_;
}

bool Curve::integral_at(const PrimeIdeal& prime) const
{
    for (const QFElem* c : {&a1_, &a2_, &a3_, &a4_, &a6_}) {
        if (!c->is_zero() && valuation(*c, prime) < 0) {
            return false;
        }
    }
    return true;
}

std::string CurvePoint::to_string() const
{
    if (infinity) {
        return "O";
    }
    return "(" + x.to_string() + ", " + y.to_string() + ")";
}

bool on_curve(const Curve& E, const CurvePoint& P)
{
    if (P.infinity) {
        return true;
    }
    const QFElem& x = P.x;
    const QFElem& y = P.y;
    QFElem lhs = y * y + E.a1() * x * y + E.a3() * y;
    QFElem rhs = x * x * x + E.a2() * x * x + E.a4() * x + E.a6();
    return lhs == rhs;
}

CurvePoint point_neg(const Curve& E, const CurvePoint& P)
{
    if (P.infinity) {
        return P;
    }
    return CurvePoint::affine(P.x, -P.y - E.a1() * P.x - E.a3());
}

CurvePoint point_add_unchecked(const Curve& E, const CurvePoint& P, const CurvePoint& Q)
{
    if (P.infinity) {
        return Q;
    }
    if (Q.infinity) {
        return P;
    }
    QFElem lambda;
    if (P.x == Q.x) {
        QFElem s = P.y + Q.y + E.a1() * Q.x + E.a3();
        if (s.is_zero()) {
            return CurvePoint::at_infinity();
        }
        lambda = (3L * P.x * P.x + 2L * E.a2() * P.x + E.a4() - E.a1() * P.y) / (2L * P.y + E.a1() * P.x + E.a3());
    } else {
        lambda = (Q.y - P.y) / (Q.x - P.x);
    }
    QFElem nu = P.y - lambda * P.x;
    QFElem x3 = lambda * lambda + E.a1() * lambda - E.a2() - P.x - Q.x;
    QFElem y3 = -(lambda + E.a1()) * x3 - nu - E.a3();
    return CurvePoint::affine(x3, y3);
}

CurvePoint point_add(const Curve& E, const CurvePoint& P, const CurvePoint& Q)
{
    if (!on_curve(E, P) || !on_curve(E, Q)) {
        fail(ErrorKind::NotOnCurve, "point_add operand is not on the curve");
    }
    return point_add_unchecked(E, P, Q);
}

CurvePoint point_mul(const Curve& E, std::int64_t n, const CurvePoint& P)
{
    CurvePoint base = n < 0 ? point_neg(E, P) : P;
    auto k = static_cast<std::uint64_t>(n < 0 ? -static_cast<i128>(n) : n);
    CurvePoint acc = CurvePoint::at_infinity();
    while (k > 0) {
        if (k & 1U) {
            acc = point_add_unchecked(E, acc, base);
        }
        k >>= 1U;
        if (k > 0) {
            base = point_add_unchecked(E, base, base);
        }
    }
    return acc;
}

BasePair::BasePair(const Curve& E, const CurvePoint& P_, const CurvePoint& Q_) : curve(E), P(P_), Q(Q_)
{
    if (P.infinity || Q.infinity) {
        fail(ErrorKind::InvalidBasePair, "base points must be affine");
    }
    if (P.x.params() != E.params() || Q.x.params() != E.params()) {
        fail(ErrorKind::ParamsMismatch, "base points and curve over different fields");
    }
    if (!on_curve(E, P)) {
        fail(ErrorKind::NotOnCurve, "P = " + P.to_string() + " is not on the curve");
    }
    if (!on_curve(E, Q)) {
        fail(ErrorKind::NotOnCurve, "wP = " + Q.to_string() + " is not on the curve");
    }
    if (P.x == Q.x) {
        fail(ErrorKind::InvalidBasePair, "x(P) = x(wP)");
    }
}

CurvePoint linear_combination(const BasePair& B, std::int64_t a, std::int64_t b)
{
    return point_add_unchecked(B.curve, point_mul(B.curve, a, B.P), point_mul(B.curve, b, B.Q));
}

std::optional<mpz_class> cm_j_invariant(std::int64_t disc)
{
    static const std::map<std::int64_t, const char*> table{
        {-3, "0"},
        {-4, "1728"},
        {-7, "-3375"},
        {-8, "8000"},
        {-11, "-32768"},
        {-12, "54000"},
        {-16, "287496"},
        {-19, "-884736"},
        {-27, "-12288000"},
        {-28, "16581375"},
        {-43, "-884736000"},
        {-67, "-147197952000"},
        {-163, "-262537412640768000"},
    };
    auto it = table.find(disc);
    if (it == table.end()) {
        return std::nullopt;
    }
    return mpz_class(it->second);
}

CmCheck check_cm_consistency(const Curve& E)
{
    const FieldParams& fp = E.params();
    std::int64_t disc = fp.f * fp.f * fp.disc_K();
    auto j = cm_j_invariant(disc);
    if (!j) {
        return CmCheck::Unknown;
    }
    return E.j_invariant() == QFElem(fp, mpq_class(*j), mpq_class(0)) ? CmCheck::Consistent : CmCheck::Inconsistent;
}

ReducedCurve reduce_curve(const Curve& E, const PrimeIdeal& prime)
{
    if (!E.integral_at(prime)) {
        fail(ErrorKind::NonIntegralModel, "curve is not integral at " + prime.to_string());
    }
    return ReducedCurve{{reduce_mod(E.a1(), prime), reduce_mod(E.a2(), prime), reduce_mod(E.a3(), prime),
                         reduce_mod(E.a4(), prime), reduce_mod(E.a6(), prime)}};
}

ReducedPoint reduce_point(const Curve& E, const CurvePoint& P, const PrimeIdeal& prime)
{
    if (!E.integral_at(prime)) {
        fail(ErrorKind::NonIntegralModel, "curve is not integral at " + prime.to_string());
    }
    ReducedPoint r;
    if (P.infinity || (!P.x.is_zero() && valuation(P.x, prime) < 0)) {
        return r;
    }
    r.infinity = false;
    r.x = reduce_mod(P.x, prime);
    r.y = reduce_mod(P.y, prime);
    return r;
}

bool reduced_is_singular(const ReducedCurve& C, const ReducedPoint& P)
{
    if (P.infinity) {
        return false;
    }
    const auto& [a1, a2, a3, a4, a6] = C.a;
    const ResidueElem& x = P.x;
    const ResidueElem& y = P.y;
    ResidueElem three(x.field(), 3), two(x.field(), 2);
    ResidueElem fx = a1 * y - three * x * x - two * a2 * x - a4;
    ResidueElem fy = two * y + a1 * x + a3;
    return fx.is_zero() && fy.is_zero();
}

ReducedPoint reduced_add(const ReducedCurve& C, const ReducedPoint& P, const ReducedPoint& Q)
{
    if (P.infinity) {
        return Q;
    }
    if (Q.infinity) {
        return P;
    }
    if (reduced_is_singular(C, P) || reduced_is_singular(C, Q)) {
        fail(ErrorKind::SingularPoint, "group law on a singular reduced point");
    }
    const auto& [a1, a2, a3, a4, a6] = C.a;
    ResidueElem lambda;
    ResidueElem two(P.x.field(), 2), three(P.x.field(), 3);
    if (P.x == Q.x) {
        ResidueElem s = P.y + Q.y + a1 * Q.x + a3;
        if (s.is_zero()) {
            return ReducedPoint{};
        }
        lambda = (three * P.x * P.x + two * a2 * P.x + a4 - a1 * P.y) / (two * P.y + a1 * P.x + a3);
    } else {
        lambda = (Q.y - P.y) / (Q.x - P.x);
    }
    ResidueElem nu = P.y - lambda * P.x;
    ReducedPoint r;
    r.infinity = false;
    r.x = lambda * lambda + a1 * lambda - a2 - P.x - Q.x;
    r.y = -(lambda + a1) * r.x - nu - a3;
    return r;
}

bool is_singular_reduction(const Curve& E, const CurvePoint& P, const PrimeIdeal& prime)
{
    ReducedPoint r = reduce_point(E, P, prime);
    if (r.infinity) {
        return false;
    }
    return reduced_is_singular(reduce_curve(E, prime), r);
}

long filtration_level(const Curve& E, const CurvePoint& P, const PrimeIdeal& prime)
{
    if (is_singular_reduction(E, P, prime)) {
        fail(ErrorKind::SingularPoint, P.to_string() + " is singular at " + prime.to_string());
    }
    if (P.infinity) {
        fail(ErrorKind::Precondition, "filtration level of O is unbounded");
    }
    long v = P.x.is_zero() ? 0 : valuation(P.x, prime);
    return v >= 0 ? 0 : (-v) / 2;
}

OrderElem annihilator_generator(const BasePair& B, const PrimeIdeal& prime, std::int64_t norm_bound)
{
    for (const OrderElem& r : ord_enumerate_by_norm(B.params(), norm_bound)) {
        CurvePoint R = linear_combination(B, r.a, r.b);
        if (!is_singular_reduction(B.curve, R, prime)) {
            return r;
        }
    }
    fail(ErrorKind::BoundExceeded,
         "no annihilator of norm <= " + std::to_string(norm_bound) + " at " + prime.to_string());
}

}  // namespace cmnet
