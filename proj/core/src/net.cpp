#include "cmnet/net.hpp"

#include <sstream>

#include "cmnet/error.hpp"

namespace cmnet {

NetLattice::NetLattice(const BasePair& base) : base_(base), seqP_(base.curve, base.P), seqQ_(base.curve, base.Q) {}

const CurvePoint& NetLattice::point(std::int64_t a, std::int64_t b)
{
    Index key{a, b};
    auto it = pts_.find(key);
    if (it != pts_.end()) {
        return it->second;
    }
    CurvePoint R;
    const Curve& E = base_.curve;
    if (a == 0 && b == 0) {
        R = CurvePoint::at_infinity();
    } else if (a < 0 || (a == 0 && b < 0)) {
        R = point_neg(E, point(-a, -b));
    } else if (a == 0) {
        R = point_add_unchecked(E, point(0, b - 1), base_.Q);
    } else {
        R = point_add_unchecked(E, point(a - 1, b), base_.P);
    }
    return pts_.emplace(key, std::move(R)).first->second;
}

QFElem NetLattice::x_of(std::int64_t a, std::int64_t b)
{
    const CurvePoint& R = point(a, b);
    if (R.infinity) {
        fail(ErrorKind::TorsionCollision, "ladder passes through O at (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    return R.x;
}

// Psi_{v+e} Psi_{v-e} = -Psi_v^2 (x(vP) - x(eP)) for e = (0,1), Psi_e = 1
QFElem NetLattice::ladder_second_axis(std::int64_t a, std::int64_t b)
{
    std::int64_t s = b > 0 ? 1 : -1;
    const QFElem& far = psi(a, b - 2 * s);
    if (far.is_zero()) {
        fail(ErrorKind::TorsionCollision, "both ladders divide by zero at (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    QFElem mid = psi(a, b - s);
    return -(mid * mid) * (x_of(a, b - s) - base_.Q.x) / far;
}

QFElem NetLattice::ladder(std::int64_t a, std::int64_t b)
{
    const FieldParams& fp = params();
    if (a == 0) {
        return seqQ_.psi(b);
    }
    if (b == 0) {
        return seqP_.psi(a);
    }
    if (a == 1) {
        if (b == 1) {
            return QFElem(fp, 1L, 0L);
        }
        if (b == -1) {
            return base_.Q.x - base_.P.x;
        }
        std::int64_t s = b > 1 ? 1 : -1;
        const QFElem& far = psi(1, b - 2 * s);
        if (far.is_zero()) {
            fail(ErrorKind::TorsionCollision, "row ladder divides by zero at (1," + std::to_string(b) + ")");
        }
        QFElem mid = psi(1, b - s);
        return -(mid * mid) * (x_of(1, b - s) - base_.Q.x) / far;
    }
    const QFElem& far = psi(a - 2, b);
    if (far.is_zero()) {
        if (b >= 2 || b <= -2) {
            return ladder_second_axis(a, b);
        }
        fail(ErrorKind::TorsionCollision, "ladder divides by zero at (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    QFElem mid = psi(a - 1, b);
    return -(mid * mid) * (x_of(a - 1, b) - base_.P.x) / far;
}

const QFElem& NetLattice::psi(std::int64_t a, std::int64_t b)
{
    Index key{a, b};
    auto it = psi_.find(key);
    if (it != psi_.end()) {
        return it->second;
    }
    QFElem value = (a < 0 || (a == 0 && b < 0)) ? -psi(-a, -b) : ladder(a, b);
    return psi_.emplace(key, std::move(value)).first->second;
}

QFElem NetLattice::phi(std::int64_t a, std::int64_t b)
{
    QFElem p = psi(a, b);
    QFElem up = psi(a + 1, b);
    QFElem down = psi(a - 1, b);
    return p * p * base_.P.x - up * down;
}

void NetLattice::fill(std::int64_t radius)
{
    for (std::int64_t a = -radius - 1; a <= radius + 1; ++a) {
        for (std::int64_t b = -radius; b <= radius; ++b) {
            psi(a, b);
        }
    }
}

bool verify_net_axiom(NetLattice& L, const Index& p, const Index& q, const Index& r, const Index& s)
{
    auto add = [](const Index& u, const Index& v) { return Index{u.first + v.first, u.second + v.second}; };
    auto sub = [](const Index& u, const Index& v) { return Index{u.first - v.first, u.second - v.second}; };
    auto W = [&L](const Index& v) { return L.psi(v); };
    QFElem t1 = W(add(add(p, q), s)) * W(sub(p, q)) * W(add(r, s)) * W(r);
    QFElem t2 = W(add(add(q, r), s)) * W(sub(q, r)) * W(add(p, s)) * W(p);
    QFElem t3 = W(add(add(r, p), s)) * W(sub(r, p)) * W(add(q, s)) * W(q);
    return (t1 + t2 + t3).is_zero();
}

ChangeOfBasisResult verify_change_of_basis(NetLattice& L, const OrderElem& alpha, const OrderElem& beta)
{
    const FieldParams& fp = L.params();
    OrderElem w(fp, 0, 1);
    OrderElem aw = alpha * w;
    OrderElem a1w = alpha * OrderElem(fp, 1, 1);
    const CurvePoint& Pa = L.point(alpha);
    const CurvePoint& Paw = L.point(aw);
    if (Pa.infinity || Paw.infinity || Pa.x == Paw.x) {
        fail(ErrorKind::DegenerateTransformedPair, "([a]P, [aw]P) is not a valid base pair for a = " + alpha.to_string());
    }
    NetLattice T(BasePair(L.base().curve, Pa, Paw));
    const std::int64_t c = beta.a, d = beta.b;
    auto power = [](const QFElem& x, std::int64_t e) {
        if (e < 0 && x.is_zero()) {
            fail(ErrorKind::DegenerateTransformedPair, "negative power of a vanishing net value");
        }
        return x.pow(e);
    };
    ChangeOfBasisResult r;
    r.lhs = L.psi(alpha * beta);
    r.rhs = T.psi(c, d) * power(L.psi(alpha), c * c - c * d) * power(L.psi(aw), d * d - c * d) *
            power(L.psi(a1w), c * d);
    r.pass = r.lhs == r.rhs;
    return r;
}

std::string net_csv(NetLattice& L, std::int64_t radius)
{
    std::ostringstream os;
    os << "a,b,psi,phi\n";
    for (std::int64_t a = -radius; a <= radius; ++a) {
        for (std::int64_t b = -radius; b <= radius; ++b) {
            os << a << ',' << b << ',' << L.psi(a, b).to_string() << ',' << L.phi(a, b).to_string() << '\n';
        }
    }
    return os.str();
}

}  // namespace cmnet
