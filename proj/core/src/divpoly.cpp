#include "cmnet/divpoly.hpp"

#include "cmnet/error.hpp"

namespace cmnet {

DivisionSequence::DivisionSequence(const Curve& E, const CurvePoint& P) : E_(E), P_(P)
{
    if (P.infinity) {
        fail(ErrorKind::Precondition, "division polynomials at O");
    }
    const QFElem& x = P.x;
    const QFElem& y = P.y;
    const FieldParams& fp = E.params();
    memo_.emplace(0, QFElem(fp));
    memo_.emplace(1, QFElem(fp, 1L, 0L));
    QFElem psi2 = 2L * y + E.a1() * x + E.a3();
    memo_.emplace(2, psi2);
    QFElem x2 = x * x;
    QFElem x3 = x2 * x;
    QFElem x4 = x3 * x;
    memo_.emplace(3, 3L * x4 + E.b2() * x3 + 3L * E.b4() * x2 + 3L * E.b6() * x + E.b8());
    QFElem x5 = x4 * x;
    QFElem x6 = x5 * x;
    QFElem inner = 2L * x6 + E.b2() * x5 + 5L * E.b4() * x4 + 10L * E.b6() * x3 + 10L * E.b8() * x2 +
                   (E.b2() * E.b8() - E.b4() * E.b6()) * x + (E.b4() * E.b8() - E.b6() * E.b6());
    memo_.emplace(4, psi2 * inner);
}

const QFElem& DivisionSequence::psi(std::int64_t n)
{
    auto it = memo_.find(n);
    if (it != memo_.end()) {
        return it->second;
    }
    QFElem value;
    if (n < 0) {
        value = -psi(-n);
    } else {
        std::int64_t m = n / 2;
        if (n % 2 == 1) {
            QFElem a = psi(m + 2) * psi(m).pow(3);
            QFElem b = psi(m - 1) * psi(m + 1).pow(3);
            value = a - b;
        } else {
            const QFElem& psi2 = psi(2);
            if (psi2.is_zero()) {
                fail(ErrorKind::TorsionCollision, "psi_2(P) = 0, P has order two");
            }
            QFElem pm1 = psi(m - 1);
            QFElem pp1 = psi(m + 1);
            QFElem t = psi(m + 2) * pm1 * pm1 - psi(m - 2) * pp1 * pp1;
            value = psi(m) * t / psi2;
        }
    }
    return memo_.emplace(n, std::move(value)).first->second;
}

QFElem DivisionSequence::phi(std::int64_t n)
{
    QFElem p = psi(n);
    QFElem up = psi(n + 1);
    QFElem down = psi(n - 1);
    return P_.x * p * p - up * down;
}

QFElem psi_n(const Curve& E, const CurvePoint& P, std::int64_t n)
{
    DivisionSequence seq(E, P);
    return seq.psi(n);
}

QFElem phi_n(const Curve& E, const CurvePoint& P, std::int64_t n)
{
    DivisionSequence seq(E, P);
    return seq.phi(n);
}

bool verify_eds_recurrence(DivisionSequence& seq, std::int64_t n, std::int64_t m, std::int64_t r)
{
    if (!(n > m && m > r && r >= 1)) {
        fail(ErrorKind::Precondition, "EDS recurrence needs n > m > r >= 1");
    }
    QFElem pr = seq.psi(r), pm = seq.psi(m), pn = seq.psi(n);
    QFElem lhs = seq.psi(n + m) * seq.psi(n - m) * pr * pr;
    QFElem rhs = seq.psi(n + r) * seq.psi(n - r) * pm * pm - seq.psi(m + r) * seq.psi(m - r) * pn * pn;
    return lhs == rhs;
}

}  // namespace cmnet
