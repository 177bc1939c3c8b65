#ifndef CMNET_DIVPOLY_HPP
#define CMNET_DIVPOLY_HPP

#include <cstdint>
#include <map>

#include "cmnet/curve.hpp"

namespace cmnet {

/// psi_n(P) and phi_n(P) for one point, memoised. Filling the memo is not thread safe.
class DivisionSequence {
public:
    DivisionSequence(const Curve& E, const CurvePoint& P);

    const Curve& curve() const { return E_; }
    const CurvePoint& point() const { return P_; }

    const QFElem& psi(std::int64_t n);
    QFElem phi(std::int64_t n);

private:
    Curve E_;
    CurvePoint P_;
    std::map<std::int64_t, QFElem> memo_;
};

QFElem psi_n(const Curve& E, const CurvePoint& P, std::int64_t n);
QFElem phi_n(const Curve& E, const CurvePoint& P, std::int64_t n);

/// psi_{n+m} psi_{n-m} psi_r^2 = psi_{n+r} psi_{n-r} psi_m^2 - psi_{m+r} psi_{m-r} psi_n^2, n > m > r >= 1.
bool verify_eds_recurrence(DivisionSequence& seq, std::int64_t n, std::int64_t m, std::int64_t r);

}  // namespace cmnet

#endif
