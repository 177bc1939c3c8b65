#ifndef CMNET_NET_HPP
#define CMNET_NET_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>

#include "cmnet/curve.hpp"
#include "cmnet/divpoly.hpp"
#include "cmnet/order.hpp"

namespace cmnet {

using Index = std::pair<std::int64_t, std::int64_t>;

/// Rank-two net Psi_(a,b), Phi_(a,b) and the points aP + bQ for one base pair.
/// Values are memoised; filling is single-writer.
class NetLattice {
public:
    explicit NetLattice(const BasePair& base);

    const BasePair& base() const { return base_; }
    const FieldParams& params() const { return base_.params(); }

    const QFElem& psi(std::int64_t a, std::int64_t b);
    const QFElem& psi(const Index& v) { return psi(v.first, v.second); }
    const QFElem& psi(const OrderElem& z) { return psi(z.a, z.b); }
    QFElem phi(std::int64_t a, std::int64_t b);
    QFElem phi(const OrderElem& z) { return phi(z.a, z.b); }
    const CurvePoint& point(std::int64_t a, std::int64_t b);
    const CurvePoint& point(const OrderElem& z) { return point(z.a, z.b); }

    // the sealed-box convention: fill everything with |a|, |b| <= radius
    void fill(std::int64_t radius);

private:
    QFElem ladder(std::int64_t a, std::int64_t b);
    QFElem ladder_second_axis(std::int64_t a, std::int64_t b);
    QFElem x_of(std::int64_t a, std::int64_t b);

    BasePair base_;
    DivisionSequence seqP_;
    DivisionSequence seqQ_;
    std::map<Index, QFElem> psi_;
    std::map<Index, CurvePoint> pts_;
};

/// W(p+q+s)W(p-q)W(r+s)W(r) + W(q+r+s)W(q-r)W(p+s)W(p) + W(r+p+s)W(r-p)W(q+s)W(q) = 0
bool verify_net_axiom(NetLattice& L, const Index& p, const Index& q, const Index& r, const Index& s);

struct ChangeOfBasisResult {
    QFElem lhs;
    QFElem rhs;
    bool pass = false;
};

/// psi_{ab}(P) against psi_b(aP) psi_a^{c^2-cd} psi_{aw}^{d^2-cd} psi_{a(1+w)}^{cd}, b = c + dw.
ChangeOfBasisResult verify_change_of_basis(NetLattice& L, const OrderElem& alpha, const OrderElem& beta);

/// Rows a,b,psi,phi for |a|,|b| <= radius.
std::string net_csv(NetLattice& L, std::int64_t radius);

}  // namespace cmnet

#endif
