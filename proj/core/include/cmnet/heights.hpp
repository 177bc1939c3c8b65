#ifndef CMNET_HEIGHTS_HPP
#define CMNET_HEIGHTS_HPP

#include <string>

#include <gmpxx.h>

#include "cmnet/net.hpp"
#include "cmnet/primes.hpp"

namespace cmnet {

/// lambda - nu(Delta)/12 at a nonsingular point: max(-nu(x), 0) / 2.
mpq_class lambda_tilde(const Curve& E, const CurvePoint& P, const PrimeIdeal& prime);

struct HeightCheck {
    mpq_class lhs;
    mpq_class rhs;
    bool pass = false;
};

/// l(P+Q) + l(P-Q) = 2 l(P) + 2 l(Q) + nu(x(P) - x(Q)). Throws Precondition or
/// SingularPoint when the identity is out of reach.
HeightCheck verify_quasi_parallelogram(const Curve& E, const CurvePoint& P, const CurvePoint& Q,
                                       const PrimeIdeal& prime);

/// l(vP) = a^2 l(P) + b^2 l(Q) + ab (l(P+Q) - l(P) - l(Q)) + nu(Psi_v).
HeightCheck verify_height_net_identity(NetLattice& L, const Index& v, const PrimeIdeal& prime);

/// l([m]P) = m^2 l(P) + nu(psi_m(P)).
HeightCheck verify_multiplication_height(DivisionSequence& seq, std::int64_t m, const PrimeIdeal& prime);

struct MuTriple {
    long mu = 0;
    long mu_w = 0;
    long mu_1w = 0;
    friend bool operator==(const MuTriple& x, const MuTriple& y)
    {
        return x.mu == y.mu && x.mu_w == y.mu_w && x.mu_1w == y.mu_1w;
    }
};

/// g-values at r, rw, r(1+w); throws NotAnnihilating unless [r]P is nonsingular.
MuTriple mu_triple(NetLattice& L, const OrderElem& r, const PrimeIdeal& prime);

}  // namespace cmnet

#endif
