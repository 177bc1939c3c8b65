#ifndef CMNET_ERRATA_HPP
#define CMNET_ERRATA_HPP

#include <cstdint>
#include <vector>

#include "cmnet/net.hpp"
#include "cmnet/primes.hpp"
#include "cmnet/report.hpp"

namespace cmnet {

/// Sign and index slips in commonly quoted forms, each re-checked on this instance:
///   gcd-good-form      max(0, -nu(x)) form vs the max(0, nu(x)) variant with flipped signs
///   psi-1-minus-1-sign Psi_(1,-1) = x(Q) - x(P), not x(P) - x(Q)
///   g-value-index    the g = -8 value at the prime (1-w) belongs to z = 2+2w, not 2+w
///   eds-sign           psi_{n+m}psi_{n-m}psi_r^2 = psi_{n+r}psi_{n-r}psi_m^2 - psi_{m+r}psi_{m-r}psi_n^2
std::vector<Finding> errata_findings(NetLattice& L, const std::vector<PrimeIdeal>& support, std::int64_t box);

Finding finding_gcd_good_form(NetLattice& L, const std::vector<PrimeIdeal>& support, std::int64_t box);
Finding finding_psi_sign(NetLattice& L);
Finding finding_example2_index(NetLattice& L, const std::vector<PrimeIdeal>& support);
Finding finding_eds_sign(NetLattice& L);

}  // namespace cmnet

#endif
