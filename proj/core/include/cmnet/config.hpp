#ifndef CMNET_CONFIG_HPP
#define CMNET_CONFIG_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "cmnet/curve.hpp"
#include "cmnet/quadfield.hpp"

namespace cmnet {

/// One instance: field, curve, base pair, support primes and sweep defaults.
///
///   [field]    N, f
///   [curve]    a1 a2 a3 a4 a6          (ELEM grammar, missing keys are 0)
///   [point]    P.x P.y omegaP.x omegaP.y
///   [support]  primes = 2, 3           (rational primes; optional)
///   [sweep]    box, norm_bound         (optional)
///
/// '#' starts a comment. Errors carry the offending line number.
struct InstanceConfig {
    std::string name;
    FieldParams params;
    std::array<QFElem, 5> a;   // a1 a2 a3 a4 a6
    QFElem Px, Py, Qx, Qy;
    std::vector<std::int64_t> support;
    std::int64_t box = 3;
    std::int64_t norm_bound = 200;

    Curve curve() const;
    BasePair base_pair() const;
};

InstanceConfig parse_config(const std::string& text, const std::string& name = "instance");
InstanceConfig load_config(const std::string& path);

}  // namespace cmnet

#endif
