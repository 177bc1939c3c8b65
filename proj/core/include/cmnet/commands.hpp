#ifndef CMNET_COMMANDS_HPP
#define CMNET_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cmnet/config.hpp"
#include "cmnet/net.hpp"
#include "cmnet/primes.hpp"
#include "cmnet/report.hpp"
#include "cmnet/theorems.hpp"

namespace cmnet {

/// A loaded config with its net and prime support.
struct Instance {
    InstanceConfig config;
    NetLattice net;
    std::vector<PrimeIdeal> support;

    explicit Instance(const InstanceConfig& cfg);
    const std::string& name() const { return config.name; }
    bool nonsingular_base(const PrimeIdeal& prime) const;
    /// 1 at primes where P and wP are nonsingular, else the annihilator generator.
    OrderElem annihilator(const PrimeIdeal& prime);
};

struct TableRow {
    Index v;
    CurvePoint point;
    QFElem B;        // canonical generator of the denominator ideal
    QFElem psi;
    FactoredIdeal F;
    QFElem psihat;   // Psi * generator(F)
    QFElem phi;
};

enum class TableFormat { Csv, Json };

/// Rows for 0 < max(|a|,|b|) <= box, sorted by (a, b).
std::vector<TableRow> table_rows(Instance& inst, std::int64_t box);
std::string cmd_table(Instance& inst, std::int64_t box, TableFormat format);

// Suites. Each default box is the one the acceptance checks use.
Report suite_net_axiom(Instance& inst, std::uint64_t seed, std::int64_t box = 3, int count = 500);
Report suite_oracles(Instance& inst, std::int64_t box = 3);
Report suite_gcd_theorem(Instance& inst, std::int64_t box = 6);
Report suite_heights(Instance& inst, std::int64_t box = 4);
Report suite_recurrence(Instance& inst, std::int64_t box = 3);
Report suite_change_of_basis(Instance& inst, std::int64_t box = 3);
Report suite_qf_recurrence(Instance& inst, std::int64_t box = 3);
Report suite_errata(Instance& inst, std::int64_t box = 6);

const std::vector<std::string>& suite_names();
/// suite is one of suite_names() or "all"; throws Config on an unknown name.
Report cmd_verify(Instance& inst, const std::string& suite, std::uint64_t seed, std::optional<std::int64_t> box);

long cmd_gvalue(Instance& inst, const std::string& z, const std::string& prime);

}  // namespace cmnet

#endif
