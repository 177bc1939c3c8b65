// cmnet: tables, verifier sweeps and single g-values for one instance config.
//
//   cmnet table  --config F [--box R] [--format csv|json]
//   cmnet verify --config F [--suite S] [--seed N] [--box R] [--quiet]
//   cmnet gvalue --config F --z ELEM --prime SPEC
//
// Exit codes: 0 pass, 1 failure, 2 config error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cmnet/commands.hpp"
#include "cmnet/error.hpp"

namespace {

bool is_config_error(cmnet::ErrorKind k)
{
    using cmnet::ErrorKind;
    switch (k) {
    case ErrorKind::Config:
    case ErrorKind::Parse:
    case ErrorKind::InvalidParams:
    case ErrorKind::InvalidCurve:
    case ErrorKind::InvalidBasePair:
    case ErrorKind::NotOnCurve:
        return true;
    default:
        return false;
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"CM elliptic nets: tables, valuation formulas and recurrence checks"};
    app.require_subcommand(1);

    std::string config;
    std::int64_t box = -1;
    std::string format = "csv";
    std::string suite = "all";
    std::uint64_t seed = 20240601;
    bool quiet = false;
    std::string z, prime;

    auto* table = app.add_subcommand("table", "print the net table for the box");
    table->add_option("--config", config, "instance config")->required()->check(CLI::ExistingFile);
    table->add_option("--box", box, "index radius (default: [sweep] box)");
    table->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    auto* verify = app.add_subcommand("verify", "run verifier suites and print a JSON report");
    verify->add_option("--config", config, "instance config")->required()->check(CLI::ExistingFile);
    std::vector<std::string> suites = cmnet::suite_names();
    suites.push_back("all");
    verify->add_option("--suite", suite, "suite name or all")->check(CLI::IsMember(suites));
    verify->add_option("--seed", seed, "seed for the randomised suites");
    verify->add_option("--box", box, "index radius (default: per suite)");
    verify->add_flag("--quiet", quiet, "list only failures and skips");

    auto* gvalue = app.add_subcommand("gvalue", "print g_{z,p} = min(2 nu(Psi_z), nu(Phi_z))");
    gvalue->add_option("--config", config, "instance config")->required()->check(CLI::ExistingFile);
    gvalue->add_option("--z", z, "index, e.g. 2+2*w")->required();
    gvalue->add_option("--prime", prime, "generator, or p=..;kind=..;gen=..")->required();

    CLI11_PARSE(app, argc, argv);

    std::optional<cmnet::Instance> inst;
    try {
        inst.emplace(cmnet::load_config(config));
    } catch (const cmnet::Error& e) {
        std::cerr << config << ": " << e.what() << "\n";
        return 2;
    }

    try {
        if (*table) {
            std::int64_t r = box >= 0 ? box : inst->config.box;
            std::cout << cmnet::cmd_table(*inst, r, format == "json" ? cmnet::TableFormat::Json
                                                                      : cmnet::TableFormat::Csv);
            return 0;
        }
        if (*verify) {
            std::optional<std::int64_t> r;
            if (box >= 0) {
                r = box;
            }
            cmnet::Report rep = cmnet::cmd_verify(*inst, suite, seed, r);
            std::cout << rep.to_json(!quiet) << "\n";
            std::cerr << rep.summary() << "\n";
            return rep.ok() ? 0 : 1;
        }
        std::cout << cmnet::cmd_gvalue(*inst, z, prime) << "\n";
        return 0;
    } catch (const cmnet::Error& e) {
        std::cerr << e.what() << "\n";
        return is_config_error(e.kind()) ? 2 : 1;
    }
}
