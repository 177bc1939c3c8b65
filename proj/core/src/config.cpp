#include "cmnet/config.hpp"

#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "cmnet/error.hpp"

namespace cmnet {

namespace {

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
        return "";
    }
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

[[noreturn]] void config_error(int line, const std::string& what)
{
    fail(ErrorKind::Config, (line > 0 ? "line " + std::to_string(line) + ": " : std::string()) + what);
}

struct Entry {
    std::string value;
    int line = 0;
};

std::int64_t parse_int(const Entry& e, const std::string& key)
{
    try {
        std::size_t pos = 0;
        long long v = std::stoll(e.value, &pos);
        if (pos != e.value.size()) {
            throw std::invalid_argument(key);
        }
        return v;
    } catch (const std::exception&) {
        config_error(e.line, key + " expects an integer, got '" + e.value + "'");
    }
}

}  // namespace

Curve InstanceConfig::curve() const { return Curve(a[0], a[1], a[2], a[3], a[4]); }

BasePair InstanceConfig::base_pair() const
{
    return BasePair(curve(), CurvePoint::affine(Px, Py), CurvePoint::affine(Qx, Qy));
}

InstanceConfig parse_config(const std::string& text, const std::string& name)
{
    static const std::map<std::string, std::set<std::string>> known{
        {"field", {"N", "f"}},
        {"curve", {"a1", "a2", "a3", "a4", "a6"}},
        {"point", {"P.x", "P.y", "omegaP.x", "omegaP.y"}},
        {"support", {"primes"}},
        {"sweep", {"box", "norm_bound"}},
        {"instance", {"name"}},
    };

    std::map<std::string, Entry> kv;
    std::map<std::string, int> section_line;
    std::string section;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) {
            continue;
        }
        if (line.front() == '[') {
            if (line.back() != ']') {
                config_error(lineno, "unterminated section header");
            }
            section = trim(line.substr(1, line.size() - 2));
            if (!known.count(section)) {
                config_error(lineno, "unknown section [" + section + "]");
            }
            section_line[section] = lineno;
            continue;
        }
        auto eq = line.find('=');
        if (eq == std::string::npos) {
            config_error(lineno, "expected key = value");
        }
        if (section.empty()) {
            config_error(lineno, "key outside of any section");
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (!known.at(section).count(key)) {
            config_error(lineno, "unknown key '" + key + "' in [" + section + "]");
        }
        std::string full = section + "." + key;
        if (kv.count(full)) {
            config_error(lineno, "duplicate key '" + key + "'");
        }
        kv[full] = Entry{value, lineno};
    }

    auto need = [&](const std::string& full) -> const Entry& {
        auto it = kv.find(full);
        if (it == kv.end()) {
            auto dot = full.find('.');
            std::string sec = full.substr(0, dot);
            config_error(section_line.count(sec) ? section_line[sec] : 0,
                         "missing key '" + full.substr(dot + 1) + "' in [" + sec + "]");
        }
        return it->second;
    };

    InstanceConfig cfg;
    cfg.name = kv.count("instance.name") ? kv["instance.name"].value : name;

    const Entry& eN = need("field.N");
    std::int64_t N = parse_int(eN, "N");
    std::int64_t f = kv.count("field.f") ? parse_int(kv["field.f"], "f") : 1;
    try {
        cfg.params = FieldParams::make(N, f);
    } catch (const Error& e) {
        config_error(eN.line, e.what());
    }

    auto elem = [&](const Entry& e) {
        try {
            return QFElem::parse(cfg.params, e.value);
        } catch (const Error& err) {
            config_error(e.line, err.what());
        }
    };

    static const char* coeffs[] = {"a1", "a2", "a3", "a4", "a6"};
    for (int i = 0; i < 5; ++i) {
        std::string full = std::string("curve.") + coeffs[i];
        cfg.a[i] = kv.count(full) ? elem(kv[full]) : QFElem(cfg.params);
    }
    const Entry& ePx = need("point.P.x");
    const Entry& ePy = need("point.P.y");
    const Entry& eQx = need("point.omegaP.x");
    const Entry& eQy = need("point.omegaP.y");
    cfg.Px = elem(ePx);
    cfg.Py = elem(ePy);
    cfg.Qx = elem(eQx);
    cfg.Qy = elem(eQy);

    if (kv.count("support.primes")) {
        const Entry& e = kv["support.primes"];
        std::string item;
        std::istringstream list(e.value);
        while (std::getline(list, item, ',')) {
            item = trim(item);
            if (item.empty()) {
                continue;
            }
            std::int64_t p = parse_int(Entry{item, e.line}, "primes");
            if (!is_prime(p)) {
                config_error(e.line, item + " is not a rational prime");
            }
            cfg.support.push_back(p);
        }
    }
    if (kv.count("sweep.box")) {
        cfg.box = parse_int(kv["sweep.box"], "box");
        if (cfg.box < 0) {
            config_error(kv["sweep.box"].line, "box must be nonnegative");
        }
    }
    if (kv.count("sweep.norm_bound")) {
        cfg.norm_bound = parse_int(kv["sweep.norm_bound"], "norm_bound");
        if (cfg.norm_bound < 1) {
            config_error(kv["sweep.norm_bound"].line, "norm_bound must be positive");
        }
    }

    Curve E = [&] {
        try {
            return cfg.curve();
        } catch (const Error& e) {
            config_error(section_line.count("curve") ? section_line["curve"] : 0, e.what());
        }
    }();
    if (check_cm_consistency(E) == CmCheck::Inconsistent) {
        config_error(section_line.count("curve") ? section_line["curve"] : 0,
                     "j(E) = " + E.j_invariant().to_string() + " does not match CM by the order of N = " +
                         std::to_string(N) + ", f = " + std::to_string(f));
    }
    if (!on_curve(E, CurvePoint::affine(cfg.Px, cfg.Py))) {
        config_error(ePx.line, "P = (" + cfg.Px.to_string() + ", " + cfg.Py.to_string() + ") is not on the curve");
    }
    if (!on_curve(E, CurvePoint::affine(cfg.Qx, cfg.Qy))) {
        config_error(eQx.line,
                     "omegaP = (" + cfg.Qx.to_string() + ", " + cfg.Qy.to_string() + ") is not on the curve");
    }
    try {
        (void)cfg.base_pair();
    } catch (const Error& e) {
        config_error(ePx.line, e.what());
    }
    return cfg;
}

InstanceConfig load_config(const std::string& path)
{
    std::ifstream in(path);
    if (!in) {
        fail(ErrorKind::Config, "cannot open " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str(), std::filesystem::path(path).stem().string());
}

}  // namespace cmnet
