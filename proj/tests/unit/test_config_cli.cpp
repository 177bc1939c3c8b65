#include <string>

#include "cmnet/commands.hpp"
#include "cmnet/config.hpp"
#include "doctest.h"
#include "expect.hpp"
#include "oracles.hpp"

using namespace cmnet;
using oracle::kind_of;

namespace {

const std::string good = "[field]\nN = -2\n[curve]\na2 = 1\na4 = -3\na6 = 1\n[point]\nP.x = -1\nP.y = 2\n"
                         "omegaP.x = 1/2\nomegaP.y = 0+1/4*w\n[support]\nprimes = 2, 3\n";

std::string message_of(const std::string& text)
{
    try {
        parse_config(text);
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Config);
        return e.what();
    }
    return {};
}

std::string replace(std::string s, const std::string& from, const std::string& to)
{
    s.replace(s.find(from), from.size(), to);
    return s;
}

}  // namespace

TEST_CASE("config parsing")
{
    InstanceConfig cfg = parse_config(good, "x");
    CHECK(cfg.name == "x");
    CHECK(cfg.support == std::vector<std::int64_t>{2, 3});
    CHECK(parse_config("# comment\n" + good).support.size() == 2);
    CHECK(parse_config("[instance]\nname = named\n" + good).name == "named");
}

TEST_CASE("config errors carry line numbers")
{
    CHECK(message_of("[field\nN = -2\n").find("line 1") != std::string::npos);
    CHECK(message_of("[bogus]\n").find("line 1") != std::string::npos);
    CHECK(message_of("[field]\nN = -2\nN = -2\n").find("line 3") != std::string::npos);
    CHECK(message_of("[field]\nN = two\n").find("line 2") != std::string::npos);
    CHECK(message_of("N = -2\n").find("line 1") != std::string::npos);
    CHECK(message_of(replace(good, "P.y = 2", "P.y = 3")).find("line 8") != std::string::npos);
    CHECK(message_of(replace(good, "primes = 2, 3", "primes = 2, 4")).find("line 13") != std::string::npos);
    CHECK(message_of(replace(good, "a6 = 1", "a6 = 2")).find("not") != std::string::npos);
    CHECK(kind_of([] { parse_config("[field]\nN = -2\n"); }) == ErrorKind::Config);
    CHECK(kind_of([] { load_config("/nonexistent/instance.cfg"); }) == ErrorKind::Config);
}

TEST_CASE("gvalue command")
{
    Instance ex2(oracle::example2());
    CHECK(cmd_gvalue(ex2, "2+2*w", "0+1*w") == 4);
    CHECK(cmd_gvalue(ex2, "2+2*w", "1-1*w") == -8);
    CHECK(cmd_gvalue(ex2, "1+0*w", "p=3;kind=split;gen=1-1*w") == 0);
    CHECK(kind_of([&] { cmd_gvalue(ex2, "1/2", "0+1*w"); }).has_value());
}

TEST_CASE("table and verify commands")
{
    Instance ex1(oracle::example1());
    std::string empty = cmd_table(ex1, 0, TableFormat::Csv);
    CHECK(empty.find('\n') == empty.size() - 1);
    std::string csv = cmd_table(ex1, 1, TableFormat::Csv);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 9);
    CHECK(cmd_table(ex1, 1, TableFormat::Json).front() == '[');
    CHECK(kind_of([&] { cmd_verify(ex1, "nonsense", 1, std::nullopt); }) == ErrorKind::Config);
    Report r = cmd_verify(ex1, "recurrence", 1, 2);
    CHECK(r.ok());
    CHECK(r.passed() > 0);
}
