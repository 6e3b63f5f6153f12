#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef RMT_CLI_BIN
#define RMT_CLI_BIN "rmt"
#endif

namespace {

int run(const std::string& args) {
    const std::string cmd = std::string(RMT_CLI_BIN) + " " + args + " > /dev/null 2>&1";
    const int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("parameter validation exits with code 2") {
    CHECK(run("corr --family lag-super --n 2 --A 1.5 --even-points 1.0") == 2);
    CHECK(run("corr --family jac-super --n 2 --a 0.5 --A 2.0 --even-points 0.1") == 2);
    CHECK(run("corr --family lag-super --n 2 --A 0 --blind-points 1.0,2.0") == 2);
}

TEST_CASE("sk closed-form row at k = pi") {
    const std::string out = "/tmp/rmt_cli_sk.csv";
    CHECK(run("--out " + out + " sk --alpha 0 --k-grid 3.14159265358979:3.14159265358979:1")
          == 0);
    const std::string text = slurp(out);
    CHECK(text.find("k,S") == 0);
    const double val = std::stod(text.substr(text.find('\n') + 1).substr(
        text.substr(text.find('\n') + 1).find(',') + 1));
    CHECK(val == doctest::Approx(1.0 - 0.5 * std::log(2.0)).epsilon(1e-10));
}

TEST_CASE("corr A-independence for even points") {
    const std::string o1 = "/tmp/rmt_cli_c1.csv", o2 = "/tmp/rmt_cli_c2.csv";
    CHECK(run("--out " + o1 + " corr --family lag-super --n 2 --A 0.5 --even-points 1.0") == 0);
    CHECK(run("--out " + o2 + " corr --family lag-super --n 2 --A -3 --even-points 1.0") == 0);
    const double v1 = std::stod(slurp(o1).substr(slurp(o1).find('\n') + 1));
    const double v2 = std::stod(slurp(o2).substr(slurp(o2).find('\n') + 1));
    CHECK(v1 == doctest::Approx(v2).epsilon(1e-8));
}

TEST_CASE("sample output is deterministic and round trips") {
    const std::string o1 = "/tmp/rmt_cli_s1.csv", o2 = "/tmp/rmt_cli_s2.csv";
    const std::string args =
        " sample --family lag-decim --n 2 --A -1 --sweeps 3000 --seed 9 --thin 20";
    CHECK(run("--out " + o1 + args) == 0);
    CHECK(run("--out " + o2 + args) == 0);
    CHECK(slurp(o1) == slurp(o2));
    CHECK(slurp(o1).find("x1,x2,x3,x4") == 0);
}

TEST_CASE("json format carries the meta block") {
    const std::string out = "/tmp/rmt_cli_k.json";
    CHECK(run("--out " + out + " --format json kernel --family laguerre --n 3 --x-grid 0:4:5")
          == 0);
    const std::string text = slurp(out);
    CHECK(text.find("\"meta\"") != std::string::npos);
    CHECK(text.find("\"cmd\": \"kernel\"") != std::string::npos);
}

TEST_CASE("gap subcommand reports self-convergence") {
    CHECK(run("gap --kind sine --s 1.0 --p 2 --m 40") == 0);
    CHECK(run("gap --kind lag-super-odd --s 1.0 --n 1 --A 0") == 0);
}

TEST_CASE("scaled subcommand evaluates blocks") {
    CHECK(run("scaled --regime bulk --alpha 0 --X 0.5 --Y 1.0") == 0);
    CHECK(run("scaled --regime hard1 --a 0 --alpha 1.2 --source super --X 1 --Y 2") == 0);
    // out-of-validity alpha at the x=1 hard edge
    CHECK(run("scaled --regime hard1 --a 0 --alpha 1.9 --source super --X 1 --Y 2") == 2);
}

TEST_CASE("verify quick suite passes") {
    CHECK(run("verify --suite quick") == 0);
}

TEST_SUITE_END();
