#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "catch2/catch_amalgamated.hpp"

#include "miortho/case_key.hpp"
#include "miortho/equivalence.hpp"

using namespace miortho;

namespace {

struct CliRun {
    int exit_code = -1;
    std::string out;
};

CliRun run_shell(const std::string& command) {
    const std::string cmd = command + " 2>/dev/null";
    std::array<char, 4096> buf{};
    CliRun result;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.out.append(buf.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

CliRun run_cli(const std::string& args) { return run_shell(std::string(MIORTHO_CLI_PATH) + " " + args); }

} // namespace

TEST_CASE("case key round trip") {
    const std::vector<std::string> keys = {
        "L g=7/3 D=none n=0",
        "L g=5/2 D=I1 n=4",
        "J g=7/3 h=11/4 D=I1,II2 n=3",
        "J g=2 h=3 D=II0,I1,I2 n=0",
    };
    for (const auto& text : keys) {
        CaseKey k = CaseKey::parse(text);
        CHECK(k.render() == text);
        CHECK(CaseKey::parse(k.render()) == k);
    }

    // every key in the verification grid survives the round trip
    const SystemParams jac = SystemParams::jacobi(Rational(7, 3), Rational(11, 4));
    for (const IndexSpec& index : enumerate_index_sets(jac, 2, 2)) {
        CaseKey k = CaseKey::of(jac, index, 3);
        CHECK(CaseKey::parse(k.render()) == k);
    }

    CHECK_THROWS_AS(CaseKey::parse("X g=1 D=none n=0"), validation_error);
    CHECK_THROWS_AS(CaseKey::parse("L g=1 D=Q1 n=0"), validation_error);
    CHECK_THROWS_AS(CaseKey::parse("L g=1 D=none n=0 junk"), validation_error);
}

TEST_CASE("compute emits exact coefficients") {
    CliRun r = run_cli("compute --family laguerre --g 5/2 --index I:1 --n 0 --route a");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("\"-4\"") != std::string::npos);
    CHECK(r.out.find("\"p\": [") != std::string::npos);

    CliRun xi = run_cli("compute --family laguerre --g 5/2 --index I:1 --what xi --route a --format csv");
    REQUIRE(xi.exit_code == 0);
    CHECK(xi.out == "a,xi,3,1\n");

    // P_1^{(1,1)} = 2 eta at g = h = 3/2
    CliRun jac = run_cli("compute --family jacobi --g 3/2 --h 3/2 --n 1 --route b --what p --format csv");
    REQUIRE(jac.exit_code == 0);
    CHECK(jac.out == "b,p,0,2\n");

    CliRun all = run_cli("compute --family laguerre --g 5/2 --index I:1 --n 0");
    REQUIRE(all.exit_code == 0);
    CHECK(all.out.find("\"equal\": true") != std::string::npos);

    CliRun latex = run_cli("compute --family laguerre --g 5/2 --index I:1 --what xi --route w --format latex");
    REQUIRE(latex.exit_code == 0);
    CHECK(latex.out.find("\\eta + 3") != std::string::npos);
}

TEST_CASE("compute exit codes") {
    CHECK(run_cli("compute --family laguerre --g 5/2 --index I:1,I:1").exit_code == 2);
    CHECK(run_cli("compute --family laguerre --g 7/3 --index II:2").exit_code == 2);
    CHECK(run_cli("compute --family laguerre --g 1/3").exit_code == 2);
    CHECK(run_cli("compute --family nosuch --g 2").exit_code == 2);
    CHECK(run_cli("compute").exit_code == 2);
}

TEST_CASE("verify reports and exit codes") {
    CliRun ids = run_cli("verify --suite identities");
    REQUIRE(ids.exit_code == 0);
    CHECK(ids.out.find("\"suite\": \"identities\"") != std::string::npos);
    CHECK(ids.out.find("\"failed\": 0") != std::string::npos);

    CliRun eq = run_cli("verify --suite equivalence --max-m 2 --max-d 2 --max-n 2");
    CHECK(eq.exit_code == 0);
    CHECK(eq.out.find("\"failed\": 0") != std::string::npos);

    // parity is Jacobi-only
    CHECK(run_cli("verify --suite parity --family laguerre").exit_code == 2);
    CHECK(run_cli("verify --suite nosuch").exit_code == 2);
}

TEST_CASE("verify output is byte-identical across runs") {
    const std::string cmd = "verify --suite equivalence --family jacobi --max-m 1 --max-d 1 --max-n 1";
    CliRun first = run_cli(cmd);
    CliRun second = run_cli(cmd);
    REQUIRE(first.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(!first.out.empty());
}

TEST_CASE("verify output does not depend on the worker count") {
    const std::string cmd = std::string(MIORTHO_CLI_PATH) +
                            " verify --suite equivalence --family laguerre --max-m 2 --max-d 1 --max-n 1";
    CliRun serial = run_shell("env MIORTHO_THREADS=1 " + cmd);
    CliRun parallel = run_shell("env MIORTHO_THREADS=4 " + cmd);
    REQUIRE(serial.exit_code == 0);
    REQUIRE(parallel.exit_code == 0);
    CHECK(serial.out == parallel.out);
}

TEST_CASE("table emits deterministic CSV") {
    // Xi = eta + 3 sampled on 0,1,2
    CliRun t = run_cli("table --family laguerre --g 5/2 --index I:1 --quantity xi --grid 0:2:3");
    REQUIRE(t.exit_code == 0);
    CHECK(t.out == "x_or_eta,value\n0,3\n1,4\n2,5\n");

    // potential at x=1 for the undeformed g=5/2 oscillator
    CliRun u = run_cli("table --family laguerre --g 5/2 --quantity potential --grid 1:1:1");
    REQUIRE(u.exit_code == 0);
    CHECK(u.out == "x_or_eta,value\n1,-1.25\n");

    CliRun empty = run_cli("table --family laguerre --g 5/2 --quantity xi --grid 0:2:0");
    REQUIRE(empty.exit_code == 0);
    CHECK(empty.out == "x_or_eta,value\n");

    // x-space grid must stay inside the physical domain
    CHECK(run_cli("table --family laguerre --g 5/2 --quantity potential --grid 0:1:2").exit_code == 2);
    CHECK(run_cli("table --family jacobi --g 3/2 --h 3/2 --quantity wavefunction --grid 1:2:4").exit_code == 2);
    CHECK(run_cli("table --family laguerre --g 5/2 --quantity xi --grid nonsense").exit_code == 2);
}
