// End-to-end checks of the command-line tool: exit codes, report
// determinism (including batch parallelism), corpus handling.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(QLAT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("exit code 0 on passing verification") {
    CHECK(run("verify-lattice").exit_code == 0);
    CHECK(run("chart-check --samples 20").exit_code == 0);
    CHECK(run("commutativity-check --samples 20").exit_code == 0);
    CHECK(run("pencil lefschetz-check --samples 20").exit_code == 0);
    CHECK(run("cover-stats").exit_code == 0);
}

TEST_CASE("exit code 1 on verification failure") {
    RunResult r = run("verify-lattice --tamper");
    CHECK(r.exit_code == 1);
    CHECK(r.out.find("FAIL b:") != std::string::npos);
}

TEST_CASE("exit code 2 on input errors") {
    CHECK(run("certify \"Tx\"").exit_code == 2);
    CHECK(run("membership \"Tinf^\"").exit_code == 2);
    CHECK(run("pencil eval \"[0:0:0]\"").exit_code == 2);
    CHECK(run("pencil eval \"[1:1:1]\"").exit_code == 2);  // base point
    CHECK(run("certify --corpus /nonexistent/corpus.txt \"Tinf\"").exit_code == 2);
}

TEST_CASE("certify output") {
    RunResult r = run("certify \"T1 T0 Tinf\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("trace=18") != std::string::npos);
    CHECK(r.out.find("pseudo-anosov") != std::string::npos);
    CHECK(r.out.find("manifold-fiber") != std::string::npos);
}

TEST_CASE("membership output") {
    RunResult r = run("membership \"Tinf^5\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("in pi_1(C^u): yes") != std::string::npos);
    CHECK(r.out.find("pi_1(C): yes") != std::string::npos);
    RunResult r2 = run("membership \"Tinf\"");
    CHECK(r2.out.find("in pi_1(C^u): no") != std::string::npos);
}

TEST_CASE("pencil queries") {
    CHECK(run("pencil eval \"[2:1:1]\"").out == "[1:0]\n");
    CHECK(run("pencil singular-values").out == "[1:0]\n[0:1]\n[1:1]\n");
    RunResult r = run("pencil fiber \"[1:1]\"");
    CHECK(r.out.find("singular: yes") != std::string::npos);
}

TEST_CASE("distinguish output") {
    RunResult r = run("distinguish \"[T1,T0]\" \"[T1,T0]^2\"");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("distinct", 0) == 0);
}

TEST_CASE("reports are byte-identical across runs") {
    for (const char* cmd :
         {"--json --seed 11 commutativity-check --samples 64",
          "--json --seed 11 chart-check --samples 64", "--json cover-stats",
          "--json certify \"T1 T0 Tinf\" \"Tinf^5\" \"[T1,T0]^3\"", "--json verify-lattice"}) {
        RunResult a = run(cmd);
        RunResult b = run(cmd);
        CHECK(a.exit_code == 0);
        CHECK(a.out == b.out);
        CHECK_FALSE(a.out.empty());
    }
}

TEST_CASE("corpus files") {
    std::string path = "qlat_test_corpus.txt";
    {
        std::ofstream f(path);
        f << "# comment line\n";
        f << "T1 T0 Tinf\n";
        f << "\n";
        f << "Tinf^5   # trailing comment\n";
    }
    RunResult r = run("certify --corpus " + path);
    std::remove(path.c_str());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("trace=18") != std::string::npos);
    CHECK(r.out.find("Tinf^5") != std::string::npos);

    // empty corpus: empty report, exit 0
    {
        std::ofstream f(path);
        f << "# nothing here\n";
    }
    RunResult e = run("certify --corpus " + path);
    std::remove(path.c_str());
    CHECK(e.exit_code == 0);
    CHECK(e.out.empty());
}

TEST_CASE("parse errors in a corpus are reported per line with exit 2") {
    std::string path = "qlat_test_corpus_bad.txt";
    {
        std::ofstream f(path);
        f << "Tinf\n";
        f << "Txy\n";
        f << "T0 T0^\n";
    }
    RunResult r = run("certify --corpus " + path);
    std::remove(path.c_str());
    CHECK(r.exit_code == 2);
}

TEST_CASE("alternative generator assignment") {
    CHECK(run("--assignment 02,12,01 verify-lattice").exit_code == 0);
    CHECK(run("--assignment 02,12,01 membership \"Tinf^5\"").out.find("pi_1(C): yes") !=
          std::string::npos);
    // an odd permutation fails validation and refuses kernel work
    CHECK(run("--assignment 02,01,12 verify-lattice").exit_code == 1);
    CHECK(run("--assignment 02,01,12 certify \"Tinf^5\"").exit_code == 1);
}
