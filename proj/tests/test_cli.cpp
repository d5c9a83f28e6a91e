#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exitCode = -1;
    std::string stdoutText;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RunResult runCli(const std::string& args, const std::string& tag) {
    std::string outFile = "/tmp/vlkb_test_" + tag + ".stdout";
    std::string cmd = std::string(VLKB_CLI_PATH) + " " + args + " > " + outFile + " 2>&1";
    int rc = std::system(cmd.c_str());
    RunResult r;
    r.exitCode = rc == -1 ? -1 : WEXITSTATUS(rc);
    r.stdoutText = slurp(outFile);
    std::remove(outFile.c_str());
    return r;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("dim table") {
    auto r = runCli("dim --n 4 --l 2", "dim");
    CHECK(r.exitCode == 0);
    CHECK(r.stdoutText.find("n=4 l=2 dim=6") != std::string::npos);
}

TEST_CASE("matrix emits the documented JSON object") {
    std::string out = "/tmp/vlkb_test_matrix.json";
    auto r = runCli("--out " + out + " matrix --n 2 --l 0 --word \"s1 s1\"", "matrix");
    REQUIRE(r.exitCode == 0);
    auto doc = nlohmann::json::parse(slurp(out));
    std::remove(out.c_str());
    CHECK(doc["n"] == 2);
    CHECK(doc["l"] == 0);
    CHECK(doc["word"] == "s1 s1");
    REQUIRE(doc["basis"].size() == 1);
    REQUIRE(doc["entries"].size() == 1);
    CHECK(doc["entries"][0][0] == "1");
}

TEST_CASE("parse and validation failures exit 2") {
    CHECK(runCli("matrix --n 3 --l 1 --word \"s9\"", "badword").exitCode == 2);
    CHECK(runCli("matrix --n 30 --l 1 --word \"s1\"", "guardrail").exitCode == 2);
    CHECK(runCli("simplicity --n 3 --l 1 --partition \"[1][2]\"", "badpart").exitCode == 2);
    CHECK(runCli("nonsense", "nosub").exitCode == 2);
}

TEST_CASE("simplicity verdict") {
    std::string out = "/tmp/vlkb_test_simp.json";
    auto r = runCli("--seed 7 --out " + out +
                        " simplicity --n 3 --l 1 --partition \"[1][2][3]\" --trials 2",
                    "simp");
    REQUIRE(r.exitCode == 0);
    auto doc = nlohmann::json::parse(slurp(out));
    std::remove(out.c_str());
    CHECK(doc["verdict"] == "simple certified");
    CHECK(doc["trials"].size() == 2);
    for (const auto& t : doc["trials"]) CHECK(t["commutant_dim"] == 1);
}

TEST_CASE("identical seed gives byte-identical output") {
    std::string outA = "/tmp/vlkb_test_repA.json", outB = "/tmp/vlkb_test_repB.json";
    auto a = runCli("--seed 42 --out " + outA + " verify commuting-actions --n 2 --samples 10",
                    "repA");
    auto b = runCli("--seed 42 --out " + outB + " verify commuting-actions --n 2 --samples 10",
                    "repB");
    CHECK(a.exitCode == 0);
    CHECK(b.exitCode == 0);
    CHECK(a.stdoutText == b.stdoutText);
    CHECK(slurp(outA) == slurp(outB));
    auto c = runCli("--seed 42 --out " + outA +
                        " simplicity --n 2 --l 1 --partition \"[1][2]\" --trials 2",
                    "repC");
    auto d = runCli("--seed 42 --out " + outB +
                        " simplicity --n 2 --l 1 --partition \"[1][2]\" --trials 2",
                    "repD");
    CHECK(c.stdoutText == d.stdoutText);
    CHECK(slurp(outA) == slurp(outB));
    std::remove(outA.c_str());
    std::remove(outB.c_str());
}

TEST_CASE("environment variable seeds the default") {
    std::string outA = "/tmp/vlkb_test_envA.json", outB = "/tmp/vlkb_test_envB.json";
    std::string base = std::string("VLKB_SEED=99 ") + VLKB_CLI_PATH + " --out ";
    CHECK(std::system((base + outA + " simplicity --n 2 --l 1 > /dev/null 2>&1").c_str()) == 0);
    CHECK(std::system((std::string(VLKB_CLI_PATH) + " --seed 99 --out " + outB +
                       " simplicity --n 2 --l 1 > /dev/null 2>&1")
                          .c_str()) == 0);
    CHECK(slurp(outA) == slurp(outB));
    std::remove(outA.c_str());
    std::remove(outB.c_str());
}

} // TEST_SUITE
