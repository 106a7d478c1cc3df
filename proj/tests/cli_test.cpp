#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(STABLEMAC_CLI_PATH) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    EXPECT_NE(p, nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST(Cli, ComputeE) {
    auto r = run("compute E --mu 1");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "x1\n");
}

TEST(Cli, ComputeWeight) {
    auto r = run("compute weight --mu 0,2");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "[(2, \"q^2*t\")]\n");
}

TEST(Cli, ComputePair) {
    auto r = run("compute pair --mu 1 --lambda 1,1");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "x1 * P[1,1](x2+...)\n");
}

TEST(Cli, ComputeStableE) {
    auto r = run("compute stableE --mu 2,0");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "split=1; [2] ⊗ m[]: 1; [1] ⊗ m[1]: (1 - t)/(q - t)\n");
}

TEST(Cli, ComputeAFunction) {
    auto r = run("compute A --lambda 2");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "HLP: [2]: 1; [1,1]: 1/(q - t)\n");
}

TEST(Cli, Determinism) {
    auto a = run("compute stableE --mu 0,2 --format json");
    auto b = run("compute stableE --mu 0,2 --format json");
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
}

TEST(Cli, DumpFillings) {
    auto r = run("dump-fillings --mu 1,1 --n 2");
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "(1,1):1 (2,1):2 maj=0 coinv=0 gamma=1\n");
    // constrained dump: exactly one tail label
    auto c = run("dump-fillings --mu 2 --lambda 1");
    EXPECT_EQ(c.code, 0);
    EXPECT_NE(c.out.find("(1,2):2"), std::string::npos);
    // csv header
    auto v = run("dump-fillings --mu 1,1 --n 2 --format csv");
    EXPECT_EQ(v.out.rfind("cells,maj,coinv,gamma\n", 0), 0u);
}

TEST(Cli, VerifySmallSuite) {
    auto r = run("verify daha-relations --n 2 --box=-1..1");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("[pass]"), std::string::npos);
    auto j = run("verify unitriangular --deg 3 --format json");
    EXPECT_EQ(j.code, 0);
    EXPECT_NE(j.out.find("\"status\": \"pass\""), std::string::npos);
}

TEST(Cli, UsageErrors) {
    EXPECT_NE(run("compute E --mu notanumber").code, 0);
    EXPECT_NE(run("compute E --mu empty").code, 0);
    EXPECT_NE(run("compute bogus --mu 1").code, 0);
    EXPECT_NE(run("verify bogus").code, 0);
    EXPECT_NE(run("verify daha-relations --n 9").code, 0);
    EXPECT_NE(run("dump-fillings --mu 9,9,9,9,9,9").code, 0);
}

TEST(Cli, FixturesCheck) {
    auto r = run(std::string("fixtures check --dir ") + STABLEMAC_FIXTURE_DIR);
    EXPECT_EQ(r.code, 0) << r.out;
    // a corrupted store is caught
    auto bad = run("fixtures check --dir /nonexistent-fixture-dir");
    EXPECT_NE(bad.code, 0);
}
