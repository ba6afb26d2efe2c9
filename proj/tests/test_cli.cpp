#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    std::string cmd = std::string(OSEQ_CLI) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    std::string out;
    std::array<char, 4096> buf{};
    while (auto n = std::fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
    int status = pclose(p);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string sample(const char* name) { return std::string(OSEQ_SAMPLES) + "/" + name; }

} // namespace

TEST(Cli, Validate) {
    EXPECT_EQ(run("validate 1,3,6,10,8,7").out, "valid\n");
    auto r = run("validate 1,3,7");
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(r.out.rfind("invalid", 0), 0u);
}

TEST(Cli, LevelNotLevelExitCode) {
    auto r = run("level 1,3,6,10,15,21,18,17,17");
    EXPECT_EQ(r.code, 10);
    EXPECT_NE(r.out.find("SmallPlateau2dPlus3"), std::string::npos) << r.out;
    auto u = run("level 1,3,6,10,15,14,14");
    EXPECT_EQ(u.code, 0);
    EXPECT_EQ(run("level 1,3,7").code, 2);
}

TEST(Cli, LevelJsonAndMask) {
    auto r = run("level 1,3,6,10,15,21,18,17,17 --format json");
    EXPECT_EQ(r.out.rfind("{", 0), 0u);
    EXPECT_NE(r.out.find("\"status\":\"not_level\""), std::string::npos);
    auto m = run("level 1,3,6,10,15,21,18,17,17 --disable SmallPlateau2dPlus3 NonUnimodalSmallDrop LexBettiExcess "
                 "LexBettiEqual GHMSSmallPlateau PlateauPastReduction GinBettiEqual DecayTooSteep NonStrictDecreaseAfterDrop");
    EXPECT_EQ(m.code, 0) << m.out;
}

TEST(Cli, Betti) {
    auto r = run("betti 1,3,6,10,8,7 --n 3");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("    3: 7 9 3\n"), std::string::npos) << r.out;
    EXPECT_NE(run("betti 1,3,6,10,8,7 --n 3 --format json").out.find("\"0,4\":7"), std::string::npos);
}

TEST(Cli, Constructions) {
    EXPECT_EQ(run("construct iarrobino --base 1,3,5,7,9,11,13 --r 3").out, "1,3,6,10,15,14,14\n");
    EXPECT_EQ(run("construct plateau --d 5 --k 4").out, "1,3,6,10,15,14,14\n");
    EXPECT_EQ(run("construct plateau --d 4 --k 4").code, 2);
}

TEST(Cli, Wlp) {
    EXPECT_EQ(run("wlp 1,3,6,3,1 --n 3").out, "pass\n");
    EXPECT_EQ(run("wlp 1,3,6,10,8,7 --n 3").out.rfind("fail (c) at d=4", 0), 0u);
}

TEST(Cli, GinBetti) {
    auto r = run("gin-betti 1,3,6,3,1 --n 3 --d 4");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("1 2 1"), std::string::npos) << r.out;
    EXPECT_EQ(run("gin-betti 1,3,6,10,8,7 --n 3 --d 4").code, 2);
    EXPECT_EQ(run("gin-betti 1,3,6,10,8,7 --n 3 --d 4 --assume-wlp").code, 0);
}

TEST(Cli, ExpandAndBound) {
    auto r = run("expand 17 7");
    EXPECT_EQ(r.out.rfind("17 = C(8,7) + C(7,6) + C(5,5) + C(4,4)\n", 0), 0u) << r.out;
    EXPECT_NE(run("bound 1,3,6,10,8,7").out.find("r1_bound: 5"), std::string::npos);
}

TEST(Cli, BadInput) {
    EXPECT_EQ(run("level 1,x").code, 2);
    EXPECT_EQ(run("nosuchcommand").code, 2);
    EXPECT_EQ(run("oracle hilbert --ideal /nonexistent.json").code, 2);
    EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, OracleOnSamples) {
    EXPECT_EQ(run("oracle hilbert --ideal " + sample("ci_squares.json")).out, "1,3,3,1\n");
    EXPECT_EQ(run("oracle socle --ideal " + sample("ci_squares.json")).out, "0,0,0,1\n");
    EXPECT_EQ(run("oracle hilbert --ideal " + sample("lex_1_3_6_10_8_7.json")).out, "1,3,6,10,8,7\n");
    EXPECT_EQ(run("oracle betti --ideal " + sample("lex_1_3_6_10_8_7.json")).out, run("betti 1,3,6,10,8,7 --n 3").out);
    auto c = run("oracle cancel --ideal " + sample("dense_rational.json") + " --seed 3");
    EXPECT_EQ(c.code, 0) << c.out;
}

TEST(Cli, Deterministic) {
    std::string args = "oracle gin --ideal " + sample("dense_rational.json") + " --seed 11";
    auto a = run(args), b = run(args);
    EXPECT_EQ(a.code, 0) << a.out;
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(run("sweep --codim 3 --socle-degree 5 --threads 1").out,
              run("sweep --codim 3 --socle-degree 5 --threads 3").out);
}
