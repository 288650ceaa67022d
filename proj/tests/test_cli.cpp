#include <gtest/gtest.h>

#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = tri::cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

TEST(Cli, Eval) {
    const Result r = run({"eval", "-n", "1", "x0 & ~x0", "--at", "u"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "u\n");
    EXPECT_EQ(run({"eval", "-n", "2", "x0 -> x1", "--at", "1,0"}).out, "0\n");
    EXPECT_EQ(run({"eval", "-n", "1", "[]1 x0", "--at", "u"}).out, "1\n");
}

TEST(Cli, Table) {
    const Result r = run({"table", "-n", "1", "~x0"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "0 : 1\nu : u\n1 : 0\n");
}

TEST(Cli, Classify) {
    const Result r = run({"classify", "-n", "1", "x0"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "models: 1\nquasi-models: u\ncountermodels: 0\n");
    EXPECT_EQ(run({"classify", "-n", "1", "--machine", "x0"}).out, "0 0\nu u\n1 1\n");
}

TEST(Cli, Capture) {
    EXPECT_EQ(run({"capture", "-n", "2", "1,0"}).out, "x0 & ~x1\n");
    EXPECT_EQ(run({"capture", "-n", "1"}).out, "bot\n");
    EXPECT_EQ(run({"capture", "-n", "1", "1", "0"}).out, "x0 | ~x0\n");
}

TEST(Cli, EncodeRanking) {
    const Result r = run({"encode-ranking", "--levels", "111"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "~(<>1 bot | <>2 bot)\n");
}

TEST(Cli, ReviseGolden) {
    const Result r = run({"revise", "-n", "1", "--op", "ci", "x0", "~x0"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "0 : 2\nu : 2\n1 : 2\n");
    EXPECT_EQ(run({"revise", "-n", "1", "--op", "drastic", "x0", "~x0"}).out, "0 : 1\nu : 2\n1 : 3\n");
}

TEST(Cli, CheckCi) {
    const Result r = run({"check", "ci", "-n", "1"});
    EXPECT_EQ(r.status, 0);
    std::istringstream lines(r.out);
    std::string line;
    int passes = 0;
    while (std::getline(lines, line))
        if (line.size() > 5 && line.substr(line.size() - 5) == " PASS") ++passes;
    EXPECT_EQ(passes, 10);
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
    EXPECT_NE(r.out.find("differs at phi=1 theta=0"), std::string::npos);
    EXPECT_NE(r.out.find("pairs checked: 729 (all)"), std::string::npos);
}

TEST(Cli, CheckCharacterization) {
    const Result r = run({"check", "charac", "--op", "drastic", "-n", "1"});
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out,
              "operator 123123123\npostulates sound: PASS\ntable reconstructed: PASS\npairs checked: 729\n");
}

TEST(Cli, ClosureMachine) {
    const Result r = run({"closure", "--variant", "box2", "--machine"});
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("222 OUT\n"), std::string::npos);
    EXPECT_EQ(r.out.find(" IN\n"), std::string::npos);
    EXPECT_EQ(r.out.substr(r.out.size() - 17), "verdict DISJOINT\n");
    EXPECT_EQ(run({"closure", "--variant", "box1", "--include-bot", "--machine"}).status, 0);
}

TEST(Cli, UsageErrorsExitTwoWithoutOutput) {
    const std::vector<std::vector<std::string>> bad{
        {"eval", "-n", "1", "x0 &", "--at", "u"},
        {"eval", "-n", "1", "x1", "--at", "u"},
        {"eval", "-n", "2", "x0", "--at", "u"},
        {"eval", "-n", "1", "x0", "--at", "2"},
        {"eval", "-n", "1", "x0"},
        {"frobnicate"},
        {},
        {"revise", "-n", "1", "--op", "1234", "x0", "x0"},
        {"closure", "--variant", "box3"},
        {"encode-ranking", "--levels", "12"},
        {"table", "-n", "1", "x0", "--bogus"},
    };
    for (const auto& args : bad) {
        const Result r = run(args);
        EXPECT_EQ(r.status, 2) << (args.empty() ? "" : args[0]);
        EXPECT_TRUE(r.out.empty());
        EXPECT_FALSE(r.err.empty());
    }
}

TEST(Cli, ErrorMessageNamesThePosition) {
    const Result r = run({"eval", "-n", "1", "x0 &", "--at", "u"});
    EXPECT_NE(r.err.find("position 4"), std::string::npos) << r.err;
}

TEST(Cli, HelpExitsZero) {
    EXPECT_EQ(run({"--help"}).status, 0);
}

TEST(Cli, Deterministic) {
    const std::vector<std::string> args{"check", "ci", "-n", "2", "--samples", "50", "--seed", "9"};
    const Result a = run(args);
    const Result b = run(args);
    EXPECT_EQ(a.status, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find("pairs checked: 50 (sampled)"), std::string::npos);
}

}  // namespace
