#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct Result {
    int status;
    std::string out;
};

Result run(const std::string& args) {
    std::string cmd = std::string(MODLANG_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return {-1, ""};
    std::string out;
    std::array<char, 4096> buf;
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
    int st = pclose(pipe);
    return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

const std::string kExp = "'(nil[0] := 1) ! (0 + 1)'";

} // namespace

TEST(Cli, PreserveGolden) {
    Result r = run("preserve " + kExp);
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out,
              "(lift-wt-array (ok-lookup (lift-wt-array (ok-ins (lift-wt-array ok-nil) (lift-wt-nat 1) (lift-wt-nat 0))) "
              "(lift-wt-sum (ok-sum (lift-wt-nat 0) (lift-wt-nat 1)))))\n"
              "(step[] (stepi (step⁺ stepv)))\n"
              "(lift-wt-array (ok-lookup (lift-wt-array (ok-ins (lift-wt-array ok-nil) (lift-wt-nat 1) (lift-wt-nat 0))) "
              "(lift-wt-nat 1)))\n");
}

TEST(Cli, Check) {
    Result r = run("check " + kExp);
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out.rfind("TOption\n(lift-wt-array (ok-lookup", 0), 0u);
    Result bad = run("check 'nil + 1'");
    EXPECT_EQ(bad.status, 1);
    EXPECT_EQ(bad.out, "ill-typed\n");
}

TEST(Cli, SyntaxErrorIsUserError) { EXPECT_EQ(run("check 'some('").status, 1); }

TEST(Cli, Eval) {
    Result r = run("eval " + kExp);
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(r.out, "none\n");
    Result t = run("eval --trace '(1 + 2) + 3'");
    EXPECT_EQ(t.status, 0);
    EXPECT_EQ(t.out,
              "1 + 2 + 3  -->  3 + 3  (step⁺ (stepl (step⁺ stepv)))\n"
              "3 + 3  -->  6  (step⁺ stepv)\n"
              "6\n");
}

TEST(Cli, EvalFuelAndOverflow) {
    Result r = run("eval --fuel 1 '(1 + 2) + 3'");
    EXPECT_EQ(r.status, 1);
    EXPECT_EQ(r.out, "3 + 3\n");
    EXPECT_EQ(run("eval '18446744073709551615 + 1'").status, 1);
}

TEST(Cli, PreserveOnNormalForm) { EXPECT_EQ(run("preserve 5").status, 1); }

TEST(Cli, UnknownCommandAndBadDepth) {
    EXPECT_EQ(run("frobnicate").status, 1);
    EXPECT_EQ(run("selftest --depth 9").status, 1);
}

TEST(Cli, OracleDiffAndSelftest) {
    Result d = run("oracle-diff --depth 1");
    EXPECT_EQ(d.status, 0);
    EXPECT_NE(d.out.find("all properties hold"), std::string::npos);
    Result s = run("selftest --depth 1");
    EXPECT_EQ(s.status, 0);
    EXPECT_NE(s.out.find("all properties hold"), std::string::npos);
}
