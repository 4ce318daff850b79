#include <gtest/gtest.h>

#include <sstream>

#include <swan/cli.hpp>
#include <swan/json_io.hpp>

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(const std::vector<std::string> &args, const std::string &input = "")
{
    std::ostringstream out;
    std::ostringstream err;
    std::istringstream in(input);
    const int code = swan::cli::run(args, out, err, in);
    return {code, out.str(), err.str()};
}

swan::Json parsed(const Outcome &o)
{
    return swan::Json::parse(o.out);
}

} // namespace

TEST(Cli, ConductorFixture)
{
    auto o = run({"conductor", "--json", R"j({"p":2,"vars":["u1"],"witt":["u1*t^-2"]})j"});
    ASSERT_EQ(o.code, swan::cli::kOk) << o.err;
    auto j = parsed(o);
    EXPECT_EQ(j["swan"], 2);
    EXPECT_EQ(j["artin"], 2);
    EXPECT_EQ(j["refined_swan"]["omega"]["u1"], "1");
}

TEST(Cli, ConductorFromStdin)
{
    auto o = run({"conductor", "--json", "-"}, R"j({"p":2,"witt":"t^-1"})j");
    ASSERT_EQ(o.code, swan::cli::kOk) << o.err;
    EXPECT_EQ(parsed(o)["artin"], 2);
}

TEST(Cli, PullbackFixture)
{
    auto o = run({"pullback", "--json", R"j({"p":3,"vars":["u1"],"witt":"u1*t^-3"})j"});
    ASSERT_EQ(o.code, swan::cli::kOk) << o.err;
    auto j = parsed(o);
    EXPECT_EQ(j["conductors"]["swan"], 2);
    EXPECT_EQ(j["conductors"]["artin"], 3);
}

TEST(Cli, VerifySingle)
{
    auto o = run({"verify", "--json", R"j({"p":5,"vars":["u1"],"witt":"u1*t^-5"})j"});
    ASSERT_EQ(o.code, swan::cli::kOk) << o.err;
    auto j = parsed(o);
    EXPECT_EQ(j["artin"], 5);
    EXPECT_EQ(j["artin_g"], 5);
    EXPECT_EQ(j["swan_g"], 4);
    EXPECT_EQ(j["holds"], true);
}

TEST(Cli, VerifyBatch)
{
    auto o = run({"verify", "--p", "3", "--vars", "u1,u2", "--trials", "10", "--seed", "4"});
    ASSERT_EQ(o.code, swan::cli::kOk) << o.err;
    auto j = parsed(o);
    EXPECT_EQ(j["trials"], 10);
    EXPECT_EQ(j["failures"], 0);
    EXPECT_EQ(j["cases"].size(), 10u);
}

TEST(Cli, VerifyIsDeterministic)
{
    const std::vector<std::string> args{"verify", "--p", "2", "--trials", "12", "--seed", "77"};
    auto a = run(args);
    auto b = run(args);
    auto threaded = args;
    threaded.insert(threaded.end(), {"--jobs", "3"});
    auto c = run(threaded);
    ASSERT_EQ(a.code, swan::cli::kOk);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, c.out);
    EXPECT_NE(a.out, run({"verify", "--p", "2", "--trials", "12", "--seed", "78"}).out);
}

TEST(Cli, OracleSingleAndSweep)
{
    auto one = run({"oracle", "--json", R"j({"p":3,"witt":"2*t^-7 + t^-1"})j"});
    ASSERT_EQ(one.code, swan::cli::kOk) << one.err;
    EXPECT_EQ(parsed(one)["break"], 7);
    EXPECT_EQ(parsed(one)["agree"], true);

    auto sweep = run({"oracle", "--p", "3", "--pole-bound", "9"});
    ASSERT_EQ(sweep.code, swan::cli::kOk) << sweep.err;
    auto j = parsed(sweep);
    EXPECT_EQ(j["failures"], 0);
    EXPECT_EQ(j["skipped"], 3);
}

TEST(Cli, SelftestSmall)
{
    auto o = run({"selftest", "--p", "2", "--trials", "4", "--seed", "3"});
    ASSERT_EQ(o.code, swan::cli::kOk) << o.err;
    EXPECT_EQ(parsed(o)["failures"], 0);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run({}).code, swan::cli::kUsage);
    EXPECT_EQ(run({"bogus"}).code, swan::cli::kUsage);
    EXPECT_EQ(run({"conductor", "--json", "{not json"}).code, swan::cli::kUsage);
    EXPECT_EQ(run({"conductor"}).code, swan::cli::kUsage);
    EXPECT_EQ(run({"verify", "--trials", "0"}).code, swan::cli::kUsage);
    EXPECT_EQ(run({"verify", "--p", "4"}).code, swan::cli::kUsage);
}

TEST(Cli, OracleUnsupportedIsSkipped)
{
    auto o = run({"oracle", "--json", R"j({"p":3,"witt":"u1*t^-3","vars":["u1"]})j"});
    ASSERT_EQ(o.code, swan::cli::kOk) << o.err;
    EXPECT_EQ(parsed(o)["skipped"], true);
}

TEST(Cli, PrecisionExhaustedExitCode)
{
    auto o = run({"conductor", "--json", R"j({"p":2,"witt":"O(t^-3)"})j"});
    EXPECT_EQ(o.code, swan::cli::kPrecision);
    EXPECT_FALSE(o.err.empty());
}
