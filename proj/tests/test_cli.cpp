#include <gtest/gtest.h>

#include "bicalc/cli.hpp"

using namespace bicalc;

TEST(Report, EmptyJson) {
    Report r;
    EXPECT_EQ(to_json(r).dump(), R"({"checks":[],"failed":0,"passed":0})");
    EXPECT_TRUE(r.ok());
}

TEST(Report, JsonSchemaAndOrder) {
    Report r;
    r.suite = "demo";
    r.add("second", "1", "1", true);
    r.add("first", "1", "2", false);
    auto j = to_json(r);
    EXPECT_EQ(j["suite"], "demo");
    EXPECT_EQ(j["checks"][0]["name"], "second");
    EXPECT_EQ(j["checks"][1]["pass"], false);
    EXPECT_EQ(j["passed"], 1);
    EXPECT_EQ(j["failed"], 1);
    EXPECT_EQ(j.dump(), R"({"checks":[{"lhs":"1","name":"second","pass":true,"rhs":"1"},{"lhs":"1","name":"first","pass":false,"rhs":"2"}],"failed":1,"passed":1,"suite":"demo"})");
}

TEST(Report, TextTable) {
    Report r = uq::braided_lie_table();
    std::string t = emit_text(r);
    EXPECT_NE(t.find("bracket | computed | expected | pass"), std::string::npos);
    EXPECT_NE(t.find("10 passed, 0 failed"), std::string::npos);
}

TEST(Cli, VerifyIsDeterministic) {
    cli::Result a = cli::verify("bralie", true), b = cli::verify("bralie", true);
    EXPECT_EQ(a.exit_code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_NE(a.out.find("\"suite\": \"bralie\""), std::string::npos);
}

TEST(Cli, VerifyAll) {
    cli::Result r = cli::verify("all", false);
    EXPECT_EQ(r.exit_code, 0) << r.out;
    EXPECT_NE(r.out.find(" 0 failed"), std::string::npos);
    EXPECT_EQ(cli::verify("all", true).out, cli::verify("all", true).out);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(cli::verify("nope", false).exit_code, 2);
    EXPECT_EQ(cli::suq2(std::string("jets"), "", false).exit_code, 2);
    EXPECT_EQ(cli::tangent("p +", 1).exit_code, 2);
    EXPECT_EQ(cli::calculus("jet:2", "everything").exit_code, 2);
    cli::GaugeArgs g{"jet:2", "a", std::nullopt, "psi", "curvature"};
    EXPECT_EQ(cli::gauge(g).exit_code, 2);
    g.alpha = "a, b +";
    cli::Result r = cli::gauge(g);
    EXPECT_EQ(r.exit_code, 2);
    EXPECT_NE(r.err.find("alpha component 2"), std::string::npos);
    g = {"jet:2", "a, b", std::nullopt, "psi", "transform"};
    EXPECT_EQ(cli::gauge(g).exit_code, 2);
}

TEST(Cli, Tangent) {
    cli::Result r = cli::tangent("p^3/6", 1);
    EXPECT_EQ(r.exit_code, 0);
    EXPECT_NE(r.out.find("dim L = 2"), std::string::npos);
    EXPECT_NE(r.out.find("calculus: jet:2"), std::string::npos);
}

TEST(Cli, Calculus) {
    EXPECT_NE(cli::calculus("jet:2", "relations").out.find("f*dx = dx*f + w*(2*f')"), std::string::npos);
    EXPECT_NE(cli::calculus("jet:2", "omega2").out.find("w^dx = -dx^w"), std::string::npos);
    EXPECT_NE(cli::calculus("fd:1", "omega2").out.find("Omega^2 = 0"), std::string::npos);
    EXPECT_EQ(cli::calculus("jet:3", "omega2").exit_code, 2);
}

TEST(Cli, Gauge) {
    cli::GaugeArgs g{"jet:2", "a, b", std::nullopt, "psi", "curvature"};
    EXPECT_NE(cli::gauge(g).out.find("F = (dx)^2*(a^2 + b - a') + dx^w*(2*a*a' - a'' + b')"), std::string::npos);
    g = {"jet:2", "1/x, -2/x^2", std::nullopt, "psi", "flat"};
    EXPECT_NE(cli::gauge(g).out.find("flat: yes"), std::string::npos);
    g = {"fd:2", "y, 0", std::string("x"), "psi", "transform"};
    EXPECT_NE(cli::gauge(g).out.find("alpha^gamma = dx*((x*y + 1)/(lam + x))"), std::string::npos);
    g = {"fd:2", "a, b", std::nullopt, "psi", "lemmas"};
    EXPECT_EQ(cli::gauge(g).exit_code, 0);
}

TEST(Cli, SplitList) {
    EXPECT_EQ(cli::split_list("g[1,0], b"), (std::vector<std::string>{"g[1,0]", "b"}));
    EXPECT_EQ(cli::split_list("f(1,2)"), (std::vector<std::string>{"f(1,2)"}));
}
