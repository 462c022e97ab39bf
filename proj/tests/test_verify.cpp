#include <gtest/gtest.h>

#include "glat/error.hpp"
#include "glat/guard.hpp"
#include "glat/verify.hpp"

using namespace glat;
using namespace glat::verify;

TEST(Suites, IotaOnTheSpecifiedRange) {
    Config c;
    c.p = 2;
    c.delta = 3;
    c.max_degree = 6;
    auto r = run_suite("iota_nonincreasing", c);
    EXPECT_TRUE(r.passed());
    EXPECT_GE(r.cases, 1000);
    EXPECT_EQ(r.range, "p=2 delta=3 deg<=6");
}

TEST(Suites, DualityOnAllSmallSolutions) {
    Config c;
    c.level = 3;
    auto r = run_suite("duality", c);
    EXPECT_TRUE(r.passed()) << to_text(r);
    // 1 + 2 + 12 round trips plus the dual-atom pairs
    EXPECT_GT(r.cases, 15);
}

TEST(Suites, ParallelogramOnSeededPairs) {
    Config c;
    c.samples = 1000;
    c.seed = 0;
    auto r = run_suite("parallelogram", c);
    EXPECT_TRUE(r.passed()) << to_text(r);
    EXPECT_GE(r.cases, 1000);
}

TEST(Suites, ReportsAreDeterministic) {
    Config c;
    c.seed = 11;
    for (const char* name : {"parallelogram", "fractions", "beam_shift", "conj_auto"}) {
        auto a = run_suite(name, c), b = run_suite(name, c);
        EXPECT_EQ(a.cases, b.cases) << name;
        EXPECT_EQ(a.failed, b.failed) << name;
        EXPECT_EQ(a.range, b.range) << name;
        EXPECT_EQ(a.params, b.params) << name;
    }
}

TEST(Suites, EveryNamedSuitePassesOnDefaults) {
    for (const auto& name : suite_names()) {
        if (name == "iota_nonincreasing") continue;  // covered above on an explicit range
        auto r = run_suite(name);
        EXPECT_TRUE(r.passed()) << to_text(r);
        EXPECT_GT(r.cases, 0) << name;
        EXPECT_FALSE(r.range.empty()) << name;
    }
}

TEST(Suites, Errors) {
    EXPECT_THROW(run_suite("no_such_suite"), UnknownSuite);
    Config c;
    c.p = 3;
    c.delta = 3;
    c.max_degree = 6;
    c.max_enum = 1000;
    EXPECT_THROW(run_suite("iota_nonincreasing", c), TooLarge);
    // the override is scoped to the suite
    EXPECT_EQ(max_enum(), std::size_t(200000));
}

TEST(Suites, DefaultRangeShrinksUnderTheGuard) {
    Config c;
    c.max_enum = 2000;
    auto r = run_suite("iota_nonincreasing", c);
    EXPECT_TRUE(r.passed());
    EXPECT_NE(r.range.find("p=3 delta=3 deg<="), std::string::npos);
    EXPECT_EQ(r.range.find("p=3 delta=3 deg<=6"), std::string::npos);
}

TEST(Config, ParsesAndRejects) {
    auto c = config_from_json({{"seed", 5}, {"samples", 10}, {"p", 3}, {"format", "json"}});
    EXPECT_EQ(c.seed, 5u);
    EXPECT_EQ(c.samples, 10);
    EXPECT_EQ(c.p, 3);
    EXPECT_FALSE(c.delta.has_value());
    EXPECT_THROW(config_from_json({{"sample", 10}}), BadInput);
    EXPECT_THROW(config_from_json({{"max_enum", 0}}), BadInput);
    EXPECT_THROW(config_from_json({{"format", "xml"}}), BadInput);
    EXPECT_THROW(config_from_json({{"p", "two"}}), BadInput);
    EXPECT_EQ(config_from_json(to_json(c)).samples, 10);
}

TEST(Report, TextAndJson) {
    auto r = run_suite("dual_basis");
    auto j = to_json(r);
    EXPECT_EQ(j["suite"], "dual_basis");
    EXPECT_EQ(j["pass"], true);
    EXPECT_EQ(j["cases"], r.cases);
    EXPECT_EQ(to_text(r).rfind("PASS dual_basis", 0), 0u);
    EXPECT_EQ(run_suites("all").size(), suite_names().size());
}

TEST(NamedGerms, Resolve) {
    EXPECT_EQ(named_germ("klein")->size(), 4);
    EXPECT_EQ(named_germ("integer*klein")->size(), 8);
    EXPECT_EQ(named_germ("solution:2:0")->size(), 4);
    EXPECT_FALSE(named_germ("solution:2:99").has_value());
    EXPECT_FALSE(named_germ("kleinx").has_value());
    EXPECT_EQ(solution_germ_names(2).size(), 3u);
}
