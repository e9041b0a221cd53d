#include <gtest/gtest.h>

#include "modlang/modlang.hpp"

using namespace modlang;

TEST(PropertyReport, KeepsFirstFailure) {
    PropertyReport r{"p"};
    r.check(true, [] { return std::string("a"); });
    r.check(false, [] { return std::string("b"); });
    r.check(false, [] { return std::string("c"); });
    EXPECT_EQ(r.checked, 3u);
    EXPECT_EQ(r.failures, 2u);
    EXPECT_EQ(r.first_failure, "b");
    EXPECT_FALSE(r.ok());
    EXPECT_NE(format_report(r).find("first: b"), std::string::npos);
}

TEST(PropertySweep, FullSuiteAtDepthOne) {
    auto reports = sweep_terms(1);
    EXPECT_EQ(reports.size(), 13u);
    for (const auto& r : reports) {
        EXPECT_TRUE(r.ok()) << format_report(r);
        EXPECT_GT(r.checked, 0u) << r.name;
    }
}

TEST(PropertySweep, FunctorLaws) {
    for (const auto& r : sweep_functor_laws(200, 99)) EXPECT_TRUE(r.ok()) << format_report(r);
}

TEST(AuditedHooks, FlagsBadHookOutput) {
    AuditedHooks audit;
    ComposedStep s = SumStep{StepV{2, 3}};
    ComposedTyping w = LiftWtSum{OkSum{LiftWtNat{2}, LiftWtNat{3}, enat(2), enat(3)}};
    auto out = preserve_with(audit.hooks(), s, w);
    EXPECT_EQ(out, ComposedTyping(LiftWtNat{5}));
    EXPECT_EQ(audit.calls(), 1u);
    EXPECT_EQ(audit.bad(), 0u);
}
