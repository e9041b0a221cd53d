#include <gtest/gtest.h>

#include "modlang/modlang.hpp"

using namespace modlang;
using namespace modlang::oracle;

namespace {

Term exp_term() { return index(assign(nil(), enat(0), enat(1)), plus(enat(0), enat(1))); }
MonoExpr mono_chain() { return Ins{Nil{}, Atom{0}, Atom{1}}; }

} // namespace

TEST(Embed, Examples) {
    EXPECT_EQ(embed(enat(6)), MonoExpr(Atom{6}));
    EXPECT_EQ(embed(exp_term()), MonoExpr(Lookup{mono_chain(), Plus{Atom{0}, Atom{1}}}));
    EXPECT_EQ(embed(some(none())), MonoExpr(ESome{ENone{}}));
}

TEST(Embed, ProjectInverts) {
    for (const Term& t : enumerate_terms(1)) EXPECT_EQ(project(embed(t)), t);
    MonoExpr m = Lookup{mono_chain(), Plus{Atom{0}, Atom{1}}};
    EXPECT_EQ(embed(project(m)), m);
}

TEST(MonoInfer, Examples) {
    EXPECT_EQ(mono_infer(Atom{6}), LangType::TNat);
    EXPECT_EQ(mono_infer(embed(exp_term())), LangType::TOption);
    EXPECT_EQ(mono_infer(Plus{Nil{}, Atom{1}}), std::nullopt);
    EXPECT_EQ(mono_infer(ESome{Nil{}}), LangType::TOption);
}

TEST(MonoStep, Examples) {
    EXPECT_EQ(mono_step(Plus{Atom{0}, Atom{1}}), MonoExpr(Atom{1}));
    EXPECT_EQ(mono_step(embed(exp_term())), MonoExpr(Lookup{mono_chain(), Atom{1}}));
    EXPECT_EQ(mono_step(Atom{5}), std::nullopt);
    EXPECT_EQ(mono_step(Lookup{mono_chain(), Atom{0}}), MonoExpr(ESome{Atom{1}}));
    EXPECT_EQ(mono_step(Lookup{Atom{3}, Atom{0}}), std::nullopt);
}

TEST(MonoLookup, ShadowingAndFailClosed) {
    MonoExpr shadow = Ins{mono_chain(), Atom{0}, Atom{2}};
    EXPECT_EQ(mono_lookup(shadow, 0), MonoExpr(ESome{Atom{2}}));
    EXPECT_EQ(mono_lookup(Ins{mono_chain(), Plus{Atom{0}, Atom{0}}, Atom{2}}, 0), MonoExpr(ENone{}));
}

TEST(OracleSweep, DepthOne) {
    TermSweepSelection sel{false, false, false, true, false};
    for (const auto& r : sweep_terms(1, sel)) EXPECT_TRUE(r.ok()) << format_report(r);
}
