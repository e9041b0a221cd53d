#include <gtest/gtest.h>

#include <random>

#include "support/oracles.hpp"

using namespace modlang;

namespace {

Term exp_term() { return index(assign(nil(), enat(0), enat(1)), plus(enat(0), enat(1))); }

ComposedTyping wt_exp() {
    ComposedTyping chain = LiftWtArray{OkIns{LiftWtArray{OkNil{}}, LiftWtNat{1}, LiftWtNat{0}, nil(), enat(1), enat(0)}};
    ComposedTyping sum = LiftWtSum{OkSum{LiftWtNat{0}, LiftWtNat{1}, enat(0), enat(1)}};
    return LiftWtArray{OkLookup{chain, sum, assign(nil(), enat(0), enat(1)), plus(enat(0), enat(1))}};
}

void expect_agrees_with_search(const Term& t) {
    auto types = oracles::derivable_types(t);
    auto inf = infer(t);
    EXPECT_LE(types.size(), 1u) << render(t);
    ASSERT_EQ(inf.has_value(), !types.empty()) << render(t);
    if (inf) {
        EXPECT_EQ(inf->type, *types.begin()) << render(t);
    }
}

} // namespace

TEST(TypingSubject, Examples) {
    EXPECT_EQ(typing_subject(LiftWtNat{6}), (Judgement{enat(6), LangType::TNat}));
    EXPECT_EQ(typing_subject(LiftWtOption{none_payload()}), (Judgement{none(), LangType::TOption}));
    EXPECT_EQ(typing_subject(wt_exp()), (Judgement{exp_term(), LangType::TOption}));
}

TEST(TypingSubject, MalformedOptionPayload) {
    EXPECT_THROW(typing_subject(LiftWtOption{Payload::nat(1)}), Error);
    EXPECT_FALSE(validate_typing(LiftWtOption{Payload::nat(1)}, none(), LangType::TOption));
}

TEST(ValidateTyping, Examples) {
    EXPECT_TRUE(validate_typing(wt_exp(), exp_term(), LangType::TOption));
    EXPECT_FALSE(validate_typing(LiftWtNat{6}, enat(6), LangType::TArray));
    ComposedTyping bad = LiftWtSum{OkSum{LiftWtNat{0}, LiftWtArray{OkNil{}}, enat(0), nil()}};
    EXPECT_FALSE(validate_typing(bad, plus(enat(0), nil()), LangType::TNat));
}

TEST(ValidateTyping, StoredTermMustMatchPremise) {
    ComposedTyping lying = LiftWtSum{OkSum{LiftWtNat{0}, LiftWtNat{1}, enat(0), enat(2)}};
    EXPECT_FALSE(validate_typing(lying, plus(enat(0), enat(2)), LangType::TNat));
}

TEST(ValidateTyping, OkInsArgumentRoles) {
    // a[n] := e needs e and n at TNat; swapping premises changes the subject.
    ComposedTyping w = LiftWtArray{OkIns{LiftWtArray{OkNil{}}, LiftWtNat{7}, LiftWtNat{2}, nil(), enat(7), enat(2)}};
    EXPECT_TRUE(validate_typing(w, assign(nil(), enat(2), enat(7)), LangType::TArray));
    EXPECT_FALSE(validate_typing(w, assign(nil(), enat(7), enat(2)), LangType::TArray));
}

TEST(Infer, WorkedExample) {
    auto inf = infer(exp_term());
    ASSERT_TRUE(inf);
    EXPECT_EQ(inf->type, LangType::TOption);
    EXPECT_EQ(inf->derivation, wt_exp());
}

TEST(Infer, IllTypedSum) { EXPECT_FALSE(infer(plus(nil(), enat(1)))); }

TEST(Infer, OptionPayloadUnchecked) {
    auto inf = infer(some(nil()));
    ASSERT_TRUE(inf);
    EXPECT_EQ(inf->type, LangType::TOption);
    EXPECT_EQ(inf->derivation, ComposedTyping(LiftWtOption{some_payload(nil())}));
    EXPECT_TRUE(infer(some(plus(nil(), nil()))));
}

TEST(Infer, ArrayRules) {
    EXPECT_EQ(infer(nil())->type, LangType::TArray);
    EXPECT_EQ(infer(assign(nil(), enat(0), enat(1)))->type, LangType::TArray);
    EXPECT_FALSE(infer(assign(nil(), enat(0), none())));
    EXPECT_FALSE(infer(assign(enat(0), enat(0), enat(0))));
    EXPECT_FALSE(infer(index(nil(), none())));
    EXPECT_EQ(infer(index(index(nil(), enat(0)), enat(0))), std::nullopt);
}

TEST(Infer, AgreesWithDeclarativeSearchExhaustively) {
    for (const Term& t : enumerate_terms(1)) expect_agrees_with_search(t);
}

TEST(Infer, AgreesWithDeclarativeSearchOnRandomTerms) {
    std::mt19937_64 rng(11);
    for (int k = 0; k < 400; ++k) expect_agrees_with_search(random_term(rng, 3, 2));
    for (LangType ty : {LangType::TNat, LangType::TOption, LangType::TArray})
        for (int k = 0; k < 100; ++k) expect_agrees_with_search(random_typed_term(rng, ty, 3, 2));
}

TEST(TypingSweep, DepthOne) {
    TermSweepSelection sel{false, true, false, false, false};
    for (const auto& r : sweep_terms(1, sel)) EXPECT_TRUE(r.ok()) << format_report(r);
}
