#pragma once

// Types, reified typing derivations (WtSum, WtArray, WtExpr), the derivation
// validator, and syntax-directed inference.

#include <optional>
#include <string>
#include <utility>
#include <variant>

#include "modlang/box.hpp"
#include "modlang/fragments.hpp"
#include "modlang/semantics.hpp"

namespace modlang {

enum class LangType { TNat, TOption, TArray };

inline const char* to_string(LangType t) {
    switch (t) {
    case LangType::TNat: return "TNat";
    case LangType::TOption: return "TOption";
    case LangType::TArray: return "TArray";
    }
    return "?";
}

struct ComposedTyping;

/// w₁ : e₁ TNat, w₂ : e₂ TNat  ⊢  e₁ ∔ e₂ : TNat
struct OkSum {
    Box<ComposedTyping> w1, w2;
    Term e1, e2;
    friend bool operator==(const OkSum&, const OkSum&) = default;
};

using SumTyping = OkSum;

struct OkNil {
    friend bool operator==(const OkNil&, const OkNil&) = default;
};

/// a : TArray, e : TNat, n : TNat  ⊢  a[n] := e : TArray
struct OkIns {
    Box<ComposedTyping> wa, we, wn;
    Term a, e, n;
    friend bool operator==(const OkIns&, const OkIns&) = default;
};

/// a : TArray, e : TNat  ⊢  a ! e : TOption
struct OkLookup {
    Box<ComposedTyping> wa, we;
    Term a, e;
    friend bool operator==(const OkLookup&, const OkLookup&) = default;
};

using ArrayTyping = std::variant<OkNil, OkIns, OkLookup>;

struct LiftWtNat {
    Natural n;
    friend bool operator==(const LiftWtNat&, const LiftWtNat&) = default;
};

/// Types any option-fragment payload; the payload itself is not checked.
struct LiftWtOption {
    Payload m;
    friend bool operator==(const LiftWtOption&, const LiftWtOption&) = default;
};

struct LiftWtSum {
    SumTyping inner;
    friend bool operator==(const LiftWtSum&, const LiftWtSum&) = default;
};

struct LiftWtArray {
    ArrayTyping inner;
    friend bool operator==(const LiftWtArray&, const LiftWtArray&) = default;
};

/// WtExpr: the knot tying fragment typings to the composed language.
struct ComposedTyping {
    std::variant<LiftWtNat, LiftWtOption, LiftWtSum, LiftWtArray> rule;

    ComposedTyping(LiftWtNat r) : rule(std::move(r)) {}
    ComposedTyping(LiftWtOption r) : rule(std::move(r)) {}
    ComposedTyping(LiftWtSum r) : rule(std::move(r)) {}
    ComposedTyping(LiftWtArray r) : rule(std::move(r)) {}

    friend bool operator==(const ComposedTyping&, const ComposedTyping&) = default;
};

struct Judgement {
    Term term;
    LangType type;
    friend bool operator==(const Judgement&, const Judgement&) = default;
};

inline Judgement sum_typing_subject(const SumTyping& w) { return {plus(w.e1, w.e2), LangType::TNat}; }

inline Judgement array_typing_subject(const ArrayTyping& w) {
    return std::visit(overloaded{
                          [](const OkNil&) { return Judgement{nil(), LangType::TArray}; },
                          [](const OkIns& r) { return Judgement{assign(r.a, r.n, r.e), LangType::TArray}; },
                          [](const OkLookup& r) { return Judgement{index(r.a, r.e), LangType::TOption}; },
                      },
                      w);
}

/// The (term, type) a derivation concludes, rebuilt from its stored parts.
inline Judgement typing_subject(const ComposedTyping& d) {
    return std::visit(overloaded{
                          [](const LiftWtNat& r) { return Judgement{enat(r.n), LangType::TNat}; },
                          [](const LiftWtOption& r) {
                              if (!validate_payload(shapes::option(), r.m))
                                  throw MalformedDerivation("lift-wt-option: payload is not an option layer");
                              return Judgement{upcast(lifts::option(), r.m), LangType::TOption};
                          },
                          [](const LiftWtSum& r) { return sum_typing_subject(r.inner); },
                          [](const LiftWtArray& r) { return array_typing_subject(r.inner); },
                      },
                      d.rule);
}

inline bool validate_typing(const ComposedTyping& d, const Term& t, LangType ty);

namespace detail {

inline bool typing_premises_hold(const ComposedTyping& d) {
    constexpr auto Nat = LangType::TNat;
    constexpr auto Arr = LangType::TArray;
    return std::visit(overloaded{
                          [](const LiftWtNat&) { return true; },
                          [](const LiftWtOption& r) { return validate_payload(shapes::option(), r.m); },
                          [&](const LiftWtSum& r) {
                              return validate_typing(*r.inner.w1, r.inner.e1, Nat) &&
                                     validate_typing(*r.inner.w2, r.inner.e2, Nat);
                          },
                          [&](const LiftWtArray& r) {
                              return std::visit(overloaded{
                                                    [](const OkNil&) { return true; },
                                                    [&](const OkIns& w) {
                                                        return validate_typing(*w.wa, w.a, Arr) &&
                                                               validate_typing(*w.we, w.e, Nat) &&
                                                               validate_typing(*w.wn, w.n, Nat);
                                                    },
                                                    [&](const OkLookup& w) {
                                                        return validate_typing(*w.wa, w.a, Arr) &&
                                                               validate_typing(*w.we, w.e, Nat);
                                                    },
                                                },
                                                r.inner);
                          },
                      },
                      d.rule);
}

} // namespace detail

/// True iff `d` derives `t : ty`.
inline bool validate_typing(const ComposedTyping& d, const Term& t, LangType ty) {
    try {
        return detail::typing_premises_hold(d) && typing_subject(d) == Judgement{t, ty};
    } catch (const Error&) {
        return false;
    }
}

struct Inferred {
    LangType type;
    ComposedTyping derivation;
};

/// Syntax-directed inference; nullopt when no rule applies.
inline std::optional<Inferred> infer(const Term& t) {
    using enum LangType;
    auto expect = [](const Term& s, LangType want) -> std::optional<ComposedTyping> {
        auto r = infer(s);
        if (!r || r->type != want) return std::nullopt;
        return std::move(r->derivation);
    };
    if (auto n = as_nat(t)) return Inferred{TNat, LiftWtNat{*n}};
    if (auto o = downcast(lifts::option(), t)) return Inferred{TOption, LiftWtOption{*o}};
    if (auto p = as_plus(t)) {
        auto w1 = expect(p->first, TNat);
        if (!w1) return std::nullopt;
        auto w2 = expect(p->second, TNat);
        if (!w2) return std::nullopt;
        return Inferred{TNat, LiftWtSum{OkSum{std::move(*w1), std::move(*w2), p->first, p->second}}};
    }
    auto arr = downcast(lifts::array(), t);
    if (!arr) return std::nullopt;
    if (is_nil_payload(*arr)) return Inferred{TArray, LiftWtArray{OkNil{}}};
    if (auto a = as_assign_payload(*arr)) {
        auto wa = expect(a->array, TArray);
        if (!wa) return std::nullopt;
        auto we = expect(a->value, TNat);
        if (!we) return std::nullopt;
        auto wn = expect(a->index, TNat);
        if (!wn) return std::nullopt;
        return Inferred{TArray, LiftWtArray{OkIns{std::move(*wa), std::move(*we), std::move(*wn), a->array,
                                                  a->value, a->index}}};
    }
    auto [a, e] = *as_index_payload(*arr);
    auto wa = expect(a, TArray);
    if (!wa) return std::nullopt;
    auto we = expect(e, TNat);
    if (!we) return std::nullopt;
    return Inferred{TOption, LiftWtArray{OkLookup{std::move(*wa), std::move(*we), a, e}}};
}

} // namespace modlang
