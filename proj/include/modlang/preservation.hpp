#pragma once

// Type preservation as derivation transformers: one per fragment, closed
// over the composed language through an explicit hook record.

#include <functional>
#include <string>
#include <utility>
#include <variant>

#include "modlang/semantics.hpp"
#include "modlang/typing.hpp"

namespace modlang {

/// A step derivation and a typing derivation that are about different terms,
/// or that no preservation clause pairs.
struct MismatchError : Error {
    using Error::Error;
};

/// Everything a fragment transformer may assume about the composed language:
/// how to type lifted naturals and options, how to re-expose fragment
/// typings, and the induction hypothesis.
struct PreservationHooks {
    std::function<ComposedTyping(Natural)> wt_nat;
    std::function<ComposedTyping(const Payload&)> wt_option;
    std::function<ComposedTyping(SumTyping)> lift_sum_wt;
    std::function<ComposedTyping(ArrayTyping)> lift_array_wt;
    std::function<ComposedTyping(const ComposedStep&, const ComposedTyping&)> induction;
};

/// LC⟦a, n⟧: the looked-up option payload together with its typing.
inline std::pair<Payload, ComposedTyping> typed_array_lookup(const Payload& a, Natural n) {
    Payload m = array_lookup(a, n);
    return {m, LiftWtOption{m}};
}

inline ComposedTyping preservation_sum(const PreservationHooks& h, const SumStep& s, const SumTyping& w) {
    auto require = [](bool ok, const char* rule) {
        if (!ok) throw MismatchError(std::string(rule) + ": step and ok-sum disagree on the subject");
    };
    return std::visit(overloaded{
                          [&](const StepL& r) {
                              require(r.left == w.e1 && r.right == w.e2, "stepl");
                              return h.lift_sum_wt(OkSum{h.induction(*r.inner, *w.w1), w.w2, r.left_next, w.e2});
                          },
                          [&](const StepR& r) {
                              require(r.left == w.e1 && r.right == w.e2, "stepr");
                              return h.lift_sum_wt(OkSum{w.w1, h.induction(*r.inner, *w.w2), w.e1, r.right_next});
                          },
                          [&](const StepV& r) {
                              require(w.e1 == enat(r.n) && w.e2 == enat(r.m), "stepv");
                              return h.wt_nat(checked_add(r.n, r.m));
                          },
                      },
                      s);
}

inline ComposedTyping preservation_array(const PreservationHooks& h, const ArrayStep& s, const ArrayTyping& w) {
    const auto* lookup = std::get_if<OkLookup>(&w);
    if (!lookup) throw MismatchError("array steps only pair with an ok-lookup typing");
    const OkLookup& wl = *lookup;
    return std::visit(overloaded{
                          [&](const StepI& r) {
                              if (r.array != wl.a || r.index != wl.e)
                                  throw MismatchError("stepi: step and ok-lookup disagree on the subject");
                              return h.lift_array_wt(OkLookup{wl.wa, h.induction(*r.inner, *wl.we), wl.a, r.index_next});
                          },
                          [&](const LookupStep& r) {
                              if (wl.a != upcast(lifts::array(), r.array) || wl.e != enat(r.index))
                                  throw MismatchError("lookup: step and ok-lookup disagree on the subject");
                              return h.wt_option(array_lookup(r.array, r.index));
                          },
                      },
                      s);
}

/// Ties the fragment transformers together under `h`, whose induction hook
/// should call back into this function with the same hooks.
inline ComposedTyping preserve_with(const PreservationHooks& h, const ComposedStep& s, const ComposedTyping& w) {
    if (s.via_sum()) {
        const auto* ws = std::get_if<LiftWtSum>(&w.rule);
        if (!ws) throw MismatchError("step⁺ only pairs with lift-wt-sum");
        return preservation_sum(h, s.sum(), ws->inner);
    }
    const auto* wa = std::get_if<LiftWtArray>(&w.rule);
    if (!wa) throw MismatchError("step[] only pairs with lift-wt-array");
    return preservation_array(h, s.array(), wa->inner);
}

/// e ⟶ e' and WtExpr e τ give WtExpr e' τ. Recurses only on strict
/// subderivations of the step, so it terminates.
inline ComposedTyping preserve(const ComposedStep& s, const ComposedTyping& w);

inline const PreservationHooks& composed_hooks() {
    static const PreservationHooks hooks{
        [](Natural n) -> ComposedTyping { return LiftWtNat{n}; },
        [](const Payload& m) -> ComposedTyping { return LiftWtOption{m}; },
        [](SumTyping t) -> ComposedTyping { return LiftWtSum{std::move(t)}; },
        [](ArrayTyping t) -> ComposedTyping { return LiftWtArray{std::move(t)}; },
        [](const ComposedStep& s, const ComposedTyping& w) { return preserve(s, w); },
    };
    return hooks;
}

inline ComposedTyping preserve(const ComposedStep& s, const ComposedTyping& w) {
    return preserve_with(composed_hooks(), s, w);
}

} // namespace modlang
