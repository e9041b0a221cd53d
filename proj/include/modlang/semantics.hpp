#pragma once

// Reified small-step derivations for the sum and array fragments, the
// composed step relation, its validator, and a deterministic driver.

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "modlang/box.hpp"
#include "modlang/fragments.hpp"

namespace modlang {

/// A derivation whose stored parts do not describe any rule instance.
struct MalformedDerivation : Error {
    using Error::Error;
};

struct ComposedStep;

// Sum fragment, _⟶⁺_

/// e₁ ⟶ e₁'  ⊢  e₁ ∔ e₂ ⟶ e₁' ∔ e₂
struct StepL {
    Box<ComposedStep> inner;
    Term left, left_next, right;
    friend bool operator==(const StepL&, const StepL&) = default;
};

/// e₂ ⟶ e₂'  ⊢  n₁ ∔ e₂ ⟶ n₁ ∔ e₂'
///
/// `left` is a term so the relaxed rule (any e₁) is representable; the
/// default validator requires a nat literal.
struct StepR {
    Box<ComposedStep> inner;
    Term left, right, right_next;
    friend bool operator==(const StepR&, const StepR&) = default;
};

/// n ∔ m ⟶ n + m
struct StepV {
    Natural n, m;
    friend bool operator==(const StepV&, const StepV&) = default;
};

using SumStep = std::variant<StepL, StepR, StepV>;

// Array fragment, _⟶[]_

/// e ⟶ e'  ⊢  a ! e ⟶ a ! e'
struct StepI {
    Box<ComposedStep> inner;
    Term array, index, index_next;
    friend bool operator==(const StepI&, const StepI&) = default;
};

/// a ! n ⟶ L⟦a, n⟧, with `a` an array-fragment payload.
struct LookupStep {
    Payload array;
    Natural index;
    friend bool operator==(const LookupStep&, const LookupStep&) = default;
};

using ArrayStep = std::variant<StepI, LookupStep>;

/// The composed relation: `step⁺` wraps a sum step, `step[]` an array step.
struct ComposedStep {
    std::variant<SumStep, ArrayStep> rule;

    ComposedStep(SumStep s) : rule(std::move(s)) {}
    ComposedStep(ArrayStep s) : rule(std::move(s)) {}

    bool via_sum() const { return rule.index() == 0; }
    const SumStep& sum() const { return std::get<SumStep>(rule); }
    const ArrayStep& array() const { return std::get<ArrayStep>(rule); }

    friend bool operator==(const ComposedStep&, const ComposedStep&) = default;
};

struct SemanticsConfig {
    /// Accept `stepr` with a non-literal left operand, as the modular sum
    /// rule is literally stated. The driver never produces such steps.
    bool relaxed_stepr = false;
};

struct OverflowError : Error {
    using Error::Error;
};

inline Natural checked_add(Natural n, Natural m) {
    Natural r = n + m;
    if (r < n) throw OverflowError("natural overflow in " + std::to_string(n) + " + " + std::to_string(m));
    return r;
}

struct Endpoints {
    Term from, to;
    friend bool operator==(const Endpoints&, const Endpoints&) = default;
};

inline Endpoints step_endpoints(const ComposedStep& d);

inline Endpoints sum_endpoints(const SumStep& s) {
    return std::visit(overloaded{
                          [](const StepL& r) {
                              return Endpoints{plus(r.left, r.right), plus(r.left_next, r.right)};
                          },
                          [](const StepR& r) {
                              return Endpoints{plus(r.left, r.right), plus(r.left, r.right_next)};
                          },
                          [](const StepV& r) {
                              return Endpoints{plus(enat(r.n), enat(r.m)), enat(checked_add(r.n, r.m))};
                          },
                      },
                      s);
}

inline Endpoints array_endpoints(const ArrayStep& s) {
    return std::visit(overloaded{
                          [](const StepI& r) {
                              return Endpoints{index(r.array, r.index), index(r.array, r.index_next)};
                          },
                          [](const LookupStep& r) {
                              if (!validate_payload(shapes::array(), r.array))
                                  throw MalformedDerivation("lookup: stored array is not an array layer");
                              return Endpoints{index(upcast(lifts::array(), r.array), enat(r.index)),
                                               upcast(lifts::option(), array_lookup(r.array, r.index))};
                          },
                      },
                      s);
}

/// (source, target) as rebuilt from the stored components.
inline Endpoints step_endpoints(const ComposedStep& d) {
    return d.via_sum() ? sum_endpoints(d.sum()) : array_endpoints(d.array());
}

inline bool validate_step(const ComposedStep& d, const Term& from, const Term& to, const SemanticsConfig& cfg = {});

namespace detail {

inline bool premises_hold(const ComposedStep& d, const SemanticsConfig& cfg) {
    if (d.via_sum()) {
        return std::visit(overloaded{
                              [&](const StepL& r) { return validate_step(*r.inner, r.left, r.left_next, cfg); },
                              [&](const StepR& r) {
                                  if (!cfg.relaxed_stepr && !as_nat(r.left)) return false;
                                  return validate_step(*r.inner, r.right, r.right_next, cfg);
                              },
                              [](const StepV&) { return true; },
                          },
                          d.sum());
    }
    return std::visit(overloaded{
                          [&](const StepI& r) { return validate_step(*r.inner, r.index, r.index_next, cfg); },
                          [](const LookupStep& r) { return validate_payload(shapes::array(), r.array); },
                      },
                      d.array());
}

} // namespace detail

/// True iff `d` is a valid derivation of `from ⟶ to`.
inline bool validate_step(const ComposedStep& d, const Term& from, const Term& to, const SemanticsConfig& cfg) {
    try {
        if (!detail::premises_hold(d, cfg)) return false;
        return step_endpoints(d) == Endpoints{from, to};
    } catch (const Error&) {
        return false;
    }
}

struct DrivenStep {
    Term next;
    ComposedStep derivation;
};

/// One step of the leftmost strategy, or nullopt at a normal form.
inline std::optional<DrivenStep> drive_step(const Term& t) {
    if (auto p = as_plus(t)) {
        auto& [l, r] = *p;
        auto ln = as_nat(l);
        if (!ln) {
            auto s = drive_step(l);
            if (!s) return std::nullopt;
            Term next = plus(s->next, r);
            return DrivenStep{std::move(next), SumStep{StepL{std::move(s->derivation), l, s->next, r}}};
        }
        if (auto s = drive_step(r)) {
            Term next = plus(l, s->next);
            return DrivenStep{std::move(next), SumStep{StepR{std::move(s->derivation), l, r, s->next}}};
        }
        if (auto rn = as_nat(r)) return DrivenStep{enat(checked_add(*ln, *rn)), SumStep{StepV{*ln, *rn}}};
        return std::nullopt;
    }
    if (auto p = as_index(t)) {
        auto& [a, i] = *p;
        if (auto s = drive_step(i)) {
            Term next = index(a, s->next);
            return DrivenStep{std::move(next), ArrayStep{StepI{std::move(s->derivation), a, i, s->next}}};
        }
        auto n = as_nat(i);
        auto arr = downcast(lifts::array(), a);
        if (!n || !arr) return std::nullopt;
        Term next = upcast(lifts::option(), array_lookup(*arr, *n));
        return DrivenStep{std::move(next), ArrayStep{LookupStep{*arr, *n}}};
    }
    return std::nullopt;
}

struct Trace {
    std::vector<DrivenStep> steps;
    /// Fuel ran out while the last term could still step.
    bool fuel_exhausted = false;

    const Term& last(const Term& start) const { return steps.empty() ? start : steps.back().next; }
};

inline Trace trace(const Term& t, std::size_t fuel) {
    Trace out;
    Term cur = t;
    for (;;) {
        auto s = drive_step(cur);
        if (!s) return out;
        if (out.steps.size() == fuel) {
            out.fuel_exhausted = true;
            return out;
        }
        cur = s->next;
        out.steps.push_back(std::move(*s));
    }
}

} // namespace modlang
