#pragma once

// The four language fragments, the composed language FExpr, its smart
// constructors and views, values, and array lookup.

#include <optional>
#include <utility>

#include "modlang/functor.hpp"
#include "modlang/subobject.hpp"

namespace modlang {

namespace shapes {

inline const FunctorDesc& nat() {
    static const FunctorDesc f = FunctorDesc::atom(BaseSet::Nat);
    return f;
}

/// X ⊕ A ⊤
inline const FunctorDesc& option() {
    static const FunctorDesc f = FunctorDesc::rec() + FunctorDesc::atom(BaseSet::Unit);
    return f;
}

/// X ⊗ X
inline const FunctorDesc& sum() {
    static const FunctorDesc f = FunctorDesc::rec() * FunctorDesc::rec();
    return f;
}

/// X ⊗ X ⊗ X ⊕ A ⊤ ⊕ X ⊗ X, with ⊗ binding tighter and associating right,
/// ⊕ associating left.
inline const FunctorDesc& array() {
    static const FunctorDesc x = FunctorDesc::rec();
    static const FunctorDesc f = (x * (x * x)) + FunctorDesc::atom(BaseSet::Unit) + (x * x);
    return f;
}

/// A ℕ ⊕ Option ⊕ Sum ⊕ Array
inline const FunctorDesc& fexpr() {
    static const FunctorDesc f = nat() + option() + sum() + array();
    return f;
}

} // namespace shapes

namespace lifts {

using enum Direction;

inline const ContainsPath& nat() {
    static const ContainsPath p(shapes::fexpr(), {Left, Left, Left});
    return p;
}
inline const ContainsPath& option() {
    static const ContainsPath p(shapes::fexpr(), {Right, Left, Left});
    return p;
}
inline const ContainsPath& sum() {
    static const ContainsPath p(shapes::fexpr(), {Right, Left});
    return p;
}
inline const ContainsPath& array() {
    static const ContainsPath p(shapes::fexpr(), {Right});
    return p;
}

} // namespace lifts

// Fragment payloads.

inline Payload some_payload(Term e) { return Payload::inl(Payload::slot(std::move(e))); }
inline Payload none_payload() { return Payload::inr(Payload::unit()); }

inline Payload assign_payload(Term a, Term i, Term e) {
    return Payload::inl(Payload::inl(Payload::pair(
        Payload::slot(std::move(a)), Payload::pair(Payload::slot(std::move(i)), Payload::slot(std::move(e))))));
}
inline Payload nil_payload() { return Payload::inl(Payload::inr(Payload::unit())); }
inline Payload index_payload(Term a, Term i) {
    return Payload::inr(Payload::pair(Payload::slot(std::move(a)), Payload::slot(std::move(i))));
}

// Smart constructors.

inline Term enat(Natural n) { return upcast(lifts::nat(), Payload::nat(n)); }
inline Term plus(Term a, Term b) {
    return upcast(lifts::sum(), Payload::pair(Payload::slot(std::move(a)), Payload::slot(std::move(b))));
}
inline Term some(Term e) { return upcast(lifts::option(), some_payload(std::move(e))); }
inline Term none() { return upcast(lifts::option(), none_payload()); }
inline Term nil() { return upcast(lifts::array(), nil_payload()); }
/// `a[i] := e`
inline Term assign(Term a, Term i, Term e) {
    return upcast(lifts::array(), assign_payload(std::move(a), std::move(i), std::move(e)));
}
/// `a ! i`
inline Term index(Term a, Term i) { return upcast(lifts::array(), index_payload(std::move(a), std::move(i))); }

// Views.

struct AssignView {
    Term array, index, value;
};

inline std::optional<Natural> as_nat(const Term& t) {
    auto p = downcast(lifts::nat(), t);
    if (!p) return std::nullopt;
    return p->value();
}

inline std::optional<std::pair<Term, Term>> as_plus(const Term& t) {
    auto p = downcast(lifts::sum(), t);
    if (!p) return std::nullopt;
    return std::pair{p->first().slot_value(), p->second().slot_value()};
}

inline std::optional<Term> as_some(const Term& t) {
    auto p = downcast(lifts::option(), t);
    if (!p || !p->is(Payload::Kind::InL)) return std::nullopt;
    return p->inner().slot_value();
}

inline bool is_none(const Term& t) {
    auto p = downcast(lifts::option(), t);
    return p && p->is(Payload::Kind::InR);
}

/// Array-fragment payload views; callers already hold the payload.
inline bool is_nil_payload(const Payload& a) {
    return a.is(Payload::Kind::InL) && a.inner().is(Payload::Kind::InR);
}
inline std::optional<AssignView> as_assign_payload(const Payload& a) {
    if (!a.is(Payload::Kind::InL) || !a.inner().is(Payload::Kind::InL)) return std::nullopt;
    const Payload& triple = a.inner().inner();
    return AssignView{triple.first().slot_value(), triple.second().first().slot_value(),
                      triple.second().second().slot_value()};
}
inline std::optional<std::pair<Term, Term>> as_index_payload(const Payload& a) {
    if (!a.is(Payload::Kind::InR)) return std::nullopt;
    return std::pair{a.inner().first().slot_value(), a.inner().second().slot_value()};
}

inline bool is_nil(const Term& t) {
    auto p = downcast(lifts::array(), t);
    return p && is_nil_payload(*p);
}
inline std::optional<AssignView> as_assign(const Term& t) {
    auto p = downcast(lifts::array(), t);
    if (!p) return std::nullopt;
    return as_assign_payload(*p);
}
inline std::optional<std::pair<Term, Term>> as_index(const Term& t) {
    auto p = downcast(lifts::array(), t);
    if (!p) return std::nullopt;
    return as_index_payload(*p);
}

enum class TermKind { Nat, Some, None, Plus, Nil, Assign, Index };

/// Which smart constructor built `t`. Throws ShapeError for a node outside
/// FExpr.
inline TermKind classify(const Term& t) {
    if (as_nat(t)) return TermKind::Nat;
    if (auto o = downcast(lifts::option(), t)) return o->is(Payload::Kind::InL) ? TermKind::Some : TermKind::None;
    if (as_plus(t)) return TermKind::Plus;
    if (auto a = downcast(lifts::array(), t)) {
        if (is_nil_payload(*a)) return TermKind::Nil;
        return a->is(Payload::Kind::InR) ? TermKind::Index : TermKind::Assign;
    }
    throw ShapeError("term node is not an FExpr layer");
}

/// Numbers, literal arrays, and options over values.
inline bool is_value(const Term& t) {
    if (as_nat(t) || is_nil(t) || is_none(t)) return true;
    if (auto e = as_some(t)) return is_value(*e);
    if (auto a = as_assign(t)) {
        if (!as_nat(a->index) || !as_nat(a->value)) return false;
        return is_nil(a->array) || (as_assign(a->array) && is_value(a->array));
    }
    return false;
}

/// L⟦a, n⟧: `some e` for the outermost assignment `[n] := e` in the chain,
/// `none` when the chain reaches nil or anything other than a literal
/// assignment.
inline Payload array_lookup(const Payload& a, Natural n) {
    if (!validate_payload(shapes::array(), a)) throw ShapeError("array_lookup: payload is not an array layer");
    const Payload* cur = &a;
    std::optional<Payload> next;
    for (;;) {
        auto asg = as_assign_payload(*cur);
        if (!asg) return none_payload();
        auto k = as_nat(asg->index);
        if (!k) return none_payload();
        if (*k == n) return some_payload(asg->value);
        next = downcast(lifts::array(), asg->array);
        if (!next) return none_payload();
        cur = &*next;
    }
}

} // namespace modlang
