#pragma once

// A monolithic definition of the same language: one closed tree type, one
// typing function, one step function. Shares nothing with the modular side
// except the embedding below.

#include <optional>
#include <type_traits>
#include <utility>
#include <variant>

#include "modlang/box.hpp"
#include "modlang/fragments.hpp"
#include "modlang/typing.hpp"

namespace modlang::oracle {

struct MonoExpr;

struct Atom {
    Natural n;
    friend bool operator==(const Atom&, const Atom&) = default;
};
struct ESome {
    Box<MonoExpr> e;
    friend bool operator==(const ESome&, const ESome&) = default;
};
struct ENone {
    friend bool operator==(const ENone&, const ENone&) = default;
};
struct Nil {
    friend bool operator==(const Nil&, const Nil&) = default;
};
struct Lookup {
    Box<MonoExpr> a, i;
    friend bool operator==(const Lookup&, const Lookup&) = default;
};
struct Ins {
    Box<MonoExpr> a, i, e;
    friend bool operator==(const Ins&, const Ins&) = default;
};
struct Plus {
    Box<MonoExpr> e1, e2;
    friend bool operator==(const Plus&, const Plus&) = default;
};

struct MonoExpr {
    std::variant<Atom, ESome, ENone, Nil, Lookup, Ins, Plus> v;

    template <class T>
        requires(!std::is_same_v<std::decay_t<T>, MonoExpr>)
    MonoExpr(T x) : v(std::move(x)) {}

    template <class T>
    const T* as() const { return std::get_if<T>(&v); }

    friend bool operator==(const MonoExpr&, const MonoExpr&) = default;
};

inline MonoExpr embed(const Term& t) {
    switch (classify(t)) {
    case TermKind::Nat: return Atom{*as_nat(t)};
    case TermKind::Some: return ESome{embed(*as_some(t))};
    case TermKind::None: return ENone{};
    case TermKind::Plus: {
        auto [a, b] = *as_plus(t);
        return Plus{embed(a), embed(b)};
    }
    case TermKind::Nil: return Nil{};
    case TermKind::Assign: {
        auto v = *as_assign(t);
        return Ins{embed(v.array), embed(v.index), embed(v.value)};
    }
    case TermKind::Index: {
        auto [a, i] = *as_index(t);
        return Lookup{embed(a), embed(i)};
    }
    }
    throw ShapeError("embed: unreachable");
}

inline Term project(const MonoExpr& m) {
    return std::visit(overloaded{
                          [](const Atom& x) { return enat(x.n); },
                          [](const ESome& x) { return some(project(*x.e)); },
                          [](const ENone&) { return none(); },
                          [](const Nil&) { return nil(); },
                          [](const Lookup& x) { return index(project(*x.a), project(*x.i)); },
                          [](const Ins& x) { return assign(project(*x.a), project(*x.i), project(*x.e)); },
                          [](const Plus& x) { return plus(project(*x.e1), project(*x.e2)); },
                      },
                      m.v);
}

/// ok-value, ok-sum, ok-nil, ok-lookup, ok-ins, and options at TOption.
inline std::optional<LangType> mono_infer(const MonoExpr& m) {
    using enum LangType;
    auto is = [](const MonoExpr& x, LangType want) {
        auto t = mono_infer(x);
        return t && *t == want;
    };
    if (m.as<Atom>()) return TNat;
    if (m.as<ESome>() || m.as<ENone>()) return TOption;
    if (m.as<Nil>()) return TArray;
    if (auto x = m.as<Plus>()) {
        if (is(*x->e1, TNat) && is(*x->e2, TNat)) return TNat;
        return std::nullopt;
    }
    if (auto x = m.as<Ins>()) {
        if (is(*x->a, TArray) && is(*x->i, TNat) && is(*x->e, TNat)) return TArray;
        return std::nullopt;
    }
    if (auto x = m.as<Lookup>()) {
        if (is(*x->a, TArray) && is(*x->i, TNat)) return TOption;
        return std::nullopt;
    }
    return std::nullopt;
}

/// L⟦a, n⟧ over monolithic arrays.
inline MonoExpr mono_lookup(const MonoExpr& a, Natural n) {
    const MonoExpr* cur = &a;
    while (auto x = cur->as<Ins>()) {
        auto k = x->i->as<Atom>();
        if (!k) break;
        if (k->n == n) return ESome{*x->e};
        cur = &*x->a;
    }
    return ENone{};
}

/// stepl, stepr, sum, stepi, lookup; lookup only on an array-constructor
/// operand and a literal index.
inline std::optional<MonoExpr> mono_step(const MonoExpr& m) {
    if (auto x = m.as<Plus>()) {
        auto l = x->e1->as<Atom>();
        if (!l) {
            auto s = mono_step(*x->e1);
            if (!s) return std::nullopt;
            return Plus{std::move(*s), x->e2};
        }
        if (auto s = mono_step(*x->e2)) return Plus{x->e1, std::move(*s)};
        if (auto r = x->e2->as<Atom>()) return Atom{checked_add(l->n, r->n)};
        return std::nullopt;
    }
    if (auto x = m.as<Lookup>()) {
        if (auto s = mono_step(*x->i)) return Lookup{x->a, std::move(*s)};
        auto n = x->i->as<Atom>();
        const MonoExpr& a = *x->a;
        bool array_ctor = a.as<Nil>() || a.as<Ins>() || a.as<Lookup>();
        if (!n || !array_ctor) return std::nullopt;
        return mono_lookup(a, n->n);
    }
    return std::nullopt;
}

} // namespace modlang::oracle
