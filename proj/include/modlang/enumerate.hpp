#pragma once

// Exhaustive bounded enumeration and random generation of FExpr terms.

#include <algorithm>
#include <cstddef>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "modlang/fragments.hpp"
#include "modlang/typing.hpp"

namespace modlang {

struct EnumerationOptions {
    std::vector<Natural> literals{0, 1, 2};
    std::size_t depth_cap = 4;
};

/// Constructor depth: literals, nil and none are 0; every other constructor
/// adds one to its deepest argument.
inline std::size_t depth(const Term& t) {
    switch (classify(t)) {
    case TermKind::Nat:
    case TermKind::None:
    case TermKind::Nil: return 0;
    case TermKind::Some: return 1 + depth(*as_some(t));
    case TermKind::Plus: {
        auto [a, b] = *as_plus(t);
        return 1 + std::max(depth(a), depth(b));
    }
    case TermKind::Index: {
        auto [a, i] = *as_index(t);
        return 1 + std::max(depth(a), depth(i));
    }
    case TermKind::Assign: {
        auto v = *as_assign(t);
        return 1 + std::max({depth(v.array), depth(v.index), depth(v.value)});
    }
    }
    return 0;
}

/// Number of distinct terms of depth ≤ `d`.
inline std::size_t count_terms(std::size_t d, std::size_t literal_count = 3) {
    std::size_t n = literal_count + 2;
    for (std::size_t k = 0; k < d; ++k) n = literal_count + 2 + n + 2 * n * n + n * n * n;
    return n;
}

namespace detail {

/// Calls `fn` on every term of depth exactly `d`, given all terms of depth
/// < d in `lower` with those of depth exactly d-1 starting at `mid`.
template <class Fn>
void for_each_exact(const std::vector<Term>& lower, std::size_t mid, Fn& fn) {
    const std::size_t n = lower.size();
    for (std::size_t i = mid; i < n; ++i) fn(some(lower[i]));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i >= mid || j >= mid) fn(plus(lower[i], lower[j]));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i >= mid || j >= mid) fn(index(lower[i], lower[j]));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (i >= mid || j >= mid || k >= mid) fn(assign(lower[i], lower[j], lower[k]));
}

} // namespace detail

/// Streams every term of depth ≤ `d` in a fixed order: by depth, then by
/// constructor (some, plus, index, assign), then by argument. No term is
/// produced twice since the smart constructors are injective with disjoint
/// images. Throws Error above the depth cap.
template <class Fn>
void for_each_term(std::size_t d, Fn&& fn, const EnumerationOptions& opts = {}) {
    if (d > opts.depth_cap)
        throw Error("enumeration depth " + std::to_string(d) + " exceeds cap " + std::to_string(opts.depth_cap));
    std::vector<Term> lower;
    for (Natural l : opts.literals) lower.push_back(enat(l));
    lower.push_back(nil());
    lower.push_back(none());
    for (const Term& t : lower) fn(t);
    std::size_t mid = 0;
    for (std::size_t k = 1; k <= d; ++k) {
        if (k == d) {
            detail::for_each_exact(lower, mid, fn);
            break;
        }
        std::size_t next_mid = lower.size();
        std::vector<Term> level;
        auto collect = [&](Term t) { level.push_back(std::move(t)); };
        detail::for_each_exact(lower, mid, collect);
        for (const Term& t : level) fn(t);
        lower.insert(lower.end(), level.begin(), level.end());
        mid = next_mid;
    }
}

inline std::vector<Term> enumerate_terms(std::size_t d, const EnumerationOptions& opts = {}) {
    std::vector<Term> out;
    for_each_term(d, [&](const Term& t) { out.push_back(t); }, opts);
    return out;
}

/// Every payload of shape `f` with slots from `slots` and Nat atoms from
/// `literals`, in a fixed order.
inline std::vector<Payload> enumerate_payloads(const FunctorDesc& f, const std::vector<Term>& slots,
                                               const std::vector<Natural>& literals = {0, 1, 2}) {
    std::vector<Payload> out;
    switch (f.kind()) {
    case FunctorDesc::Kind::Rec:
        for (const Term& t : slots) out.push_back(Payload::slot(t));
        break;
    case FunctorDesc::Kind::Atom:
        if (f.set() == BaseSet::Unit) {
            out.push_back(Payload::unit());
        } else {
            for (Natural n : literals) out.push_back(Payload::nat(n));
        }
        break;
    case FunctorDesc::Kind::Sum:
        for (auto& p : enumerate_payloads(f.left(), slots, literals)) out.push_back(Payload::inl(std::move(p)));
        for (auto& p : enumerate_payloads(f.right(), slots, literals)) out.push_back(Payload::inr(std::move(p)));
        break;
    case FunctorDesc::Kind::Prod: {
        auto as = enumerate_payloads(f.left(), slots, literals);
        auto bs = enumerate_payloads(f.right(), slots, literals);
        out.reserve(as.size() * bs.size());
        for (const auto& a : as)
            for (const auto& b : bs) out.push_back(Payload::pair(a, b));
        break;
    }
    }
    return out;
}

// Random generation.

/// Any term of depth ≤ `max_depth`, literals drawn from [0, max_literal].
template <class Rng>
Term random_term(Rng& rng, std::size_t max_depth, Natural max_literal = 9) {
    std::uniform_int_distribution<int> pick(0, max_depth == 0 ? 2 : 6);
    std::uniform_int_distribution<Natural> lit(0, max_literal);
    auto sub = [&] { return random_term(rng, max_depth - 1, max_literal); };
    switch (pick(rng)) {
    case 0: return enat(lit(rng));
    case 1: return nil();
    case 2: return none();
    case 3: return some(sub());
    case 4: {
        Term a = sub();
        return plus(std::move(a), sub());
    }
    case 5: {
        Term a = sub();
        return index(std::move(a), sub());
    }
    default: {
        Term a = sub();
        Term i = sub();
        return assign(std::move(a), std::move(i), sub());
    }
    }
}

/// A term that infers `type`, of depth ≤ `max_depth`.
template <class Rng>
Term random_typed_term(Rng& rng, LangType type, std::size_t max_depth, Natural max_literal = 9) {
    std::uniform_int_distribution<Natural> lit(0, max_literal);
    std::bernoulli_distribution leaf(max_depth == 0 ? 1.0 : 0.3);
    auto sub = [&](LangType t) { return random_typed_term(rng, t, max_depth - 1, max_literal); };
    switch (type) {
    case LangType::TNat:
        if (leaf(rng)) return enat(lit(rng));
        {
            Term a = sub(LangType::TNat);
            return plus(std::move(a), sub(LangType::TNat));
        }
    case LangType::TArray:
        if (leaf(rng)) return nil();
        {
            Term a = sub(LangType::TArray);
            Term i = sub(LangType::TNat);
            return assign(std::move(a), std::move(i), sub(LangType::TNat));
        }
    case LangType::TOption: {
        if (leaf(rng)) return none();
        std::uniform_int_distribution<int> pick(0, 2);
        switch (pick(rng)) {
        case 0: return some(random_term(rng, max_depth - 1, max_literal));
        default: {
            Term a = sub(LangType::TArray);
            return index(std::move(a), sub(LangType::TNat));
        }
        }
    }
    }
    return enat(0);
}

/// A payload of shape `f` whose slots come from `slot()`.
template <class Rng, class SlotGen>
Payload random_payload(Rng& rng, const FunctorDesc& f, SlotGen& slot, Natural max_literal = 9) {
    switch (f.kind()) {
    case FunctorDesc::Kind::Rec: return Payload::slot(slot());
    case FunctorDesc::Kind::Atom:
        if (f.set() == BaseSet::Unit) return Payload::unit();
        return Payload::nat(std::uniform_int_distribution<Natural>(0, max_literal)(rng));
    case FunctorDesc::Kind::Sum:
        if (std::bernoulli_distribution(0.5)(rng)) return Payload::inl(random_payload(rng, f.left(), slot, max_literal));
        return Payload::inr(random_payload(rng, f.right(), slot, max_literal));
    case FunctorDesc::Kind::Prod: {
        Payload a = random_payload(rng, f.left(), slot, max_literal);
        return Payload::pair(std::move(a), random_payload(rng, f.right(), slot, max_literal));
    }
    }
    throw ShapeError("random_payload: unknown descriptor");
}

} // namespace modlang
