#pragma once

// Containment paths, the injections they induce, and lazy coercions.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "modlang/functor.hpp"

namespace modlang {

struct MalformedPath : Error {
    using Error::Error;
};

enum class Direction { Left, Right };

/// Proof that `root` contains some summand, as a list of directions.
///
/// Steps are stored in constructor order: `right (left refl)` is
/// {Right, Left}. The first step names the innermost injection applied to a
/// payload, so walking from the root visits the steps last-to-first.
class ContainsPath {
public:
    ContainsPath(FunctorDesc root, std::vector<Direction> steps = {})
        : root_(std::move(root)), steps_(std::move(steps)) {}

    const FunctorDesc& root() const { return root_; }
    const std::vector<Direction>& steps() const { return steps_; }
    bool is_refl() const { return steps_.empty(); }

    friend bool operator==(const ContainsPath&, const ContainsPath&) = default;

private:
    FunctorDesc root_;
    std::vector<Direction> steps_;
};

inline std::string to_string(const ContainsPath& p) {
    std::string out;
    for (Direction d : p.steps()) out += d == Direction::Left ? "left (" : "right (";
    out += "refl";
    out.append(p.steps().size(), ')');
    return out;
}

/// The summand selected by `path`. Throws MalformedPath if a step meets a
/// descriptor that is not a sum.
inline FunctorDesc path_target(const ContainsPath& path) {
    FunctorDesc cur = path.root();
    const auto& steps = path.steps();
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        if (!cur.is(FunctorDesc::Kind::Sum))
            throw MalformedPath("path " + to_string(path) + " steps into non-sum " + to_string(cur));
        cur = *it == Direction::Left ? cur.left() : cur.right();
    }
    return cur;
}

inline bool well_formed(const ContainsPath& path) {
    try {
        path_target(path);
        return true;
    } catch (const MalformedPath&) {
        return false;
    }
}

/// `upcast refl = inn`, `upcast (left t) = upcast t ∘ inj₁`,
/// `upcast (right t) = upcast t ∘ inj₂`.
inline Term upcast(const ContainsPath& path, Payload p) {
    if (!validate_payload(path_target(path), p))
        throw ShapeError("upcast: payload is not a " + to_string(path_target(path)));
    for (Direction d : path.steps()) p = d == Direction::Left ? Payload::inl(std::move(p)) : Payload::inr(std::move(p));
    return inn(std::move(p));
}

/// Left inverse of upcast: strips the injection spine dictated by `path`.
inline std::optional<Payload> downcast(const ContainsPath& path, const Term& t) {
    const Payload* cur = &t.node();
    const auto& steps = path.steps();
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        auto want = *it == Direction::Left ? Payload::Kind::InL : Payload::Kind::InR;
        if (!cur->is(want)) return std::nullopt;
        cur = &cur->inner();
    }
    if (!validate_payload(path_target(path), *cur)) return std::nullopt;
    return *cur;
}

/// The arrow `[target] (μ root) ↣ μ root` induced by a containment path.
struct Injection {
    ContainsPath path;

    FunctorDesc target() const { return path_target(path); }
    Term apply(const Payload& p) const { return upcast(path, p); }

    friend bool operator==(const Injection&, const Injection&) = default;
};

/// An injection paired with its still-inspectable argument.
class LazyCoercion {
public:
    LazyCoercion(Injection inj, Payload payload) : inj_(std::move(inj)), payload_(std::move(payload)) {
        if (!validate_payload(inj_.target(), payload_))
            throw ShapeError("lazy coercion: payload is not a " + to_string(inj_.target()));
    }

    const Injection& injection() const { return inj_; }
    const Payload& payload() const { return payload_; }

    friend bool operator==(const LazyCoercion&, const LazyCoercion&) = default;

private:
    Injection inj_;
    Payload payload_;
};

inline Term coerce(const LazyCoercion& c) { return c.injection().apply(c.payload()); }

/// Every well-formed path over `root`, refl first, then by length.
inline std::vector<ContainsPath> all_paths(const FunctorDesc& root) {
    std::vector<ContainsPath> out;
    std::vector<ContainsPath> frontier{ContainsPath(root)};
    while (!frontier.empty()) {
        std::vector<ContainsPath> next;
        for (auto& p : frontier) {
            out.push_back(p);
            if (!path_target(p).is(FunctorDesc::Kind::Sum)) continue;
            for (Direction d : {Direction::Left, Direction::Right}) {
                // The new step is walked last, so it leads the list.
                std::vector<Direction> steps{d};
                steps.insert(steps.end(), p.steps().begin(), p.steps().end());
                next.emplace_back(root, std::move(steps));
            }
        }
        frontier = std::move(next);
    }
    return out;
}

/// True iff walking one path from the root passes through the other's target.
inline bool comparable(const ContainsPath& a, const ContainsPath& b) {
    const auto& x = a.steps().size() <= b.steps().size() ? a.steps() : b.steps();
    const auto& y = a.steps().size() <= b.steps().size() ? b.steps() : a.steps();
    // Walk order is reversed, so a walk prefix is a suffix of the step list.
    return std::equal(x.rbegin(), x.rend(), y.rbegin());
}

} // namespace modlang
