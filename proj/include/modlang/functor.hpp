#pragma once

// Polynomial functors, their interpretation as layers, and fixed-point terms.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace modlang {

using Natural = std::uint64_t;

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A payload does not inhabit the interpretation of the descriptor it was
/// checked or mapped against.
struct ShapeError : Error {
    using Error::Error;
};

enum class BaseSet { Nat, Unit };

inline const char* to_string(BaseSet s) { return s == BaseSet::Nat ? "N" : "T"; }

/// Syntax of a polynomial functor: X, A C, F ⊕ G, F ⊗ G.
class FunctorDesc {
public:
    enum class Kind { Rec, Atom, Sum, Prod };

    static FunctorDesc rec() { return FunctorDesc(Kind::Rec, BaseSet::Nat, {}); }
    static FunctorDesc atom(BaseSet s) { return FunctorDesc(Kind::Atom, s, {}); }
    static FunctorDesc sum(FunctorDesc l, FunctorDesc r) {
        return FunctorDesc(Kind::Sum, BaseSet::Nat, {std::move(l), std::move(r)});
    }
    static FunctorDesc prod(FunctorDesc l, FunctorDesc r) {
        return FunctorDesc(Kind::Prod, BaseSet::Nat, {std::move(l), std::move(r)});
    }

    Kind kind() const { return node_->kind; }
    bool is(Kind k) const { return node_->kind == k; }
    BaseSet set() const { return node_->set; }
    const FunctorDesc& left() const { return node_->children.at(0); }
    const FunctorDesc& right() const { return node_->children.at(1); }

    friend bool operator==(const FunctorDesc& a, const FunctorDesc& b) {
        if (a.node_ == b.node_) return true;
        if (a.kind() != b.kind()) return false;
        switch (a.kind()) {
        case Kind::Rec: return true;
        case Kind::Atom: return a.set() == b.set();
        default: return a.left() == b.left() && a.right() == b.right();
        }
    }

private:
    struct Node {
        Kind kind;
        BaseSet set;
        std::vector<FunctorDesc> children;
    };

    FunctorDesc(Kind k, BaseSet s, std::vector<FunctorDesc> children)
        : node_(std::make_shared<const Node>(Node{k, s, std::move(children)})) {}

    std::shared_ptr<const Node> node_;
};

inline FunctorDesc operator+(FunctorDesc l, FunctorDesc r) {
    return FunctorDesc::sum(std::move(l), std::move(r));
}
inline FunctorDesc operator*(FunctorDesc l, FunctorDesc r) {
    return FunctorDesc::prod(std::move(l), std::move(r));
}

inline std::string to_string(const FunctorDesc& f);

/// One element of [F] B: nested injections and pairs over atoms and B-slots.
/// Carries no descriptor; validity is relative to whatever FunctorDesc it is
/// checked against.
template <class B>
class Layer {
public:
    enum class Kind { Slot, Atom, InL, InR, Pair };

    static Layer slot(B b) {
        Node n{Kind::Slot, BaseSet::Nat, 0, std::move(b), {}};
        return Layer(std::move(n));
    }
    static Layer atom(BaseSet s, Natural v) {
        return Layer(Node{Kind::Atom, s, s == BaseSet::Unit ? 0 : v, std::nullopt, {}});
    }
    static Layer nat(Natural v) { return atom(BaseSet::Nat, v); }
    static Layer unit() { return atom(BaseSet::Unit, 0); }
    static Layer inl(Layer p) { return Layer(Node{Kind::InL, BaseSet::Nat, 0, std::nullopt, {std::move(p)}}); }
    static Layer inr(Layer p) { return Layer(Node{Kind::InR, BaseSet::Nat, 0, std::nullopt, {std::move(p)}}); }
    static Layer pair(Layer a, Layer b) {
        return Layer(Node{Kind::Pair, BaseSet::Nat, 0, std::nullopt, {std::move(a), std::move(b)}});
    }

    Kind kind() const { return node_->kind; }
    bool is(Kind k) const { return node_->kind == k; }

    const B& slot_value() const { return *node_->slot; }
    BaseSet set() const { return node_->set; }
    Natural value() const { return node_->value; }
    /// Operand of InL / InR.
    const Layer& inner() const { return node_->children.at(0); }
    const Layer& first() const { return node_->children.at(0); }
    const Layer& second() const { return node_->children.at(1); }

    friend bool operator==(const Layer& a, const Layer& b) {
        if (a.node_ == b.node_) return true;
        if (a.kind() != b.kind()) return false;
        switch (a.kind()) {
        case Kind::Slot: return a.slot_value() == b.slot_value();
        case Kind::Atom: return a.set() == b.set() && a.value() == b.value();
        case Kind::InL:
        case Kind::InR: return a.inner() == b.inner();
        case Kind::Pair: return a.first() == b.first() && a.second() == b.second();
        }
        return false;
    }

private:
    struct Node {
        Kind kind;
        BaseSet set;
        Natural value;
        std::optional<B> slot;
        std::vector<Layer> children;
    };

    explicit Layer(Node n) : node_(std::make_shared<const Node>(std::move(n))) {}

    std::shared_ptr<const Node> node_;
};

class Term;

/// A layer of the composed language whose slots are terms.
using Payload = Layer<Term>;

/// Element of μF: `inn` applied to a payload.
class Term {
public:
    explicit Term(Payload node) : node_(std::move(node)) {}

    const Payload& node() const { return node_; }

    friend bool operator==(const Term& a, const Term& b) { return a.node_ == b.node_; }

private:
    Payload node_;
};

inline Term inn(Payload p) { return Term(std::move(p)); }

/// True iff `p` inhabits [f] B, with `check_slot` deciding each B leaf.
template <class B, class SlotCheck>
bool validate_payload(const FunctorDesc& f, const Layer<B>& p, const SlotCheck& check_slot) {
    using K = typename Layer<B>::Kind;
    switch (f.kind()) {
    case FunctorDesc::Kind::Rec:
        return p.is(K::Slot) && static_cast<bool>(check_slot(p.slot_value()));
    case FunctorDesc::Kind::Atom:
        return p.is(K::Atom) && p.set() == f.set();
    case FunctorDesc::Kind::Sum:
        if (p.is(K::InL)) return validate_payload(f.left(), p.inner(), check_slot);
        if (p.is(K::InR)) return validate_payload(f.right(), p.inner(), check_slot);
        return false;
    case FunctorDesc::Kind::Prod:
        return p.is(K::Pair) && validate_payload(f.left(), p.first(), check_slot) &&
               validate_payload(f.right(), p.second(), check_slot);
    }
    return false;
}

template <class B>
bool validate_payload(const FunctorDesc& f, const Layer<B>& p) {
    return validate_payload(f, p, [](const B&) { return true; });
}

/// Deep check: the node and every nested term validate against `f`.
inline bool validate_term(const FunctorDesc& f, const Term& t) {
    return validate_payload(f, t.node(), [&](const Term& s) { return validate_term(f, s); });
}

/// Functorial action of `f`: applies `g` to every slot, atoms are fixed.
/// Throws ShapeError when `p` does not have the shape of `f`.
template <class A, class G>
auto fmap(const FunctorDesc& f, const G& g, const Layer<A>& p)
    -> Layer<std::decay_t<std::invoke_result_t<const G&, const A&>>> {
    using Out = Layer<std::decay_t<std::invoke_result_t<const G&, const A&>>>;
    using K = typename Layer<A>::Kind;
    switch (f.kind()) {
    case FunctorDesc::Kind::Rec:
        if (p.is(K::Slot)) return Out::slot(g(p.slot_value()));
        break;
    case FunctorDesc::Kind::Atom:
        if (p.is(K::Atom) && p.set() == f.set()) return Out::atom(p.set(), p.value());
        break;
    case FunctorDesc::Kind::Sum:
        if (p.is(K::InL)) return Out::inl(fmap(f.left(), g, p.inner()));
        if (p.is(K::InR)) return Out::inr(fmap(f.right(), g, p.inner()));
        break;
    case FunctorDesc::Kind::Prod:
        if (p.is(K::Pair)) return Out::pair(fmap(f.left(), g, p.first()), fmap(f.right(), g, p.second()));
        break;
    }
    throw ShapeError("fmap: payload does not match " + to_string(f));
}

/// Catamorphism: `alg : [f] R -> R` applied bottom-up over `t`.
template <class R, class Alg>
R fold(const FunctorDesc& f, const Alg& alg, const Term& t) {
    return alg(fmap(f, [&](const Term& s) { return fold<R>(f, alg, s); }, t.node()));
}

inline std::string to_string(const FunctorDesc& f) {
    switch (f.kind()) {
    case FunctorDesc::Kind::Rec: return "X";
    case FunctorDesc::Kind::Atom: return std::string("A ") + to_string(f.set());
    case FunctorDesc::Kind::Sum: return "(" + to_string(f.left()) + " + " + to_string(f.right()) + ")";
    case FunctorDesc::Kind::Prod: return "(" + to_string(f.left()) + " * " + to_string(f.right()) + ")";
    }
    return "?";
}

/// Structural dump, e.g. `inl(inr(<e>, <e>))`; slots are printed by `show`.
template <class B, class Show>
std::string describe(const Layer<B>& p, const Show& show) {
    using K = typename Layer<B>::Kind;
    switch (p.kind()) {
    case K::Slot: return "<" + show(p.slot_value()) + ">";
    case K::Atom: return p.set() == BaseSet::Unit ? std::string("tt") : std::to_string(p.value());
    case K::InL: return "inl(" + describe(p.inner(), show) + ")";
    case K::InR: return "inr(" + describe(p.inner(), show) + ")";
    case K::Pair: return "(" + describe(p.first(), show) + ", " + describe(p.second(), show) + ")";
    }
    return "?";
}

inline std::string describe(const Term& t) {
    return "inn " + describe(t.node(), [](const Term& s) { return describe(s); });
}

} // namespace modlang
