#pragma once

// S-expression form of step and typing derivations, using the rule names
// step⁺, step[], stepl, stepr, stepv, stepi, lookup, lift-wt-nat,
// lift-wt-option, lift-wt-sum, lift-wt-array, ok-sum, ok-nil, ok-ins,
// ok-lookup.
//
// Terms a rule determines from its premises are left implicit, as in
// `(step[] (stepi (step⁺ stepv)))`. Typing derivations carry every term they
// cannot rebuild (lift-wt-nat's number, lift-wt-option's payload as a
// `{term}` literal). Step derivations leave all terms implicit and are
// elaborated against the term they step from.

#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "modlang/semantics.hpp"
#include "modlang/syntax.hpp"
#include "modlang/typing.hpp"

namespace modlang {

struct DerivationSyntaxError : Error {
    DerivationSyntaxError(std::size_t offset, const std::string& msg)
        : Error("derivation error at offset " + std::to_string(offset) + ": " + msg), offset(offset) {}
    std::size_t offset;
};

struct SExpr {
    enum class Kind { Atom, TermLiteral, List };
    Kind kind;
    std::string text; // atom name or term literal source
    std::vector<SExpr> items;
    std::size_t offset = 0;

    bool is_atom(std::string_view name) const { return kind == Kind::Atom && text == name; }
    /// `(head args...)` with the given head and arity.
    bool is_call(std::string_view head, std::size_t arity) const {
        return kind == Kind::List && items.size() == arity + 1 && items[0].is_atom(head);
    }
};

namespace detail {

class SExprReader {
public:
    explicit SExprReader(std::string_view text) : text_(text) {}

    SExpr read_all() {
        SExpr e = read();
        skip_space();
        if (pos_ != text_.size()) throw DerivationSyntaxError(pos_, "trailing input");
        return e;
    }

private:
    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    SExpr read() {
        skip_space();
        if (pos_ == text_.size()) throw DerivationSyntaxError(pos_, "unexpected end of input");
        std::size_t start = pos_;
        char c = text_[pos_];
        if (c == ')') throw DerivationSyntaxError(pos_, "unexpected ')'");
        if (c == '(') {
            ++pos_;
            SExpr list{SExpr::Kind::List, {}, {}, start};
            for (;;) {
                skip_space();
                if (pos_ == text_.size()) throw DerivationSyntaxError(pos_, "unclosed '('");
                if (text_[pos_] == ')') {
                    ++pos_;
                    return list;
                }
                list.items.push_back(read());
            }
        }
        if (c == '{') {
            auto close = text_.find('}', pos_);
            if (close == std::string_view::npos) throw DerivationSyntaxError(pos_, "unclosed '{'");
            SExpr lit{SExpr::Kind::TermLiteral, std::string(text_.substr(pos_ + 1, close - pos_ - 1)), {}, start};
            pos_ = close + 1;
            return lit;
        }
        while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
               text_[pos_] != '(' && text_[pos_] != ')' && text_[pos_] != '{')
            ++pos_;
        return SExpr{SExpr::Kind::Atom, std::string(text_.substr(start, pos_ - start)), {}, start};
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

inline std::string head_name(const SExpr& e) {
    if (e.kind == SExpr::Kind::Atom) return e.text;
    if (e.kind == SExpr::Kind::List && !e.items.empty() && e.items[0].kind == SExpr::Kind::Atom)
        return e.items[0].text;
    return "<term literal>";
}

[[noreturn]] inline void bad(const SExpr& e, const std::string& msg) { throw DerivationSyntaxError(e.offset, msg); }

inline bool is_step_plus(const SExpr& e) { return e.is_atom("step⁺") || e.is_atom("step+"); }

} // namespace detail

// Rendering.

inline std::string render_derivation(const ComposedTyping& d);

inline std::string render_derivation(const ArrayTyping& w) {
    return std::visit(overloaded{
                          [](const OkNil&) { return std::string("ok-nil"); },
                          [](const OkIns& r) {
                              return "(ok-ins " + render_derivation(*r.wa) + " " + render_derivation(*r.we) + " " +
                                     render_derivation(*r.wn) + ")";
                          },
                          [](const OkLookup& r) {
                              return "(ok-lookup " + render_derivation(*r.wa) + " " + render_derivation(*r.we) + ")";
                          },
                      },
                      w);
}

inline std::string render_derivation(const SumTyping& w) {
    return "(ok-sum " + render_derivation(*w.w1) + " " + render_derivation(*w.w2) + ")";
}

inline std::string render_derivation(const ComposedTyping& d) {
    return std::visit(overloaded{
                          [](const LiftWtNat& r) { return "(lift-wt-nat " + std::to_string(r.n) + ")"; },
                          [](const LiftWtOption& r) {
                              return "(lift-wt-option {" + render(upcast(lifts::option(), r.m)) + "})";
                          },
                          [](const LiftWtSum& r) { return "(lift-wt-sum " + render_derivation(r.inner) + ")"; },
                          [](const LiftWtArray& r) { return "(lift-wt-array " + render_derivation(r.inner) + ")"; },
                      },
                      d.rule);
}

inline std::string render_derivation(const ComposedStep& d) {
    if (d.via_sum()) {
        std::string body = std::visit(overloaded{
                                          [](const StepL& r) { return "(stepl " + render_derivation(*r.inner) + ")"; },
                                          [](const StepR& r) { return "(stepr " + render_derivation(*r.inner) + ")"; },
                                          [](const StepV&) { return std::string("stepv"); },
                                      },
                                      d.sum());
        return "(step⁺ " + body + ")";
    }
    std::string body = std::visit(overloaded{
                                      [](const StepI& r) { return "(stepi " + render_derivation(*r.inner) + ")"; },
                                      [](const LookupStep&) { return std::string("lookup"); },
                                  },
                                  d.array());
    return "(step[] " + body + ")";
}

// Parsing.

namespace detail {

inline ComposedTyping typing_from(const SExpr& e);

inline Term subject_of(const ComposedTyping& w) { return typing_subject(w).term; }

inline ComposedTyping typing_from(const SExpr& e) {
    if (e.is_call("lift-wt-nat", 1)) {
        const SExpr& arg = e.items[1];
        Natural n = 0;
        auto [ptr, ec] = std::from_chars(arg.text.data(), arg.text.data() + arg.text.size(), n);
        if (arg.kind != SExpr::Kind::Atom || ec != std::errc() || ptr != arg.text.data() + arg.text.size())
            bad(arg, "lift-wt-nat expects a natural number");
        return LiftWtNat{n};
    }
    if (e.is_call("lift-wt-option", 1)) {
        const SExpr& arg = e.items[1];
        if (arg.kind != SExpr::Kind::TermLiteral) bad(arg, "lift-wt-option expects a {term} literal");
        Term t = [&] {
            try {
                return parse(arg.text);
            } catch (const SyntaxError& err) {
                throw DerivationSyntaxError(arg.offset + 1 + err.offset, err.what());
            }
        }();
        auto m = downcast(lifts::option(), t);
        if (!m) bad(arg, "lift-wt-option payload is not some(...) or none");
        return LiftWtOption{*m};
    }
    if (e.is_call("lift-wt-sum", 1)) {
        const SExpr& inner = e.items[1];
        if (!inner.is_call("ok-sum", 2)) bad(inner, "lift-wt-sum expects (ok-sum w w), got " + head_name(inner));
        ComposedTyping w1 = typing_from(inner.items[1]);
        ComposedTyping w2 = typing_from(inner.items[2]);
        Term e1 = subject_of(w1), e2 = subject_of(w2);
        return LiftWtSum{OkSum{std::move(w1), std::move(w2), std::move(e1), std::move(e2)}};
    }
    if (e.is_call("lift-wt-array", 1)) {
        const SExpr& inner = e.items[1];
        if (inner.is_atom("ok-nil")) return LiftWtArray{OkNil{}};
        if (inner.is_call("ok-ins", 3)) {
            ComposedTyping wa = typing_from(inner.items[1]);
            ComposedTyping we = typing_from(inner.items[2]);
            ComposedTyping wn = typing_from(inner.items[3]);
            Term a = subject_of(wa), v = subject_of(we), n = subject_of(wn);
            return LiftWtArray{OkIns{std::move(wa), std::move(we), std::move(wn), std::move(a), std::move(v),
                                     std::move(n)}};
        }
        if (inner.is_call("ok-lookup", 2)) {
            ComposedTyping wa = typing_from(inner.items[1]);
            ComposedTyping we = typing_from(inner.items[2]);
            Term a = subject_of(wa), i = subject_of(we);
            return LiftWtArray{OkLookup{std::move(wa), std::move(we), std::move(a), std::move(i)}};
        }
        bad(inner, "unknown array typing rule " + head_name(inner));
    }
    bad(e, "unknown typing rule " + head_name(e));
}

inline ComposedStep step_from(const SExpr& e, const Term& source) {
    if (e.kind != SExpr::Kind::List || e.items.size() != 2) bad(e, "unknown step rule " + head_name(e));
    const SExpr& rule = e.items[1];
    if (is_step_plus(e.items[0])) {
        auto p = as_plus(source);
        if (!p) bad(e, "step⁺ does not apply: source is not a sum");
        auto& [l, r] = *p;
        if (rule.is_atom("stepv")) {
            auto n = as_nat(l), m = as_nat(r);
            if (!n || !m) bad(rule, "stepv needs two nat literals");
            return SumStep{StepV{*n, *m}};
        }
        if (rule.is_call("stepl", 1)) {
            ComposedStep inner = step_from(rule.items[1], l);
            Term next = step_endpoints(inner).to;
            return SumStep{StepL{std::move(inner), l, std::move(next), r}};
        }
        if (rule.is_call("stepr", 1)) {
            ComposedStep inner = step_from(rule.items[1], r);
            Term next = step_endpoints(inner).to;
            return SumStep{StepR{std::move(inner), l, r, std::move(next)}};
        }
        bad(rule, "unknown sum step rule " + head_name(rule));
    }
    if (e.items[0].is_atom("step[]")) {
        auto p = as_index(source);
        if (!p) bad(e, "step[] does not apply: source is not a lookup");
        auto& [a, i] = *p;
        if (rule.is_atom("lookup")) {
            auto arr = downcast(lifts::array(), a);
            auto n = as_nat(i);
            if (!arr || !n) bad(rule, "lookup needs an array operand and a nat literal index");
            return ArrayStep{LookupStep{*arr, *n}};
        }
        if (rule.is_call("stepi", 1)) {
            ComposedStep inner = step_from(rule.items[1], i);
            Term next = step_endpoints(inner).to;
            return ArrayStep{StepI{std::move(inner), a, i, std::move(next)}};
        }
        bad(rule, "unknown array step rule " + head_name(rule));
    }
    bad(e, "unknown step rule " + head_name(e));
}

} // namespace detail

inline ComposedTyping parse_typing_derivation(std::string_view text) {
    return detail::typing_from(detail::SExprReader(text).read_all());
}

/// Elaborates the implicit terms of a step derivation against `source`.
inline ComposedStep parse_step_derivation(std::string_view text, const Term& source) {
    return detail::step_from(detail::SExprReader(text).read_all(), source);
}

} // namespace modlang
