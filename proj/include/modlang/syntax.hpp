#pragma once

// Concrete syntax for FExpr terms.
//
//   expr    := sum
//   sum     := postfix ('+' postfix)*
//   postfix := primary ('!' primary | '[' expr ']' ':=' primary)*
//   primary := natural | 'nil' | 'none' | 'some' '(' expr ')' | '(' expr ')'

#include <cctype>
#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>

#include "modlang/fragments.hpp"

namespace modlang {

struct SyntaxError : Error {
    SyntaxError(std::size_t offset, const std::string& msg)
        : Error("syntax error at offset " + std::to_string(offset) + ": " + msg), offset(offset) {}
    std::size_t offset;
};

namespace detail {

class TermParser {
public:
    explicit TermParser(std::string_view text) : text_(text) {}

    Term parse_all() {
        Term t = parse_sum();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return t;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(pos_, msg); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(std::string_view tok) {
        skip_space();
        if (text_.substr(pos_, tok.size()) != tok) return false;
        pos_ += tok.size();
        return true;
    }

    void expect(std::string_view tok) {
        if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
    }

    bool accept_keyword(std::string_view kw) {
        skip_space();
        if (text_.substr(pos_, kw.size()) != kw) return false;
        std::size_t end = pos_ + kw.size();
        if (end < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[end])) || text_[end] == '_'))
            return false;
        pos_ = end;
        return true;
    }

    Term parse_sum() {
        Term t = parse_postfix();
        while (accept("+")) t = plus(std::move(t), parse_postfix());
        return t;
    }

    Term parse_postfix() {
        Term t = parse_primary();
        for (;;) {
            if (accept("!")) {
                t = index(std::move(t), parse_primary());
            } else if (accept("[")) {
                Term i = parse_sum();
                expect("]");
                expect(":=");
                t = assign(std::move(t), std::move(i), parse_primary());
            } else {
                return t;
            }
        }
    }

    Term parse_primary() {
        skip_space();
        if (pos_ == text_.size()) fail("unexpected end of input");
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Natural n = 0;
            auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), n);
            if (ec != std::errc()) fail("natural literal out of range");
            pos_ = static_cast<std::size_t>(ptr - text_.data());
            return enat(n);
        }
        if (accept_keyword("nil")) return nil();
        if (accept_keyword("none")) return none();
        if (accept_keyword("some")) {
            expect("(");
            Term e = parse_sum();
            expect(")");
            return some(std::move(e));
        }
        if (accept("(")) {
            Term e = parse_sum();
            expect(")");
            return e;
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

enum class Prec { Sum = 0, Postfix = 1, Primary = 2 };

inline Prec precedence(TermKind k) {
    switch (k) {
    case TermKind::Plus: return Prec::Sum;
    case TermKind::Index:
    case TermKind::Assign: return Prec::Postfix;
    default: return Prec::Primary;
    }
}

inline void render_into(std::string& out, const Term& t, Prec need) {
    TermKind k = classify(t);
    bool paren = precedence(k) < need;
    if (paren) out += '(';
    switch (k) {
    case TermKind::Nat: out += std::to_string(*as_nat(t)); break;
    case TermKind::None: out += "none"; break;
    case TermKind::Nil: out += "nil"; break;
    case TermKind::Some:
        out += "some(";
        render_into(out, *as_some(t), Prec::Sum);
        out += ')';
        break;
    case TermKind::Plus: {
        auto [a, b] = *as_plus(t);
        render_into(out, a, Prec::Sum);
        out += " + ";
        render_into(out, b, Prec::Postfix);
        break;
    }
    case TermKind::Index: {
        auto [a, i] = *as_index(t);
        render_into(out, a, Prec::Postfix);
        out += " ! ";
        render_into(out, i, Prec::Primary);
        break;
    }
    case TermKind::Assign: {
        auto v = *as_assign(t);
        render_into(out, v.array, Prec::Postfix);
        out += '[';
        render_into(out, v.index, Prec::Sum);
        out += "] := ";
        render_into(out, v.value, Prec::Primary);
        break;
    }
    }
    if (paren) out += ')';
}

} // namespace detail

/// Throws SyntaxError with the byte offset of the offending input.
inline Term parse(std::string_view text) { return detail::TermParser(text).parse_all(); }

/// Minimal-parenthesis rendering; `parse(render(t)) == t`.
inline std::string render(const Term& t) {
    std::string out;
    detail::render_into(out, t, detail::Prec::Sum);
    return out;
}

} // namespace modlang
