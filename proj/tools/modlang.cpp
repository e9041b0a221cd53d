#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "modlang/modlang.hpp"

using namespace modlang;

namespace {

constexpr int kOk = 0;
constexpr int kUserError = 1;
constexpr int kInvariant = 2;

struct UserError : Error {
    using Error::Error;
};

Term parse_arg(const std::string& text) {
    try {
        return parse(text);
    } catch (const SyntaxError& e) {
        throw UserError(e.what());
    }
}

int print_reports(const std::vector<PropertyReport>& reports) {
    for (const auto& r : reports) std::cout << format_report(r) << "\n";
    bool ok = all_ok(reports);
    std::cout << (ok ? "all properties hold" : "property violations found") << "\n";
    return ok ? kOk : kInvariant;
}

int cmd_check(const std::string& text) {
    Term t = parse_arg(text);
    auto inf = infer(t);
    if (!inf) {
        std::cout << "ill-typed\n";
        return kUserError;
    }
    if (!validate_typing(inf->derivation, t, inf->type)) {
        std::cerr << "inferred derivation does not validate\n";
        return kInvariant;
    }
    std::cout << to_string(inf->type) << "\n" << render_derivation(inf->derivation) << "\n";
    return kOk;
}

int cmd_eval(const std::string& text, bool show_trace, std::size_t fuel) {
    Term t = parse_arg(text);
    Trace tr = trace(t, fuel);
    Term cur = t;
    for (const auto& s : tr.steps) {
        if (!validate_step(s.derivation, cur, s.next)) {
            std::cerr << "driver step does not validate from " << render(cur) << "\n";
            return kInvariant;
        }
        if (show_trace) std::cout << render(cur) << "  -->  " << render(s.next) << "  " << render_derivation(s.derivation) << "\n";
        cur = s.next;
    }
    std::cout << render(cur) << "\n";
    if (tr.fuel_exhausted) {
        std::cerr << "fuel exhausted after " << fuel << " steps\n";
        return kUserError;
    }
    return kOk;
}

int cmd_preserve(const std::string& text) {
    Term t = parse_arg(text);
    auto inf = infer(t);
    if (!inf) {
        std::cout << "ill-typed\n";
        return kUserError;
    }
    auto step = drive_step(t);
    if (!step) {
        std::cout << "no step: " << render(t) << " is in normal form\n";
        return kUserError;
    }
    ComposedTyping out = preserve(step->derivation, inf->derivation);
    std::cout << render_derivation(inf->derivation) << "\n"
              << render_derivation(step->derivation) << "\n"
              << render_derivation(out) << "\n";
    if (!validate_typing(out, step->next, inf->type)) {
        std::cerr << "preserved derivation does not type " << render(step->next) << "\n";
        return kInvariant;
    }
    return kOk;
}

int cmd_oracle_diff(std::size_t depth) {
    TermSweepSelection sel{false, false, false, true, false};
    std::cout << "oracle sweep over " << count_terms(depth) << " terms of depth <= " << depth << "\n";
    return print_reports(sweep_terms(depth, sel));
}

int cmd_selftest(std::size_t depth) {
    std::cout << "term sweep over " << count_terms(depth) << " terms of depth <= " << depth << "\n";
    auto reports = sweep_terms(depth);
    auto sub = sweep_subobject(enumerate_terms(0));
    auto laws = sweep_functor_laws(1000, 1);
    reports.insert(reports.end(), sub.begin(), sub.end());
    reports.insert(reports.end(), laws.begin(), laws.end());
    return print_reports(reports);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"modlang: a modular expression language with derivation-level type preservation"};
    app.require_subcommand(1);

    std::string expr;
    bool show_trace = false;
    std::size_t fuel = 64;
    std::size_t depth = 2;

    auto* check = app.add_subcommand("check", "infer a type and print its derivation");
    check->add_option("expr", expr, "expression")->required();

    auto* eval = app.add_subcommand("eval", "evaluate to normal form");
    eval->add_option("expr", expr, "expression")->required();
    eval->add_flag("--trace", show_trace, "print every step with its derivation");
    eval->add_option("--fuel", fuel, "maximum number of steps")->capture_default_str();

    auto* pres = app.add_subcommand("preserve", "type, step once, and transport the typing across the step");
    pres->add_option("expr", expr, "expression")->required();

    auto* diff = app.add_subcommand("oracle-diff", "compare against the monolithic implementation");
    diff->add_option("--depth", depth, "enumeration depth")->required()->check(CLI::Range(0, 2));

    auto* self = app.add_subcommand("selftest", "run the property suite");
    self->add_option("--depth", depth, "enumeration depth")->required()->check(CLI::Range(0, 2));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUserError;
    }

    try {
        if (*check) return cmd_check(expr);
        if (*eval) return cmd_eval(expr, show_trace, fuel);
        if (*pres) return cmd_preserve(expr);
        if (*diff) return cmd_oracle_diff(depth);
        if (*self) return cmd_selftest(depth);
    } catch (const UserError& e) {
        std::cerr << e.what() << "\n";
        return kUserError;
    } catch (const OverflowError& e) {
        std::cerr << e.what() << "\n";
        return kUserError;
    } catch (const Error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInvariant;
    }
    return kUserError;
}
