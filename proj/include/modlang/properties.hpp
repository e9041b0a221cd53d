#pragma once

// Property sweeps over enumerated and generated populations. Each sweep
// returns one report per property; a report with failures keeps the first
// counterexample.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "modlang/derivation_io.hpp"
#include "modlang/enumerate.hpp"
#include "modlang/oracle.hpp"
#include "modlang/preservation.hpp"

namespace modlang {

struct PropertyReport {
    std::string name;
    std::size_t checked = 0;
    std::size_t failures = 0;
    std::string first_failure;

    PropertyReport() = default;
    explicit PropertyReport(std::string n) : name(std::move(n)) {}

    bool ok() const { return failures == 0; }

    /// `describe` runs only for the first failure.
    template <class Describe>
    void check(bool holds, const Describe& describe) {
        ++checked;
        if (holds) return;
        if (failures++ == 0) first_failure = describe();
    }
};

inline bool all_ok(const std::vector<PropertyReport>& rs) {
    for (const auto& r : rs)
        if (!r.ok()) return false;
    return true;
}

inline std::string format_report(const PropertyReport& r) {
    std::string line = (r.ok() ? "ok    " : "FAIL  ") + r.name + ": " + std::to_string(r.checked) + " checked, " +
                       std::to_string(r.failures) + " failed";
    if (!r.ok()) line += "\n      first: " + r.first_failure;
    return line;
}

struct TermSweepSelection {
    bool semantics = true;
    bool typing = true;
    bool preservation = true;
    bool oracle = true;
    bool round_trips = true;
};

/// Hooks that behave like composed_hooks() but check every output they hand
/// back against the subject it claims to type.
class AuditedHooks {
public:
    AuditedHooks() {
        hooks_.wt_nat = [this](Natural n) {
            ComposedTyping w = composed_hooks().wt_nat(n);
            note(validate_typing(w, enat(n), LangType::TNat), "wt_nat " + std::to_string(n));
            return w;
        };
        hooks_.wt_option = [this](const Payload& m) {
            ComposedTyping w = composed_hooks().wt_option(m);
            note(validate_typing(w, upcast(lifts::option(), m), LangType::TOption), "wt_option");
            return w;
        };
        hooks_.lift_sum_wt = [this](SumTyping s) {
            Judgement j = sum_typing_subject(s);
            ComposedTyping w = composed_hooks().lift_sum_wt(std::move(s));
            note(validate_typing(w, j.term, j.type), "lift_sum_wt on " + render(j.term));
            return w;
        };
        hooks_.lift_array_wt = [this](ArrayTyping a) {
            Judgement j = array_typing_subject(a);
            ComposedTyping w = composed_hooks().lift_array_wt(std::move(a));
            note(validate_typing(w, j.term, j.type), "lift_array_wt on " + render(j.term));
            return w;
        };
        hooks_.induction = [this](const ComposedStep& s, const ComposedTyping& w) {
            return preserve_with(hooks_, s, w);
        };
    }
    AuditedHooks(const AuditedHooks&) = delete;
    AuditedHooks& operator=(const AuditedHooks&) = delete;

    const PreservationHooks& hooks() const { return hooks_; }
    std::size_t calls() const { return calls_; }
    std::size_t bad() const { return bad_; }
    const std::string& first_bad() const { return first_bad_; }

private:
    void note(bool ok, const std::string& what) {
        ++calls_;
        if (!ok && bad_++ == 0) first_bad_ = what;
    }

    PreservationHooks hooks_;
    std::size_t calls_ = 0, bad_ = 0;
    std::string first_bad_;
};

namespace detail {

inline bool oracle_traces_agree(const Term& t, std::size_t fuel) {
    Trace tr = trace(t, fuel);
    oracle::MonoExpr cur = oracle::embed(t);
    for (const auto& s : tr.steps) {
        auto m = oracle::mono_step(cur);
        if (!m || !(*m == oracle::embed(s.next))) return false;
        cur = std::move(*m);
    }
    // Both sides stop together unless fuel ran out.
    return tr.fuel_exhausted || !oracle::mono_step(cur);
}

/// Frozen operands of a congruence step are carried over unchanged.
inline bool congruence_local(const Term& t, const DrivenStep& s) {
    const ComposedStep& d = s.derivation;
    if (d.via_sum()) {
        auto before = as_plus(t), after = as_plus(s.next);
        if (std::holds_alternative<StepL>(d.sum())) return before && after && after->second == before->second;
        if (std::holds_alternative<StepR>(d.sum())) return before && after && after->first == before->first;
        return true;
    }
    if (std::holds_alternative<StepI>(d.array())) {
        auto before = as_index(t), after = as_index(s.next);
        return before && after && after->first == before->first;
    }
    return true;
}

} // namespace detail

/// Runs the selected per-term properties on every term of depth ≤ `depth`.
inline std::vector<PropertyReport> sweep_terms(std::size_t depth, const TermSweepSelection& sel = {},
                                               const EnumerationOptions& opts = {}) {
    PropertyReport sound{"driver soundness"}, determ{"driver determinism"}, local{"congruence locality"},
        values{"no step from values"}, typing{"inference soundness"}, preserv{"preservation"},
        hooks{"hook coherence"}, o_type{"oracle typing agreement"}, o_step{"oracle step agreement"},
        o_trace{"oracle trace agreement (fuel 32)"}, embed_rt{"embed/project round trip"},
        syntax_rt{"parse/render round trip"}, deriv_rt{"derivation s-expression round trip"};
    AuditedHooks audit;

    for_each_term(
        depth,
        [&](const Term& t) {
            auto show = [&] { return render(t); };
            auto step = drive_step(t);
            auto inf = (sel.typing || sel.preservation || sel.oracle || sel.round_trips) ? infer(t)
                                                                                        : std::optional<Inferred>{};
            if (sel.semantics) {
                if (step) {
                    sound.check(validate_step(step->derivation, t, step->next), show);
                    local.check(detail::congruence_local(t, *step), show);
                }
                auto again = drive_step(t);
                determ.check(again.has_value() == step.has_value() &&
                                 (!step || (again->next == step->next && again->derivation == step->derivation)),
                             show);
                if (is_value(t)) values.check(!step, show);
            }
            if (sel.typing && inf) typing.check(validate_typing(inf->derivation, t, inf->type), show);
            if (sel.preservation && inf && step) {
                std::size_t bad_before = audit.bad();
                bool ok = false;
                std::string why;
                try {
                    ComposedTyping w2 = preserve_with(audit.hooks(), step->derivation, inf->derivation);
                    ok = validate_typing(w2, step->next, inf->type);
                } catch (const Error& e) {
                    why = e.what();
                }
                preserv.check(ok, [&] { return show() + (why.empty() ? "" : " (" + why + ")"); });
                hooks.check(audit.bad() == bad_before, [&] { return show() + ": " + audit.first_bad(); });
            }
            if (sel.oracle) {
                oracle::MonoExpr m = oracle::embed(t);
                auto mt = oracle::mono_infer(m);
                o_type.check(mt.has_value() == inf.has_value() && (!inf || *mt == inf->type), show);
                auto ms = oracle::mono_step(m);
                o_step.check(ms.has_value() == step.has_value() && (!step || *ms == oracle::embed(step->next)),
                             show);
                o_trace.check(detail::oracle_traces_agree(t, 32), show);
                embed_rt.check(oracle::project(m) == t, show);
            }
            if (sel.round_trips) {
                syntax_rt.check(
                    [&] {
                        try {
                            return parse(render(t)) == t;
                        } catch (const Error&) {
                            return false;
                        }
                    }(),
                    show);
                if (inf || step) {
                    deriv_rt.check(
                        [&] {
                            try {
                                if (inf && !(parse_typing_derivation(render_derivation(inf->derivation)) ==
                                             inf->derivation))
                                    return false;
                                if (step && !(parse_step_derivation(render_derivation(step->derivation), t) ==
                                              step->derivation))
                                    return false;
                                return true;
                            } catch (const Error&) {
                                return false;
                            }
                        }(),
                        show);
                }
            }
        },
        opts);

    std::vector<PropertyReport> out;
    if (sel.semantics) out.insert(out.end(), {sound, determ, local, values});
    if (sel.typing) out.push_back(typing);
    if (sel.preservation) out.insert(out.end(), {preserv, hooks});
    if (sel.oracle) out.insert(out.end(), {o_type, o_step, o_trace, embed_rt});
    if (sel.round_trips) out.insert(out.end(), {syntax_rt, deriv_rt});
    return out;
}

/// Round trip, injectivity, disjointness and lazy coercion over every
/// well-formed path into FExpr, with payload slots drawn from `slots`.
inline std::vector<PropertyReport> sweep_subobject(const std::vector<Term>& slots) {
    PropertyReport round{"upcast/downcast round trip"}, inject{"upcast injectivity"},
        disjoint{"cross-path disjointness"}, lazy{"lazy coercion agrees with upcast"};
    const auto paths = all_paths(shapes::fexpr());
    for (const auto& path : paths) {
        auto payloads = enumerate_payloads(path_target(path), slots);
        std::unordered_map<std::string, std::size_t> seen;
        for (std::size_t k = 0; k < payloads.size(); ++k) {
            const Payload& p = payloads[k];
            auto show = [&] { return to_string(path) + " on " + describe(p, [](const Term& s) { return render(s); }); };
            Term image = upcast(path, p);
            auto back = downcast(path, image);
            round.check(back && *back == p, show);
            // render is injective on terms, so equal images collide here.
            auto [it, fresh] = seen.emplace(render(image), k);
            inject.check(fresh || payloads[it->second] == p, show);
            lazy.check(coerce(LazyCoercion(Injection{path}, p)) == image, show);
            for (const auto& other : paths) {
                if (comparable(path, other)) continue;
                disjoint.check(!downcast(other, image), [&] { return show() + " vs " + to_string(other); });
            }
        }
    }
    return {round, inject, disjoint, lazy};
}

/// fmap identity and composition on `samples` random payloads per fragment
/// descriptor, plus fold of the rebuild algebra on random terms.
inline std::vector<PropertyReport> sweep_functor_laws(std::size_t samples, std::uint64_t seed) {
    PropertyReport ident{"fmap identity"}, compose{"fmap composition"}, rebuild{"fold rebuild is identity"};
    std::mt19937_64 rng(seed);
    auto slot = [&] { return random_term(rng, 2, 5); };
    auto g = [](const Term& t) { return some(t); };
    auto h = [](const Term& t) { return plus(t, enat(1)); };
    auto id = [](const Term& t) { return t; };
    const std::vector<std::pair<const char*, FunctorDesc>> descs{
        {"nat", shapes::nat()},   {"option", shapes::option()}, {"sum", shapes::sum()},
        {"array", shapes::array()}, {"fexpr", shapes::fexpr()},
    };
    for (const auto& [name, f] : descs) {
        for (std::size_t k = 0; k < samples; ++k) {
            Payload p = random_payload(rng, f, slot);
            auto show = [&, name = name] { return std::string(name) + ": " + describe(p, [](const Term& s) { return render(s); }); };
            ident.check(fmap(f, id, p) == p, show);
            compose.check(fmap(f, [&](const Term& t) { return g(h(t)); }, p) == fmap(f, g, fmap(f, h, p)), show);
        }
    }
    for (std::size_t k = 0; k < samples; ++k) {
        Term t = random_term(rng, 4);
        rebuild.check(fold<Term>(shapes::fexpr(), [](Payload p) { return inn(std::move(p)); }, t) == t,
                      [&] { return render(t); });
    }
    return {ident, compose, rebuild};
}

} // namespace modlang
