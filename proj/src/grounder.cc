// clsem : a semantics workbench for logic programs with conditional literals
// Copyright (c) 2026 clsem authors. MIT license (see LICENSE).

#include <clsem/grounder.hh>

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>

namespace clsem {

bool PredicatePartition::is_intensional(Predicate const &p) const { return intensional.count(p) > 0; }

PredicatePartition standard_partition(Program const &p) {
    PredicatePartition part;
    part.intensional = build_signature(p).predicates;
    return part;
}

namespace {

using Env = std::map<std::string, PrecomputedTerm>;

//! Recursive grounding with a per-sentence expansion budget. Subformulas are
//! memoized on (node, projection of the environment onto the node's free
//! variables), so quantifier branches that do not touch the bound variable
//! are grounded once.
class Grounder {
public:
    Grounder(StandardInterpretation const &interp, PredicatePartition const &part, Limits const &limits,
             Diagnostics *diag)
        : interp_(interp), part_(part), limits_(limits), diag_(diag) {
        integer_values_.reserve(interp.integers.size());
        for (auto n : interp.integers) { integer_values_.push_back(pre_num(n)); }
    }

    InfFormulaPtr ground(FOFormulaPtr const &f, Env &env) {
        auto key = std::make_pair(static_cast<void const *>(f.get()), projection(f, env));
        auto hit = memo_.find(key);
        if (hit != memo_.end()) { return hit->second; }
        auto result = ground_uncached(f, env);
        memo_.emplace(std::move(key), result);
        return result;
    }

private:
    std::vector<std::string> const &free_names(FOFormulaPtr const &f) {
        auto it = names_.find(f.get());
        if (it != names_.end()) { return it->second; }
        std::vector<std::string> names;
        for (auto const &v : free_variables(f)) { names.push_back(v.name); }
        std::sort(names.begin(), names.end());
        return names_.emplace(f.get(), std::move(names)).first->second;
    }

    std::string projection(FOFormulaPtr const &f, Env const &env) {
        std::string key;
        for (auto const &name : free_names(f)) {
            auto it = env.find(name);
            if (it == env.end()) { throw std::invalid_argument("formula is not closed: unbound variable " + name); }
            key += name;
            key += '=';
            key += render(it->second);
            key += ';';
        }
        return key;
    }

    PrecomputedTerm eval(FOTermPtr const &t, Env const &env) {
        return eval_foterm(t, env, diag_, interp_.int_bound);
    }

    std::vector<PrecomputedTerm> const &domain_of(Sort s) {
        return s == Sort::integer ? integer_values_ : interp_.universe;
    }

    void charge(FOQuant const &q) {
        unsigned __int128 total = 1;
        for (auto const &v : q.vars) {
            total *= domain_of(v.sort).size();
            if (expanded_ + total > limits_.instance_cap) {
                auto clamped = static_cast<std::uint64_t>(
                    std::min<unsigned __int128>(expanded_ + total, ~std::uint64_t{0}));
                throw RefusalError("grounding expands too many instances", clamped, limits_.instance_cap);
            }
        }
        expanded_ += static_cast<std::uint64_t>(total);
    }

    //! Branches are deduplicated as they are produced (the set formers would
    //! drop the duplicates anyway), so a block never holds more than its
    //! distinct instances in memory.
    void expand(FOQuant const &q, std::size_t idx, Env &env, std::vector<InfFormulaPtr> &parts,
                std::unordered_set<std::string_view> &seen) {
        if (idx == q.vars.size()) {
            auto branch = ground(q.body, env);
            if (seen.insert(branch->key).second) { parts.push_back(std::move(branch)); }
            return;
        }
        auto const &var = q.vars[idx];
        auto shadowed = env.find(var.name);
        std::optional<PrecomputedTerm> saved;
        if (shadowed != env.end()) { saved = shadowed->second; }
        for (auto const &value : domain_of(var.sort)) {
            env[var.name] = value;
            expand(q, idx + 1, env, parts, seen);
        }
        if (saved.has_value()) { env[var.name] = *saved; }
        else { env.erase(var.name); }
    }

    InfFormulaPtr ground_uncached(FOFormulaPtr const &f, Env &env) {
        return std::visit(
            [&](auto const &v) -> InfFormulaPtr {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, FOFalsum>) { return inf_bot(); }
                else if constexpr (std::is_same_v<T, FOAtom>) {
                    GroundAtom atom;
                    atom.predicate = v.predicate;
                    atom.args.reserve(v.args.size());
                    for (auto const &a : v.args) { atom.args.push_back(eval(a, env)); }
                    Predicate pred{v.predicate, static_cast<int>(v.args.size())};
                    if (part_.is_intensional(pred)) {
                        if (diag_ != nullptr) {
                            for (auto const &a : atom.args) {
                                if (!interp_.in_universe(a)) {
                                    diag_->note("ground atom argument " + render(a) + " outside the universe");
                                }
                            }
                        }
                        return inf_atom(std::move(atom));
                    }
                    return interp_.true_atoms.count(atom) > 0 ? inf_top() : inf_bot();
                }
                else if constexpr (std::is_same_v<T, FOComparison>) {
                    auto lhs = eval(v.lhs, env);
                    auto rhs = eval(v.rhs, env);
                    return rel_holds(v.rel, lhs, rhs) ? inf_top() : inf_bot();
                }
                else if constexpr (std::is_same_v<T, FOAnd>) {
                    std::vector<InfFormulaPtr> parts;
                    parts.reserve(v.parts.size());
                    for (auto const &part : v.parts) { parts.push_back(ground(part, env)); }
                    return inf_conj(std::move(parts));
                }
                else if constexpr (std::is_same_v<T, FOOr>) {
                    std::vector<InfFormulaPtr> parts;
                    parts.reserve(v.parts.size());
                    for (auto const &part : v.parts) { parts.push_back(ground(part, env)); }
                    return inf_disj(std::move(parts));
                }
                else if constexpr (std::is_same_v<T, FOImplies>) {
                    auto lhs = ground(v.lhs, env);
                    return inf_implies(std::move(lhs), ground(v.rhs, env));
                }
                else {
                    static_assert(std::is_same_v<T, FOQuant>);
                    charge(v);
                    std::vector<InfFormulaPtr> parts;
                    std::unordered_set<std::string_view> seen;
                    expand(v, 0, env, parts, seen);
                    return v.kind == Quant::exists ? inf_disj(std::move(parts)) : inf_conj(std::move(parts));
                }
            },
            f->data);
    }

    StandardInterpretation const &interp_;
    PredicatePartition const &part_;
    Limits const &limits_;
    Diagnostics *diag_;
    std::vector<PrecomputedTerm> integer_values_;
    std::uint64_t expanded_ = 0;
    std::unordered_map<FOFormula const *, std::vector<std::string>> names_;
    std::map<std::pair<void const *, std::string>, InfFormulaPtr> memo_;
};

} // namespace

InfFormulaPtr ground_formula(StandardInterpretation const &interp, PredicatePartition const &part,
                             FOFormulaPtr const &f, Limits const &limits, Diagnostics *diag) {
    Grounder grounder(interp, part, limits, diag);
    Env env;
    return grounder.ground(f, env);
}

std::vector<InfFormulaPtr> ground_theory(StandardInterpretation const &interp, PredicatePartition const &part,
                                         FOTheory const &theory, Limits const &limits, Diagnostics *diag) {
    std::vector<InfFormulaPtr> out;
    out.reserve(theory.sentences.size());
    for (auto const &f : theory.sentences) { out.push_back(ground_formula(interp, part, f, limits, diag)); }
    std::sort(out.begin(), out.end(),
              [](InfFormulaPtr const &a, InfFormulaPtr const &b) { return a->key < b->key; });
    out.erase(std::unique(out.begin(), out.end(),
                          [](InfFormulaPtr const &a, InfFormulaPtr const &b) { return a->key == b->key; }),
              out.end());
    return out;
}

} // namespace clsem
