// clsem : a semantics workbench for logic programs with conditional literals
// Copyright (c) 2026 clsem authors. MIT license (see LICENSE).

#include <clsem/tau_ag.hh>
#include <clsem/values.hh>

#include <algorithm>

namespace clsem {

namespace {

using Subst = std::map<std::string, PrecomputedTerm>;

//! number of tuples of universe elements for k variables, capped
std::uint64_t tuple_count(size_t universe_size, size_t k, Limits const &lim) {
    unsigned __int128 total = 1;
    for (size_t i = 0; i < k; ++i) {
        total *= universe_size;
        if (total > lim.instance_cap) {
            std::uint64_t reported = total > UINT64_MAX ? UINT64_MAX
                                                        : static_cast<std::uint64_t>(total);
            throw RefusalError("instantiation over too many tuples", reported, lim.instance_cap);
        }
    }
    return static_cast<std::uint64_t>(total);
}

//! calls fn once per substitution of universe elements for vars, with the
//! last variable varying fastest
template <typename Fn>
void for_each_substitution(std::vector<std::string> const &vars,
                           std::vector<PrecomputedTerm> const &universe, Limits const &lim,
                           Fn &&fn) {
    tuple_count(universe.size(), vars.size(), lim);
    if (vars.empty()) {
        fn(Subst{});
        return;
    }
    if (universe.empty()) { return; }
    std::vector<size_t> odometer(vars.size(), 0);
    for (;;) {
        Subst subst;
        for (size_t i = 0; i < vars.size(); ++i) { subst[vars[i]] = universe[odometer[i]]; }
        fn(subst);
        size_t pos = vars.size();
        while (pos > 0) {
            --pos;
            if (++odometer[pos] < universe.size()) { break; }
            odometer[pos] = 0;
            if (pos == 0) { return; }
        }
    }
}

std::vector<std::string> literal_variables(ConditionalLiteral const &e) {
    std::vector<std::string> out;
    auto add_term = [&out](TermPtr const &t) {
        for (auto const &v : term_variables(t)) {
            if (std::find(out.begin(), out.end(), v) == out.end()) { out.push_back(v); }
        }
    };
    auto add_head = [&](CondHead const &h) {
        if (auto const *lit = std::get_if<BasicLiteral>(&h)) {
            for (auto const &arg : lit->atom.args) { add_term(arg); }
        }
        else if (auto const *cmp = std::get_if<Comparison>(&h)) {
            add_term(cmp->lhs);
            add_term(cmp->rhs);
        }
    };
    add_head(e.head);
    for (auto const &c : e.conditions) {
        if (auto const *lit = std::get_if<BasicLiteral>(&c)) {
            for (auto const &arg : lit->atom.args) { add_term(arg); }
        }
        else if (auto const *cmp = std::get_if<Comparison>(&c)) {
            add_term(cmp->lhs);
            add_term(cmp->rhs);
        }
    }
    return out;
}

InfFormulaPtr wrap_sign(Sign sign, InfFormulaPtr f) {
    switch (sign) {
        case Sign::none:            return f;
        case Sign::negation:        return inf_not(std::move(f));
        case Sign::double_negation: return inf_not(inf_not(std::move(f)));
    }
    return f;
}

//! items 2-4: disjunction of (possibly negated) atoms over the tuple values
InfFormulaPtr tau_literal(BasicLiteral const &lit, Limits const &lim) {
    auto values = eval_tuple_values(lit.atom.args, lim);
    std::vector<InfFormulaPtr> parts;
    parts.reserve(values.tuples.size());
    for (auto const &tuple : values.tuples) {
        parts.push_back(wrap_sign(lit.sign, inf_atom(GroundAtom{lit.atom.predicate, tuple})));
    }
    return inf_disj(std::move(parts));
}

//! item 5: eager evaluation of a closed comparison
InfFormulaPtr tau_comparison(Comparison const &cmp, Limits const &lim) {
    auto lhs = eval_values(cmp.lhs, lim);
    auto rhs = eval_values(cmp.rhs, lim);
    for (auto const &a : lhs.values) {
        for (auto const &b : rhs.values) {
            if (rel_holds(cmp.rel, a, b)) { return inf_top(); }
        }
    }
    return inf_bot();
}

InfFormulaPtr tau_head(CondHead const &head, Limits const &lim) {
    if (std::holds_alternative<Falsum>(head)) { return inf_bot(); }
    if (auto const *cmp = std::get_if<Comparison>(&head)) { return tau_comparison(*cmp, lim); }
    return tau_literal(std::get<BasicLiteral>(head), lim);
}

InfFormulaPtr tau_condition(Condition const &cond, Limits const &lim) {
    if (auto const *cmp = std::get_if<Comparison>(&cond)) { return tau_comparison(*cmp, lim); }
    return tau_literal(std::get<BasicLiteral>(cond), lim);
}

//! item 6: conjunction over a condition list
InfFormulaPtr tau_conditions(std::vector<Condition> const &conds, Limits const &lim) {
    std::vector<InfFormulaPtr> parts;
    parts.reserve(conds.size());
    for (auto const &c : conds) { parts.push_back(tau_condition(c, lim)); }
    return inf_conj(std::move(parts));
}

//! translation of the closed element once its variables are substituted away
InfFormulaPtr tau_closed_element(ConditionalLiteral const &e, Limits const &lim) {
    if (e.conditions.empty()) { return tau_head(e.head, lim); }
    return inf_implies(tau_conditions(e.conditions, lim), tau_head(e.head, lim));
}

//! body conjunction of a closed rule under an extra substitution
InfFormulaPtr tau_body(Rule const &r, Subst const &env,
                       std::vector<PrecomputedTerm> const &universe, Limits const &lim) {
    std::vector<InfFormulaPtr> parts;
    parts.reserve(r.body.size());
    for (auto const &elem : r.body) {
        parts.push_back(tau_closed(substitute_literal(elem, env), universe, lim));
    }
    return inf_conj(std::move(parts));
}

//! head formula of one closed rule instance (basic and choice rules)
InfFormulaPtr tau_head_atoms(Atom const &head, Rule::Kind kind, Subst const &env,
                             Limits const &lim) {
    std::vector<TermPtr> args;
    args.reserve(head.args.size());
    for (auto const &t : head.args) { args.push_back(substitute_in_term(t, env)); }
    auto values = eval_tuple_values(args, lim);
    std::vector<InfFormulaPtr> parts;
    parts.reserve(values.tuples.size());
    for (auto const &tuple : values.tuples) {
        auto atom = inf_atom(GroundAtom{head.predicate, tuple});
        if (kind == Rule::Kind::choice) {
            parts.push_back(inf_disj({atom, inf_not(atom)}));
        }
        else {
            parts.push_back(atom);
        }
    }
    return inf_conj(std::move(parts));
}

InfFormulaPtr tau_instance(Rule const &r, Subst const &env,
                           std::vector<PrecomputedTerm> const &universe, Limits const &lim) {
    auto body = tau_body(r, env, universe, lim);
    if (r.kind == Rule::Kind::constraint) { return inf_not(std::move(body)); }
    return inf_implies(std::move(body), tau_head_atoms(*r.head, r.kind, env, lim));
}

} // namespace

std::vector<RuleInstance> instances(Rule const &r, std::vector<PrecomputedTerm> const &universe,
                                    Limits const &lim) {
    auto globals = global_variables(r);
    std::vector<RuleInstance> out;
    for_each_substitution(globals, universe, lim, [&](Subst const &subst) {
        RuleInstance inst;
        inst.rule = substitute_globals(r, subst);
        inst.substitution.reserve(globals.size());
        for (auto const &g : globals) { inst.substitution.emplace_back(g, subst.at(g)); }
        out.push_back(std::move(inst));
    });
    return out;
}

InfFormulaPtr tau_closed(ConditionalLiteral const &e, std::vector<PrecomputedTerm> const &universe,
                         Limits const &lim) {
    auto vars = literal_variables(e);
    std::vector<InfFormulaPtr> parts;
    for_each_substitution(vars, universe, lim, [&](Subst const &subst) {
        parts.push_back(tau_closed_element(substitute_literal(e, subst), lim));
    });
    return inf_conj(std::move(parts));
}

InfFormulaPtr tau_closed_rule(Rule const &rho, std::vector<PrecomputedTerm> const &universe,
                              Limits const &lim) {
    return tau_instance(rho, {}, universe, lim);
}

InfFormulaPtr tau_rule(Rule const &r, std::vector<PrecomputedTerm> const &universe,
                       Limits const &lim) {
    auto globals = global_variables(r);
    std::vector<InfFormulaPtr> parts;
    for_each_substitution(globals, universe, lim, [&](Subst const &subst) {
        parts.push_back(tau_instance(r, subst, universe, lim));
    });
    return inf_conj(std::move(parts));
}

std::vector<InfFormulaPtr> tau_program(Program const &p,
                                       std::vector<PrecomputedTerm> const &universe,
                                       Limits const &lim) {
    std::vector<InfFormulaPtr> out;
    out.reserve(p.rules.size());
    for (auto const &r : p.rules) { out.push_back(tau_rule(r, universe, lim)); }
    std::sort(out.begin(), out.end(),
              [](InfFormulaPtr const &a, InfFormulaPtr const &b) { return a->key < b->key; });
    out.erase(std::unique(out.begin(), out.end(),
                          [](InfFormulaPtr const &a, InfFormulaPtr const &b) {
                              return a->key == b->key;
                          }),
              out.end());
    return out;
}

} // namespace clsem
