// clsem : a semantics workbench for logic programs with conditional literals
// Copyright (c) 2026 clsem authors. MIT license (see LICENSE).

#include <clsem/tau_star.hh>

#include <algorithm>

namespace clsem {

namespace {

// Yields Z, Z1, Z2, ... (or V1, V2, ... when started at 1 with prefix "V"),
// skipping names already taken by the rule.
class NameStream {
  public:
    NameStream(std::string prefix, size_t start, std::set<std::string> const &avoid)
        : prefix_(std::move(prefix)), next_(start), avoid_(avoid) {}

    std::string take() {
        for (;;) {
            std::string name = next_ == 0 ? prefix_ : prefix_ + std::to_string(next_);
            ++next_;
            if (avoid_.find(name) == avoid_.end()) {
                return name;
            }
        }
    }

  private:
    std::string prefix_;
    size_t next_;
    std::set<std::string> const &avoid_;
};

FOFormulaPtr conjoin(std::vector<FOFormulaPtr> parts) {
    if (parts.size() == 1) {
        return parts.front();
    }
    return f_and(std::move(parts));
}

FOFormulaPtr apply_sign(Sign sign, FOFormulaPtr f) {
    switch (sign) {
        case Sign::none:            return f;
        case Sign::negation:        return f_not(std::move(f));
        case Sign::double_negation: return f_not(f_not(std::move(f)));
    }
    return f;
}

FOFormulaPtr translate_literal(BasicLiteral const &lit, GlobalContext const &ctx) {
    auto const &atom = lit.atom;
    if (atom.args.empty()) {
        return apply_sign(lit.sign, f_atom(atom.predicate));
    }
    NameStream names("Z", 0, ctx.avoid);
    std::vector<SortedVar> zs;
    zs.reserve(atom.args.size());
    for (size_t i = 0; i < atom.args.size(); ++i) {
        zs.push_back(SortedVar{names.take(), Sort::program});
    }
    std::vector<FOFormulaPtr> parts;
    parts.reserve(atom.args.size() + 1);
    std::vector<FOTermPtr> args;
    args.reserve(atom.args.size());
    for (size_t i = 0; i < atom.args.size(); ++i) {
        parts.push_back(val_formula(atom.args[i], zs[i].name, ctx.avoid));
        args.push_back(f_var(zs[i]));
    }
    parts.push_back(apply_sign(lit.sign, f_atom(atom.predicate, std::move(args))));
    return f_quant(Quant::exists, std::move(zs), f_and(std::move(parts)));
}

FOFormulaPtr translate_comparison(Comparison const &cmp, GlobalContext const &ctx) {
    NameStream names("Z", 1, ctx.avoid);
    SortedVar z1{names.take(), Sort::program};
    SortedVar z2{names.take(), Sort::program};
    std::vector<FOFormulaPtr> parts;
    parts.push_back(val_formula(cmp.lhs, z1.name, ctx.avoid));
    parts.push_back(val_formula(cmp.rhs, z2.name, ctx.avoid));
    parts.push_back(f_cmp(f_var(z1), cmp.rel, f_var(z2)));
    return f_quant(Quant::exists, {z1, z2}, f_and(std::move(parts)));
}

FOFormulaPtr translate_head(CondHead const &head, GlobalContext const &ctx) {
    if (std::holds_alternative<Falsum>(head)) {
        return f_false();
    }
    if (auto const *cmp = std::get_if<Comparison>(&head)) {
        return translate_comparison(*cmp, ctx);
    }
    return translate_literal(std::get<BasicLiteral>(head), ctx);
}

FOFormulaPtr translate_condition(Condition const &cond, GlobalContext const &ctx) {
    if (auto const *cmp = std::get_if<Comparison>(&cond)) {
        return translate_comparison(*cmp, ctx);
    }
    return translate_literal(std::get<BasicLiteral>(cond), ctx);
}

void collect_head_variables(CondHead const &head, std::vector<std::string> &out) {
    if (auto const *lit = std::get_if<BasicLiteral>(&head)) {
        for (auto const &arg : lit->atom.args) {
            for (auto const &v : term_variables(arg)) {
                if (std::find(out.begin(), out.end(), v) == out.end()) {
                    out.push_back(v);
                }
            }
        }
    }
    else if (auto const *cmp = std::get_if<Comparison>(&head)) {
        for (auto const &t : {cmp->lhs, cmp->rhs}) {
            for (auto const &v : term_variables(t)) {
                if (std::find(out.begin(), out.end(), v) == out.end()) {
                    out.push_back(v);
                }
            }
        }
    }
}

void collect_condition_variables(Condition const &cond, std::vector<std::string> &out) {
    auto add_term = [&out](TermPtr const &t) {
        for (auto const &v : term_variables(t)) {
            if (std::find(out.begin(), out.end(), v) == out.end()) {
                out.push_back(v);
            }
        }
    };
    if (auto const *lit = std::get_if<BasicLiteral>(&cond)) {
        for (auto const &arg : lit->atom.args) {
            add_term(arg);
        }
    }
    else if (auto const *cmp = std::get_if<Comparison>(&cond)) {
        add_term(cmp->lhs);
        add_term(cmp->rhs);
    }
}

} // namespace

GlobalContext make_context(Rule const &r) {
    GlobalContext ctx;
    ctx.z_vars = global_variables(r);
    for (auto const &v : rule_variables(r)) {
        ctx.avoid.insert(v);
    }
    return ctx;
}

FOFormulaPtr tau_b(ConditionalLiteral const &e, GlobalContext const &ctx, TauStarOptions const &opt) {
    auto head = translate_head(e.head, ctx);
    if (e.conditions.empty()) {
        return head;
    }
    std::vector<FOFormulaPtr> parts;
    parts.reserve(e.conditions.size());
    for (auto const &cond : e.conditions) {
        parts.push_back(translate_condition(cond, ctx));
    }
    auto impl = f_implies(conjoin(std::move(parts)), std::move(head));
    if (!opt.conditional_universal) {
        return impl;
    }
    std::vector<std::string> vars;
    collect_head_variables(e.head, vars);
    for (auto const &cond : e.conditions) {
        collect_condition_variables(cond, vars);
    }
    std::vector<SortedVar> local;
    for (auto const &v : vars) {
        if (std::find(ctx.z_vars.begin(), ctx.z_vars.end(), v) == ctx.z_vars.end()) {
            local.push_back(SortedVar{v, Sort::program});
        }
    }
    return f_quant(Quant::forall, std::move(local), std::move(impl));
}

FOFormulaPtr tau_star_rule(Rule const &r, TauStarOptions const &opt) {
    GlobalContext ctx = make_context(r);

    std::vector<SortedVar> head_vars;
    std::vector<FOFormulaPtr> parts;
    FOFormulaPtr consequent;
    if (r.kind == Rule::Kind::constraint) {
        consequent = f_false();
    }
    else {
        Atom const &head = *r.head;
        NameStream names("V", 1, ctx.avoid);
        std::vector<FOTermPtr> args;
        for (auto const &t : head.args) {
            SortedVar v{names.take(), Sort::program};
            parts.push_back(val_formula(t, v.name, ctx.avoid));
            args.push_back(f_var(v));
            head_vars.push_back(std::move(v));
        }
        consequent = f_atom(head.predicate, std::move(args));
    }

    for (auto const &elem : r.body) {
        parts.push_back(tau_b(elem, ctx, opt));
    }
    if (r.kind == Rule::Kind::choice && opt.choice_double_negation) {
        parts.push_back(f_not(f_not(consequent)));
    }

    FOFormulaPtr matrix = parts.empty()
        ? consequent
        : f_implies(conjoin(std::move(parts)), consequent);

    std::vector<SortedVar> closure = head_vars;
    auto bound = [&closure](std::string const &name) {
        return std::any_of(closure.begin(), closure.end(),
                           [&name](SortedVar const &v) { return v.name == name; });
    };
    for (auto const &g : ctx.z_vars) {
        if (!bound(g)) {
            closure.push_back(SortedVar{g, Sort::program});
        }
    }
    for (auto const &v : free_variables(matrix)) {
        if (!bound(v.name)) {
            closure.push_back(v);
        }
    }
    return f_quant(Quant::forall, std::move(closure), std::move(matrix));
}

FOTheory tau_star_program(Program const &p, TauStarOptions const &opt) {
    FOTheory theory;
    theory.sentences.reserve(p.rules.size());
    for (auto const &r : p.rules) {
        theory.sentences.push_back(tau_star_rule(r, opt));
    }
    return theory;
}

} // namespace clsem
