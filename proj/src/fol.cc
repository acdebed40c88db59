// clsem : a semantics workbench for logic programs with conditional literals
// Copyright (c) 2026 clsem authors. MIT license (see LICENSE).

#include <clsem/fol.hh>

#include <json.hpp>

#include <algorithm>

namespace clsem {

namespace {

using json = nlohmann::json;

} // namespace

// ---------------------------------------------------------------------------
// terms

FOTermPtr f_pre(PrecomputedTerm t) { return std::make_shared<FOTerm const>(FOTerm{std::move(t)}); }
FOTermPtr f_var(SortedVar v) { return std::make_shared<FOTerm const>(FOTerm{std::move(v)}); }
FOTermPtr f_arith(ArithOp op, std::vector<FOTermPtr> args) {
    return std::make_shared<FOTerm const>(FOTerm{ArithApply{op, std::move(args)}});
}

Sort sort_of(FOTermPtr const &t) {
    return std::visit(
        [](auto const &v) -> Sort {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, PrecomputedTerm>) {
                return is_numeral(v) ? Sort::integer : Sort::program;
            }
            else if constexpr (std::is_same_v<T, SortedVar>) { return v.sort; }
            else { return Sort::integer; }
        },
        t->data);
}

bool foterm_equal(FOTermPtr const &a, FOTermPtr const &b) {
    if (a.get() == b.get()) { return true; }
    if (a->data.index() != b->data.index()) { return false; }
    return std::visit(
        [&](auto const &x) -> bool {
            using T = std::decay_t<decltype(x)>;
            auto const &y = std::get<T>(b->data);
            if constexpr (std::is_same_v<T, PrecomputedTerm>) { return x == y; }
            else if constexpr (std::is_same_v<T, SortedVar>) { return x == y; }
            else {
                if (x.op != y.op || x.args.size() != y.args.size()) { return false; }
                for (size_t i = 0; i < x.args.size(); ++i) {
                    if (!foterm_equal(x.args[i], y.args[i])) { return false; }
                }
                return true;
            }
        },
        a->data);
}

namespace {

char const *arith_text(ArithOp op) {
    switch (op) {
        case ArithOp::add: return "+";
        case ArithOp::sub: return "-";
        case ArithOp::mul: return "*";
        case ArithOp::abs: return "|.|";
    }
    return "?";
}

} // namespace

std::string render(FOTermPtr const &t) {
    return std::visit(
        [](auto const &v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, PrecomputedTerm>) { return render(v); }
            else if constexpr (std::is_same_v<T, SortedVar>) { return v.name; }
            else {
                if (v.op == ArithOp::abs) { return "|" + render(v.args[0]) + "|"; }
                return "(" + render(v.args[0]) + " " + arith_text(v.op) + " " + render(v.args[1]) + ")";
            }
        },
        t->data);
}

// ---------------------------------------------------------------------------
// formula construction

FOFormulaPtr f_atom(std::string predicate, std::vector<FOTermPtr> args) {
    return std::make_shared<FOFormula const>(FOFormula{FOAtom{std::move(predicate), std::move(args)}});
}
FOFormulaPtr f_cmp(FOTermPtr lhs, Rel rel, FOTermPtr rhs) {
    return std::make_shared<FOFormula const>(FOFormula{FOComparison{std::move(lhs), rel, std::move(rhs)}});
}
FOFormulaPtr f_false() { return std::make_shared<FOFormula const>(FOFormula{FOFalsum{}}); }
FOFormulaPtr f_and(std::vector<FOFormulaPtr> parts) {
    return std::make_shared<FOFormula const>(FOFormula{FOAnd{std::move(parts)}});
}
FOFormulaPtr f_or(std::vector<FOFormulaPtr> parts) {
    return std::make_shared<FOFormula const>(FOFormula{FOOr{std::move(parts)}});
}
FOFormulaPtr f_implies(FOFormulaPtr lhs, FOFormulaPtr rhs) {
    return std::make_shared<FOFormula const>(FOFormula{FOImplies{std::move(lhs), std::move(rhs)}});
}
FOFormulaPtr f_not(FOFormulaPtr f) { return f_implies(std::move(f), f_false()); }
FOFormulaPtr f_quant(Quant kind, std::vector<SortedVar> vars, FOFormulaPtr body) {
    if (vars.empty()) { return body; }
    return std::make_shared<FOFormula const>(FOFormula{FOQuant{kind, std::move(vars), std::move(body)}});
}

bool formula_equal(FOFormulaPtr const &a, FOFormulaPtr const &b) {
    if (a.get() == b.get()) { return true; }
    if (a->data.index() != b->data.index()) { return false; }
    return std::visit(
        [&](auto const &x) -> bool {
            using T = std::decay_t<decltype(x)>;
            auto const &y = std::get<T>(b->data);
            if constexpr (std::is_same_v<T, FOAtom>) {
                if (x.predicate != y.predicate || x.args.size() != y.args.size()) { return false; }
                for (size_t i = 0; i < x.args.size(); ++i) {
                    if (!foterm_equal(x.args[i], y.args[i])) { return false; }
                }
                return true;
            }
            else if constexpr (std::is_same_v<T, FOComparison>) {
                return x.rel == y.rel && foterm_equal(x.lhs, y.lhs) && foterm_equal(x.rhs, y.rhs);
            }
            else if constexpr (std::is_same_v<T, FOFalsum>) { return true; }
            else if constexpr (std::is_same_v<T, FOAnd> || std::is_same_v<T, FOOr>) {
                if (x.parts.size() != y.parts.size()) { return false; }
                for (size_t i = 0; i < x.parts.size(); ++i) {
                    if (!formula_equal(x.parts[i], y.parts[i])) { return false; }
                }
                return true;
            }
            else if constexpr (std::is_same_v<T, FOImplies>) {
                return formula_equal(x.lhs, y.lhs) && formula_equal(x.rhs, y.rhs);
            }
            else {
                return x.kind == y.kind && x.vars == y.vars && formula_equal(x.body, y.body);
            }
        },
        a->data);
}

// ---------------------------------------------------------------------------
// alpha equivalence

namespace {

struct AlphaMap {
    std::map<std::string, std::string> ab;
    std::map<std::string, std::string> ba;
};

bool alpha_term(FOTermPtr const &a, FOTermPtr const &b, AlphaMap const &m) {
    if (a->data.index() != b->data.index()) { return false; }
    return std::visit(
        [&](auto const &x) -> bool {
            using T = std::decay_t<decltype(x)>;
            auto const &y = std::get<T>(b->data);
            if constexpr (std::is_same_v<T, PrecomputedTerm>) { return x == y; }
            else if constexpr (std::is_same_v<T, SortedVar>) {
                if (x.sort != y.sort) { return false; }
                auto ia = m.ab.find(x.name);
                auto ib = m.ba.find(y.name);
                if (ia == m.ab.end() && ib == m.ba.end()) { return x.name == y.name; } // both free
                return ia != m.ab.end() && ib != m.ba.end() && ia->second == y.name && ib->second == x.name;
            }
            else {
                if (x.op != y.op || x.args.size() != y.args.size()) { return false; }
                for (size_t i = 0; i < x.args.size(); ++i) {
                    if (!alpha_term(x.args[i], y.args[i], m)) { return false; }
                }
                return true;
            }
        },
        a->data);
}

bool alpha_formula(FOFormulaPtr const &a, FOFormulaPtr const &b, AlphaMap &m) {
    if (a->data.index() != b->data.index()) { return false; }
    return std::visit(
        [&](auto const &x) -> bool {
            using T = std::decay_t<decltype(x)>;
            auto const &y = std::get<T>(b->data);
            if constexpr (std::is_same_v<T, FOAtom>) {
                if (x.predicate != y.predicate || x.args.size() != y.args.size()) { return false; }
                for (size_t i = 0; i < x.args.size(); ++i) {
                    if (!alpha_term(x.args[i], y.args[i], m)) { return false; }
                }
                return true;
            }
            else if constexpr (std::is_same_v<T, FOComparison>) {
                return x.rel == y.rel && alpha_term(x.lhs, y.lhs, m) && alpha_term(x.rhs, y.rhs, m);
            }
            else if constexpr (std::is_same_v<T, FOFalsum>) { return true; }
            else if constexpr (std::is_same_v<T, FOAnd> || std::is_same_v<T, FOOr>) {
                if (x.parts.size() != y.parts.size()) { return false; }
                for (size_t i = 0; i < x.parts.size(); ++i) {
                    if (!alpha_formula(x.parts[i], y.parts[i], m)) { return false; }
                }
                return true;
            }
            else if constexpr (std::is_same_v<T, FOImplies>) {
                return alpha_formula(x.lhs, y.lhs, m) && alpha_formula(x.rhs, y.rhs, m);
            }
            else {
                if (x.kind != y.kind || x.vars.size() != y.vars.size()) { return false; }
                for (size_t i = 0; i < x.vars.size(); ++i) {
                    if (x.vars[i].sort != y.vars[i].sort) { return false; }
                }
                // bind pairwise, recurse, restore shadowed entries
                std::vector<std::pair<std::string, std::optional<std::string>>> savea;
                std::vector<std::pair<std::string, std::optional<std::string>>> saveb;
                for (size_t i = 0; i < x.vars.size(); ++i) {
                    auto const &na = x.vars[i].name;
                    auto const &nb = y.vars[i].name;
                    auto ia = m.ab.find(na);
                    savea.emplace_back(na, ia == m.ab.end() ? std::nullopt : std::optional{ia->second});
                    auto ib = m.ba.find(nb);
                    saveb.emplace_back(nb, ib == m.ba.end() ? std::nullopt : std::optional{ib->second});
                    m.ab[na] = nb;
                    m.ba[nb] = na;
                }
                bool ok = alpha_formula(x.body, y.body, m);
                for (auto it = savea.rbegin(); it != savea.rend(); ++it) {
                    if (it->second) { m.ab[it->first] = *it->second; }
                    else { m.ab.erase(it->first); }
                }
                for (auto it = saveb.rbegin(); it != saveb.rend(); ++it) {
                    if (it->second) { m.ba[it->first] = *it->second; }
                    else { m.ba.erase(it->first); }
                }
                return ok;
            }
        },
        a->data);
}

} // namespace

bool alpha_equal(FOFormulaPtr const &a, FOFormulaPtr const &b) {
    AlphaMap m;
    return alpha_formula(a, b, m);
}

// ---------------------------------------------------------------------------
// free variables and substitution

namespace {

void term_free_vars(FOTermPtr const &t, std::set<std::string> const &bound, std::vector<SortedVar> &order,
                    std::set<std::string> &seen) {
    std::visit(
        [&](auto const &v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, SortedVar>) {
                if (bound.find(v.name) == bound.end() && seen.insert(v.name).second) { order.push_back(v); }
            }
            else if constexpr (std::is_same_v<T, ArithApply>) {
                for (auto const &a : v.args) { term_free_vars(a, bound, order, seen); }
            }
        },
        t->data);
}

void formula_free_vars(FOFormulaPtr const &f, std::set<std::string> &bound, std::vector<SortedVar> &order,
                       std::set<std::string> &seen) {
    std::visit(
        [&](auto const &v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, FOAtom>) {
                for (auto const &a : v.args) { term_free_vars(a, bound, order, seen); }
            }
            else if constexpr (std::is_same_v<T, FOComparison>) {
                term_free_vars(v.lhs, bound, order, seen);
                term_free_vars(v.rhs, bound, order, seen);
            }
            else if constexpr (std::is_same_v<T, FOAnd> || std::is_same_v<T, FOOr>) {
                for (auto const &p : v.parts) { formula_free_vars(p, bound, order, seen); }
            }
            else if constexpr (std::is_same_v<T, FOImplies>) {
                formula_free_vars(v.lhs, bound, order, seen);
                formula_free_vars(v.rhs, bound, order, seen);
            }
            else if constexpr (std::is_same_v<T, FOQuant>) {
                std::vector<std::string> added;
                for (auto const &var : v.vars) {
                    if (bound.insert(var.name).second) { added.push_back(var.name); }
                }
                formula_free_vars(v.body, bound, order, seen);
                for (auto const &name : added) { bound.erase(name); }
            }
        },
        f->data);
}

FOTermPtr subst_term(FOTermPtr const &t, std::string const &var, PrecomputedTerm const &value) {
    return std::visit(
        [&](auto const &v) -> FOTermPtr {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, SortedVar>) { return v.name == var ? f_pre(value) : t; }
            else if constexpr (std::is_same_v<T, ArithApply>) {
                std::vector<FOTermPtr> args;
                args.reserve(v.args.size());
                for (auto const &a : v.args) { args.push_back(subst_term(a, var, value)); }
                return f_arith(v.op, std::move(args));
            }
            else { return t; }
        },
        t->data);
}

FOFormulaPtr subst_formula(FOFormulaPtr const &f, std::string const &var, PrecomputedTerm const &value) {
    return std::visit(
        [&](auto const &v) -> FOFormulaPtr {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, FOAtom>) {
                std::vector<FOTermPtr> args;
                args.reserve(v.args.size());
                for (auto const &a : v.args) { args.push_back(subst_term(a, var, value)); }
                return f_atom(v.predicate, std::move(args));
            }
            else if constexpr (std::is_same_v<T, FOComparison>) {
                return f_cmp(subst_term(v.lhs, var, value), v.rel, subst_term(v.rhs, var, value));
            }
            else if constexpr (std::is_same_v<T, FOFalsum>) { return f; }
            else if constexpr (std::is_same_v<T, FOAnd> || std::is_same_v<T, FOOr>) {
                std::vector<FOFormulaPtr> parts;
                parts.reserve(v.parts.size());
                for (auto const &p : v.parts) { parts.push_back(subst_formula(p, var, value)); }
                if constexpr (std::is_same_v<T, FOAnd>) { return f_and(std::move(parts)); }
                else { return f_or(std::move(parts)); }
            }
            else if constexpr (std::is_same_v<T, FOImplies>) {
                return f_implies(subst_formula(v.lhs, var, value), subst_formula(v.rhs, var, value));
            }
            else {
                for (auto const &q : v.vars) {
                    if (q.name == var) { return f; } // shadowed
                }
                return f_quant(v.kind, v.vars, subst_formula(v.body, var, value));
            }
        },
        f->data);
}

} // namespace

std::vector<SortedVar> free_variables(FOFormulaPtr const &f) {
    std::set<std::string> bound;
    std::vector<SortedVar> order;
    std::set<std::string> seen;
    formula_free_vars(f, bound, order, seen);
    return order;
}

FOFormulaPtr substitute(FOFormulaPtr const &f, std::string const &var, PrecomputedTerm const &value) {
    return subst_formula(f, var, value);
}

// ---------------------------------------------------------------------------
// rendering

namespace {

struct FOSymbols {
    char const *top;
    char const *bot;
    char const *conj;
    char const *disj;
    char const *impl;
    char const *neg;
    char const *forall;
    char const *exists;
};

constexpr FOSymbols ascii_symbols{"#true", "#false", " and ", " or ", " -> ", "not ", "forall ", "exists "};
constexpr FOSymbols math_symbols{"⊤", "⊥", " ∧ ", " ∨ ", " → ", "¬", "∀", "∃"};

std::string render_with(FOFormulaPtr const &f, FOSymbols const &sym) {
    return std::visit(
        [&](auto const &v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, FOAtom>) {
                if (v.args.empty()) { return v.predicate; }
                std::string out = v.predicate + "(";
                for (size_t i = 0; i < v.args.size(); ++i) {
                    if (i > 0) { out += ", "; }
                    out += render(v.args[i]);
                }
                return out + ")";
            }
            else if constexpr (std::is_same_v<T, FOComparison>) {
                return render(v.lhs) + " " + render(v.rel) + " " + render(v.rhs);
            }
            else if constexpr (std::is_same_v<T, FOFalsum>) { return sym.bot; }
            else if constexpr (std::is_same_v<T, FOAnd> || std::is_same_v<T, FOOr>) {
                if (v.parts.empty()) { return std::is_same_v<T, FOAnd> ? sym.top : sym.bot; }
                char const *join = std::is_same_v<T, FOAnd> ? sym.conj : sym.disj;
                std::string out = "(";
                for (size_t i = 0; i < v.parts.size(); ++i) {
                    if (i > 0) { out += join; }
                    out += render_with(v.parts[i], sym);
                }
                return out + ")";
            }
            else if constexpr (std::is_same_v<T, FOImplies>) {
                if (std::holds_alternative<FOFalsum>(v.rhs->data)) {
                    return std::string(sym.neg) + render_with(v.lhs, sym);
                }
                return "(" + render_with(v.lhs, sym) + sym.impl + render_with(v.rhs, sym) + ")";
            }
            else {
                std::string out = v.kind == Quant::forall ? sym.forall : sym.exists;
                for (size_t i = 0; i < v.vars.size(); ++i) {
                    if (i > 0) { out += " "; }
                    out += v.vars[i].name;
                }
                return out + " (" + render_with(v.body, sym) + ")";
            }
        },
        f->data);
}

} // namespace

std::string render(FOFormulaPtr const &f) { return render_with(f, ascii_symbols); }

std::string render(FOTheory const &t) {
    std::string out;
    for (auto const &s : t.sentences) {
        out += render(s);
        out += "\n";
    }
    return out;
}

namespace {

json foterm_json(FOTermPtr const &t) {
    return std::visit(
        [](auto const &v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, PrecomputedTerm>) {
                return {{"type", "precomputed"}, {"value", render(v)}};
            }
            else if constexpr (std::is_same_v<T, SortedVar>) {
                return {{"type", "variable"}, {"name", v.name}, {"sort", v.sort == Sort::program ? "program" : "integer"}};
            }
            else {
                json args = json::array();
                for (auto const &a : v.args) { args.push_back(foterm_json(a)); }
                return {{"type", "arith"}, {"op", arith_text(v.op)}, {"args", args}};
            }
        },
        t->data);
}

json formula_json(FOFormulaPtr const &f) {
    return std::visit(
        [](auto const &v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, FOAtom>) {
                json args = json::array();
                for (auto const &a : v.args) { args.push_back(foterm_json(a)); }
                return {{"type", "atom"}, {"predicate", v.predicate}, {"args", args}};
            }
            else if constexpr (std::is_same_v<T, FOComparison>) {
                return {{"type", "comparison"}, {"rel", render(v.rel)}, {"lhs", foterm_json(v.lhs)}, {"rhs", foterm_json(v.rhs)}};
            }
            else if constexpr (std::is_same_v<T, FOFalsum>) { return {{"type", "falsum"}}; }
            else if constexpr (std::is_same_v<T, FOAnd> || std::is_same_v<T, FOOr>) {
                json parts = json::array();
                for (auto const &p : v.parts) { parts.push_back(formula_json(p)); }
                return {{"type", std::is_same_v<T, FOAnd> ? "and" : "or"}, {"parts", parts}};
            }
            else if constexpr (std::is_same_v<T, FOImplies>) {
                return {{"type", "implies"}, {"lhs", formula_json(v.lhs)}, {"rhs", formula_json(v.rhs)}};
            }
            else {
                json vars = json::array();
                for (auto const &q : v.vars) {
                    vars.push_back({{"name", q.name}, {"sort", q.sort == Sort::program ? "program" : "integer"}});
                }
                return {{"type", v.kind == Quant::forall ? "forall" : "exists"}, {"vars", vars}, {"body", formula_json(v.body)}};
            }
        },
        f->data);
}

} // namespace

std::string to_json(FOTheory const &t) {
    json sentences = json::array();
    for (auto const &s : t.sentences) { sentences.push_back(formula_json(s)); }
    json doc{{"schema", "clsem-theory-1"}, {"sentences", sentences}};
    return doc.dump(2);
}

// ---------------------------------------------------------------------------
// signatures and interpretations

ProgramSignature build_signature(Program const &p) { return ProgramSignature{program_predicates(p)}; }

bool StandardInterpretation::in_universe(PrecomputedTerm const &t) const {
    return std::binary_search(universe.begin(), universe.end(), t);
}

StandardInterpretation make_interpretation(std::set<std::string> const &constants, Limits const &limits,
                                           AtomSet true_atoms) {
    StandardInterpretation interp;
    interp.int_bound = limits.int_bound;
    interp.true_atoms = std::move(true_atoms);
    std::set<PrecomputedTerm> u;
    u.insert(pre_inf());
    u.insert(pre_sup());
    for (std::int64_t n = -limits.int_bound; n <= limits.int_bound; ++n) {
        u.insert(pre_num(n));
        interp.integers.push_back(n);
    }
    for (auto const &c : constants) { u.insert(pre_sym(c)); }
    interp.universe.assign(u.begin(), u.end());
    return interp;
}

StandardInterpretation make_standard_interpretation(Program const &p, Limits const &limits, AtomSet true_atoms) {
    return make_interpretation(program_constants(p), limits, std::move(true_atoms));
}

// ---------------------------------------------------------------------------
// evaluation

PrecomputedTerm eval_foterm(FOTermPtr const &t, std::map<std::string, PrecomputedTerm> const &env, Diagnostics *diag,
                            std::int64_t int_bound) {
    return std::visit(
        [&](auto const &v) -> PrecomputedTerm {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, PrecomputedTerm>) { return v; }
            else if constexpr (std::is_same_v<T, SortedVar>) {
                auto it = env.find(v.name);
                if (it == env.end()) { throw std::invalid_argument("unbound variable " + v.name); }
                return it->second;
            }
            else {
                std::vector<std::int64_t> args;
                args.reserve(v.args.size());
                for (auto const &a : v.args) {
                    auto value = eval_foterm(a, env, diag, int_bound);
                    if (!is_numeral(value)) {
                        throw std::invalid_argument("arithmetic over non-numeral term " + render(value));
                    }
                    args.push_back(numeral_value(value));
                }
                std::int64_t r = 0;
                switch (v.op) {
                    case ArithOp::add: r = checked_add(args[0], args[1]); break;
                    case ArithOp::sub: r = checked_sub(args[0], args[1]); break;
                    case ArithOp::mul: r = checked_mul(args[0], args[1]); break;
                    case ArithOp::abs: r = checked_abs(args[0]); break;
                }
                if (diag != nullptr && int_bound > 0 && (r < -int_bound || r > int_bound)) {
                    diag->note("arithmetic result " + std::to_string(r) + " outside universe bound " +
                               std::to_string(int_bound));
                }
                return pre_num(r);
            }
        },
        t->data);
}

namespace {

class FOEvaluator {
public:
    FOEvaluator(StandardInterpretation const &interp, Diagnostics *diag) : interp_{interp}, diag_{diag} {}

    bool eval(FOFormulaPtr const &f) {
        return std::visit(
            [&](auto const &v) -> bool {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, FOAtom>) {
                    GroundAtom atom{v.predicate, {}};
                    atom.args.reserve(v.args.size());
                    for (auto const &a : v.args) {
                        atom.args.push_back(eval_foterm(a, env_, diag_, interp_.int_bound));
                    }
                    return interp_.true_atoms.find(atom) != interp_.true_atoms.end();
                }
                else if constexpr (std::is_same_v<T, FOComparison>) {
                    auto lhs = eval_foterm(v.lhs, env_, diag_, interp_.int_bound);
                    auto rhs = eval_foterm(v.rhs, env_, diag_, interp_.int_bound);
                    return rel_holds(v.rel, lhs, rhs);
                }
                else if constexpr (std::is_same_v<T, FOFalsum>) { return false; }
                else if constexpr (std::is_same_v<T, FOAnd>) {
                    for (auto const &p : v.parts) {
                        if (!eval(p)) { return false; }
                    }
                    return true;
                }
                else if constexpr (std::is_same_v<T, FOOr>) {
                    for (auto const &p : v.parts) {
                        if (eval(p)) { return true; }
                    }
                    return false;
                }
                else if constexpr (std::is_same_v<T, FOImplies>) { return !eval(v.lhs) || eval(v.rhs); }
                else { return eval_quant(v, 0); }
            },
            f->data);
    }

private:
    bool eval_quant(FOQuant const &q, size_t index) {
        if (index == q.vars.size()) { return eval(q.body); }
        auto const &var = q.vars[index];
        auto saved = env_.find(var.name) != env_.end() ? std::optional{env_[var.name]} : std::nullopt;
        bool result = q.kind == Quant::forall;
        auto try_value = [&](PrecomputedTerm const &value) {
            env_[var.name] = value;
            bool r = eval_quant(q, index + 1);
            if (q.kind == Quant::forall && !r) { result = false; }
            if (q.kind == Quant::exists && r) { result = true; }
            return q.kind == Quant::forall ? !r : r; // stop on decisive value
        };
        if (var.sort == Sort::integer) {
            for (auto n : interp_.integers) {
                if (try_value(pre_num(n))) { break; }
            }
        }
        else {
            for (auto const &u : interp_.universe) {
                if (try_value(u)) { break; }
            }
        }
        if (saved) { env_[var.name] = *saved; }
        else { env_.erase(var.name); }
        return result;
    }

    StandardInterpretation const &interp_;
    Diagnostics *diag_;
    std::map<std::string, PrecomputedTerm> env_;
};

} // namespace

bool fo_satisfies(StandardInterpretation const &interp, FOFormulaPtr const &f, Diagnostics *diag) {
    if (!free_variables(f).empty()) {
        throw std::invalid_argument("fo_satisfies requires a sentence; free variable " + free_variables(f)[0].name);
    }
    return FOEvaluator{interp, diag}.eval(f);
}

// ---------------------------------------------------------------------------
// SM operator rendering

namespace {

std::string star_name(std::string const &pred) { return "u_" + pred; }

bool in_preds(std::vector<Predicate> const &preds, std::string const &name, int arity) {
    return std::any_of(preds.begin(), preds.end(),
                       [&](Predicate const &p) { return p.name == name && p.arity == arity; });
}

bool mentions(FOFormulaPtr const &f, std::vector<Predicate> const &preds) {
    return std::visit(
        [&](auto const &v) -> bool {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, FOAtom>) {
                return in_preds(preds, v.predicate, static_cast<int>(v.args.size()));
            }
            else if constexpr (std::is_same_v<T, FOAnd> || std::is_same_v<T, FOOr>) {
                return std::any_of(v.parts.begin(), v.parts.end(),
                                   [&](FOFormulaPtr const &p) { return mentions(p, preds); });
            }
            else if constexpr (std::is_same_v<T, FOImplies>) {
                return mentions(v.lhs, preds) || mentions(v.rhs, preds);
            }
            else if constexpr (std::is_same_v<T, FOQuant>) { return mentions(v.body, preds); }
            else { return false; }
        },
        f->data);
}

} // namespace

FOFormulaPtr sm_star(FOFormulaPtr const &f, std::vector<Predicate> const &preds) {
    // F* = F whenever F mentions none of the listed predicates
    if (!mentions(f, preds)) { return f; }
    return std::visit(
        [&](auto const &v) -> FOFormulaPtr {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, FOAtom>) {
                if (in_preds(preds, v.predicate, static_cast<int>(v.args.size()))) {
                    return f_atom(star_name(v.predicate), v.args);
                }
                return f;
            }
            else if constexpr (std::is_same_v<T, FOComparison> || std::is_same_v<T, FOFalsum>) { return f; }
            else if constexpr (std::is_same_v<T, FOAnd> || std::is_same_v<T, FOOr>) {
                std::vector<FOFormulaPtr> parts;
                parts.reserve(v.parts.size());
                for (auto const &p : v.parts) { parts.push_back(sm_star(p, preds)); }
                if constexpr (std::is_same_v<T, FOAnd>) { return f_and(std::move(parts)); }
                else { return f_or(std::move(parts)); }
            }
            else if constexpr (std::is_same_v<T, FOImplies>) {
                return f_and({f_implies(sm_star(v.lhs, preds), sm_star(v.rhs, preds)), f});
            }
            else { return f_quant(v.kind, v.vars, sm_star(v.body, preds)); }
        },
        f->data);
}

namespace {

//! u <= p expanded as forall W (u_p(W) -> p(W)); arity 0 drops the quantifier.
FOFormulaPtr pred_leq(std::string const &lhs, std::string const &rhs, int arity) {
    std::vector<SortedVar> vars;
    std::vector<FOTermPtr> args;
    for (int i = 0; i < arity; ++i) {
        SortedVar w{"W" + std::to_string(i + 1), Sort::program};
        args.push_back(f_var(w));
        vars.push_back(std::move(w));
    }
    return f_quant(Quant::forall, std::move(vars), f_implies(f_atom(lhs, args), f_atom(rhs, args)));
}

} // namespace

std::string sm_render(FOTheory const &theory, std::vector<Predicate> const &preds) {
    std::string f_text;
    if (theory.sentences.empty()) { f_text = math_symbols.top; }
    else if (theory.sentences.size() == 1) { f_text = render_with(theory.sentences[0], math_symbols); }
    else {
        f_text = "(";
        for (size_t i = 0; i < theory.sentences.size(); ++i) {
            if (i > 0) { f_text += math_symbols.conj; }
            f_text += render_with(theory.sentences[i], math_symbols);
        }
        f_text += ")";
    }

    std::string u_list;
    for (size_t i = 0; i < preds.size(); ++i) {
        if (i > 0) { u_list += " "; }
        u_list += star_name(preds[i].name);
    }

    std::string inner;
    if (preds.empty()) { inner = math_symbols.bot; }
    else {
        std::vector<FOFormulaPtr> u_le_p;
        std::vector<FOFormulaPtr> p_le_u;
        for (auto const &p : preds) {
            u_le_p.push_back(pred_leq(star_name(p.name), p.name, p.arity));
            p_le_u.push_back(pred_leq(p.name, star_name(p.name), p.arity));
        }
        inner = "(" + render_with(f_and(u_le_p), math_symbols) + " ∧ ¬" +
                render_with(f_and(p_le_u), math_symbols) + ")";
        std::vector<FOFormulaPtr> starred;
        for (auto const &s : theory.sentences) { starred.push_back(sm_star(s, preds)); }
        inner += math_symbols.conj;
        inner += starred.size() == 1 ? render_with(starred[0], math_symbols)
                                     : render_with(f_and(starred), math_symbols);
    }

    return f_text + " ∧ ¬∃(" + u_list + ")(" + inner + ")";
}

} // namespace clsem
