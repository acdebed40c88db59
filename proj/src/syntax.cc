// clsem : a semantics workbench for logic programs with conditional literals
// Copyright (c) 2026 clsem authors. MIT license (see LICENSE).

#include <clsem/syntax.hh>

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace clsem {

namespace {

using json = nlohmann::json;

} // namespace

// ---------------------------------------------------------------------------
// precomputed terms

std::strong_ordering compare_precomputed(PrecomputedTerm const &a, PrecomputedTerm const &b) {
    return a <=> b;
}

std::string render(PrecomputedTerm const &t) {
    return std::visit(
        [](auto const &v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, InfValue>) { return "#inf"; }
            else if constexpr (std::is_same_v<T, SupValue>) { return "#sup"; }
            else if constexpr (std::is_same_v<T, std::int64_t>) { return std::to_string(v); }
            else { return v; }
        },
        t);
}

std::string render(GroundAtom const &a) {
    if (a.args.empty()) { return a.predicate; }
    std::string out = a.predicate + "(";
    for (size_t i = 0; i < a.args.size(); ++i) {
        if (i > 0) { out += ","; }
        out += render(a.args[i]);
    }
    out += ")";
    return out;
}

std::string render(AtomSet const &m) {
    std::string out;
    for (auto const &a : m) {
        if (!out.empty()) { out += " "; }
        out += render(a);
    }
    return out;
}

// ---------------------------------------------------------------------------
// terms

TermPtr t_num(std::int64_t n) { return std::make_shared<Term const>(Term{Numeral{n}}); }
TermPtr t_sym(std::string name) { return std::make_shared<Term const>(Term{SymbolicConstant{std::move(name)}}); }
TermPtr t_var(std::string name) { return std::make_shared<Term const>(Term{Variable{std::move(name)}}); }
TermPtr t_inf() { return std::make_shared<Term const>(Term{InfTerm{}}); }
TermPtr t_sup() { return std::make_shared<Term const>(Term{SupTerm{}}); }
TermPtr t_bin(BinOp op, TermPtr lhs, TermPtr rhs) {
    return std::make_shared<Term const>(Term{Binary{op, std::move(lhs), std::move(rhs)}});
}
TermPtr t_abs(TermPtr arg) { return std::make_shared<Term const>(Term{AbsoluteValue{std::move(arg)}}); }
TermPtr t_neg(TermPtr arg) { return t_bin(BinOp::sub, t_num(0), std::move(arg)); }

TermPtr t_pre(PrecomputedTerm const &t) {
    return std::visit(
        [](auto const &v) -> TermPtr {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, InfValue>) { return t_inf(); }
            else if constexpr (std::is_same_v<T, SupValue>) { return t_sup(); }
            else if constexpr (std::is_same_v<T, std::int64_t>) { return t_num(v); }
            else { return t_sym(v); }
        },
        t);
}

bool term_equal(TermPtr const &a, TermPtr const &b) {
    if (a.get() == b.get()) { return true; }
    if (a->data.index() != b->data.index()) { return false; }
    return std::visit(
        [&](auto const &x) -> bool {
            using T = std::decay_t<decltype(x)>;
            auto const &y = std::get<T>(b->data);
            if constexpr (std::is_same_v<T, Numeral>) { return x.value == y.value; }
            else if constexpr (std::is_same_v<T, SymbolicConstant>) { return x.name == y.name; }
            else if constexpr (std::is_same_v<T, Variable>) { return x.name == y.name; }
            else if constexpr (std::is_same_v<T, InfTerm> || std::is_same_v<T, SupTerm>) { return true; }
            else if constexpr (std::is_same_v<T, Binary>) {
                return x.op == y.op && term_equal(x.lhs, y.lhs) && term_equal(x.rhs, y.rhs);
            }
            else { return term_equal(x.arg, y.arg); }
        },
        a->data);
}

std::optional<PrecomputedTerm> as_precomputed(TermPtr const &t) {
    return std::visit(
        [](auto const &v) -> std::optional<PrecomputedTerm> {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Numeral>) { return pre_num(v.value); }
            else if constexpr (std::is_same_v<T, SymbolicConstant>) { return pre_sym(v.name); }
            else if constexpr (std::is_same_v<T, InfTerm>) { return pre_inf(); }
            else if constexpr (std::is_same_v<T, SupTerm>) { return pre_sup(); }
            else { return std::nullopt; }
        },
        t->data);
}

namespace {

// precedence levels: range < add/sub < mul/div/mod < unary and primaries
int prec_of(BinOp op) {
    switch (op) {
        case BinOp::range: return 1;
        case BinOp::add:
        case BinOp::sub: return 2;
        default: return 3;
    }
}

char const *op_text(BinOp op) {
    switch (op) {
        case BinOp::add: return "+";
        case BinOp::sub: return "-";
        case BinOp::mul: return "*";
        case BinOp::div: return "/";
        case BinOp::mod: return "\\";
        case BinOp::range: return "..";
    }
    return "?";
}

bool is_zero(TermPtr const &t) {
    auto const *n = std::get_if<Numeral>(&t->data);
    return n != nullptr && n->value == 0;
}

void render_term(std::string &out, TermPtr const &t, int min_prec) {
    std::visit(
        [&](auto const &v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Numeral>) { out += std::to_string(v.value); }
            else if constexpr (std::is_same_v<T, SymbolicConstant>) { out += v.name; }
            else if constexpr (std::is_same_v<T, Variable>) { out += v.name; }
            else if constexpr (std::is_same_v<T, InfTerm>) { out += "#inf"; }
            else if constexpr (std::is_same_v<T, SupTerm>) { out += "#sup"; }
            else if constexpr (std::is_same_v<T, Binary>) {
                // 0 - t prints as the abbreviation -t
                if (v.op == BinOp::sub && is_zero(v.lhs)) {
                    out += "-";
                    render_term(out, v.rhs, 4);
                    return;
                }
                int prec = prec_of(v.op);
                bool paren = prec < min_prec;
                if (paren) { out += "("; }
                render_term(out, v.lhs, prec);
                out += op_text(v.op);
                render_term(out, v.rhs, prec + 1);
                if (paren) { out += ")"; }
            }
            else {
                out += "|";
                render_term(out, v.arg, 0);
                out += "|";
            }
        },
        t->data);
}

} // namespace

std::string render(TermPtr const &t) {
    std::string out;
    render_term(out, t, 0);
    return out;
}

// ---------------------------------------------------------------------------
// literals and rules

bool rel_holds(Rel rel, PrecomputedTerm const &lhs, PrecomputedTerm const &rhs) {
    auto c = compare_precomputed(lhs, rhs);
    switch (rel) {
        case Rel::lt: return c < 0;
        case Rel::le: return c <= 0;
        case Rel::gt: return c > 0;
        case Rel::ge: return c >= 0;
        case Rel::eq: return c == 0;
        case Rel::ne: return c != 0;
    }
    return false;
}

std::string render(Rel rel) {
    switch (rel) {
        case Rel::lt: return "<";
        case Rel::le: return "<=";
        case Rel::gt: return ">";
        case Rel::ge: return ">=";
        case Rel::eq: return "=";
        case Rel::ne: return "!=";
    }
    return "?";
}

bool operator==(Atom const &a, Atom const &b) {
    if (a.predicate != b.predicate || a.args.size() != b.args.size()) { return false; }
    for (size_t i = 0; i < a.args.size(); ++i) {
        if (!term_equal(a.args[i], b.args[i])) { return false; }
    }
    return true;
}

bool operator==(BasicLiteral const &a, BasicLiteral const &b) { return a.sign == b.sign && a.atom == b.atom; }

bool operator==(Comparison const &a, Comparison const &b) {
    return a.rel == b.rel && term_equal(a.lhs, b.lhs) && term_equal(a.rhs, b.rhs);
}

bool operator==(Falsum const &, Falsum const &) { return true; }

bool operator==(ConditionalLiteral const &a, ConditionalLiteral const &b) {
    return a.head == b.head && a.conditions == b.conditions;
}

bool operator==(Rule const &a, Rule const &b) {
    return a.kind == b.kind && a.head == b.head && a.body == b.body;
}

bool operator==(Program const &a, Program const &b) { return a.rules == b.rules; }

std::string render(Atom const &a) {
    if (a.args.empty()) { return a.predicate; }
    std::string out = a.predicate + "(";
    for (size_t i = 0; i < a.args.size(); ++i) {
        if (i > 0) { out += ","; }
        out += render(a.args[i]);
    }
    out += ")";
    return out;
}

std::string render(BasicLiteral const &l) {
    std::string out;
    if (l.sign == Sign::negation) { out = "not "; }
    else if (l.sign == Sign::double_negation) { out = "not not "; }
    return out + render(l.atom);
}

std::string render(Comparison const &c) { return render(c.lhs) + " " + render(c.rel) + " " + render(c.rhs); }

namespace {

std::string render_cond_head(CondHead const &h) {
    return std::visit(
        [](auto const &v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Falsum>) { return "#false"; }
            else { return render(v); }
        },
        h);
}

std::string render_condition(Condition const &c) {
    return std::visit([](auto const &v) { return render(v); }, c);
}

} // namespace

std::string render(ConditionalLiteral const &l) {
    std::string out = render_cond_head(l.head);
    if (!l.conditions.empty()) {
        out += " : ";
        for (size_t i = 0; i < l.conditions.size(); ++i) {
            if (i > 0) { out += ", "; }
            out += render_condition(l.conditions[i]);
        }
    }
    return out;
}

std::string render(Rule const &r) {
    std::string out;
    if (r.kind == Rule::Kind::basic) { out = render(*r.head); }
    else if (r.kind == Rule::Kind::choice) { out = "{" + render(*r.head) + "}"; }
    if (!r.body.empty() || r.kind == Rule::Kind::constraint) {
        if (!out.empty()) { out += " "; }
        out += ":-";
        for (size_t i = 0; i < r.body.size(); ++i) {
            out += i == 0 ? " " : "; ";
            out += render(r.body[i]);
        }
    }
    out += ".";
    return out;
}

std::string render(Program const &p) {
    std::string out;
    for (auto const &r : p.rules) {
        out += render(r);
        out += "\n";
    }
    return out;
}

// ---------------------------------------------------------------------------
// variables

namespace {

void term_vars(TermPtr const &t, std::vector<std::string> &order, std::set<std::string> &seen) {
    std::visit(
        [&](auto const &v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Variable>) {
                if (seen.insert(v.name).second) { order.push_back(v.name); }
            }
            else if constexpr (std::is_same_v<T, Binary>) {
                term_vars(v.lhs, order, seen);
                term_vars(v.rhs, order, seen);
            }
            else if constexpr (std::is_same_v<T, AbsoluteValue>) { term_vars(v.arg, order, seen); }
        },
        t->data);
}

void atom_vars(Atom const &a, std::vector<std::string> &order, std::set<std::string> &seen) {
    for (auto const &t : a.args) { term_vars(t, order, seen); }
}

void cond_head_vars(CondHead const &h, std::vector<std::string> &order, std::set<std::string> &seen) {
    std::visit(
        [&](auto const &v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, BasicLiteral>) { atom_vars(v.atom, order, seen); }
            else if constexpr (std::is_same_v<T, Comparison>) {
                term_vars(v.lhs, order, seen);
                term_vars(v.rhs, order, seen);
            }
        },
        h);
}

void condition_vars(Condition const &c, std::vector<std::string> &order, std::set<std::string> &seen) {
    std::visit(
        [&](auto const &v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, BasicLiteral>) { atom_vars(v.atom, order, seen); }
            else {
                term_vars(v.lhs, order, seen);
                term_vars(v.rhs, order, seen);
            }
        },
        c);
}

} // namespace

std::vector<std::string> rule_variables(Rule const &r) {
    std::vector<std::string> order;
    std::set<std::string> seen;
    if (r.head) { atom_vars(*r.head, order, seen); }
    for (auto const &elem : r.body) {
        cond_head_vars(elem.head, order, seen);
        for (auto const &c : elem.conditions) { condition_vars(c, order, seen); }
    }
    return order;
}

std::vector<std::string> term_variables(TermPtr const &t) {
    std::vector<std::string> order;
    std::set<std::string> seen;
    term_vars(t, order, seen);
    return order;
}

std::vector<std::string> global_variables(Rule const &r) {
    std::set<std::string> global;
    if (r.head) {
        std::vector<std::string> order;
        std::set<std::string> seen;
        atom_vars(*r.head, order, seen);
        global.insert(order.begin(), order.end());
    }
    for (auto const &elem : r.body) {
        std::vector<std::string> horder;
        std::set<std::string> hseen;
        cond_head_vars(elem.head, horder, hseen);
        std::vector<std::string> corder;
        std::set<std::string> cseen;
        for (auto const &c : elem.conditions) { condition_vars(c, corder, cseen); }
        // a variable is global in a conditional literal if it occurs in the
        // head but not in the conditions; plain elements have no conditions
        for (auto const &v : horder) {
            if (cseen.find(v) == cseen.end()) { global.insert(v); }
        }
    }
    std::vector<std::string> result;
    for (auto const &v : rule_variables(r)) {
        if (global.count(v) > 0) { result.push_back(v); }
    }
    return result;
}

// ---------------------------------------------------------------------------
// substitution

namespace {

TermPtr subst_term(TermPtr const &t, std::map<std::string, PrecomputedTerm> const &subst) {
    return std::visit(
        [&](auto const &v) -> TermPtr {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Variable>) {
                auto it = subst.find(v.name);
                return it == subst.end() ? t : t_pre(it->second);
            }
            else if constexpr (std::is_same_v<T, Binary>) {
                return t_bin(v.op, subst_term(v.lhs, subst), subst_term(v.rhs, subst));
            }
            else if constexpr (std::is_same_v<T, AbsoluteValue>) { return t_abs(subst_term(v.arg, subst)); }
            else { return t; }
        },
        t->data);
}

Atom subst_atom(Atom const &a, std::map<std::string, PrecomputedTerm> const &subst) {
    Atom out{a.predicate, {}};
    out.args.reserve(a.args.size());
    for (auto const &t : a.args) { out.args.push_back(subst_term(t, subst)); }
    return out;
}

CondHead subst_cond_head(CondHead const &h, std::map<std::string, PrecomputedTerm> const &subst) {
    return std::visit(
        [&](auto const &v) -> CondHead {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, BasicLiteral>) { return BasicLiteral{v.sign, subst_atom(v.atom, subst)}; }
            else if constexpr (std::is_same_v<T, Comparison>) {
                return Comparison{subst_term(v.lhs, subst), v.rel, subst_term(v.rhs, subst)};
            }
            else { return v; }
        },
        h);
}

Condition subst_condition(Condition const &c, std::map<std::string, PrecomputedTerm> const &subst) {
    return std::visit(
        [&](auto const &v) -> Condition {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, BasicLiteral>) { return BasicLiteral{v.sign, subst_atom(v.atom, subst)}; }
            else { return Comparison{subst_term(v.lhs, subst), v.rel, subst_term(v.rhs, subst)}; }
        },
        c);
}

} // namespace

Rule substitute_globals(Rule const &r, std::map<std::string, PrecomputedTerm> const &subst) {
    Rule out;
    out.kind = r.kind;
    if (r.head) { out.head = subst_atom(*r.head, subst); }
    out.body.reserve(r.body.size());
    for (auto const &elem : r.body) { out.body.push_back(substitute_literal(elem, subst)); }
    return out;
}

ConditionalLiteral substitute_literal(ConditionalLiteral const &e,
                                      std::map<std::string, PrecomputedTerm> const &subst) {
    ConditionalLiteral out;
    out.head = subst_cond_head(e.head, subst);
    out.conditions.reserve(e.conditions.size());
    for (auto const &c : e.conditions) { out.conditions.push_back(subst_condition(c, subst)); }
    return out;
}

TermPtr substitute_in_term(TermPtr const &t, std::map<std::string, PrecomputedTerm> const &subst) {
    return subst_term(t, subst);
}

// ---------------------------------------------------------------------------
// collection

namespace {

void term_constants(TermPtr const &t, std::set<std::string> &out) {
    std::visit(
        [&](auto const &v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, SymbolicConstant>) { out.insert(v.name); }
            else if constexpr (std::is_same_v<T, Binary>) {
                term_constants(v.lhs, out);
                term_constants(v.rhs, out);
            }
            else if constexpr (std::is_same_v<T, AbsoluteValue>) { term_constants(v.arg, out); }
        },
        t->data);
}

} // namespace

std::set<std::string> program_constants(Program const &p) {
    std::set<std::string> out;
    auto collect_atom = [&](Atom const &a) {
        for (auto const &t : a.args) { term_constants(t, out); }
    };
    auto collect_cmp = [&](Comparison const &c) {
        term_constants(c.lhs, out);
        term_constants(c.rhs, out);
    };
    for (auto const &r : p.rules) {
        if (r.head) { collect_atom(*r.head); }
        for (auto const &elem : r.body) {
            std::visit(
                [&](auto const &v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, BasicLiteral>) { collect_atom(v.atom); }
                    else if constexpr (std::is_same_v<T, Comparison>) { collect_cmp(v); }
                },
                elem.head);
            for (auto const &c : elem.conditions) {
                std::visit(
                    [&](auto const &v) {
                        using T = std::decay_t<decltype(v)>;
                        if constexpr (std::is_same_v<T, BasicLiteral>) { collect_atom(v.atom); }
                        else { collect_cmp(v); }
                    },
                    c);
            }
        }
    }
    return out;
}

std::set<Predicate> program_predicates(Program const &p) {
    std::set<Predicate> out;
    auto collect = [&](Atom const &a) { out.insert(Predicate{a.predicate, static_cast<int>(a.args.size())}); };
    for (auto const &r : p.rules) {
        if (r.head) { collect(*r.head); }
        for (auto const &elem : r.body) {
            if (auto const *lit = std::get_if<BasicLiteral>(&elem.head)) { collect(lit->atom); }
            for (auto const &c : elem.conditions) {
                if (auto const *lit = std::get_if<BasicLiteral>(&c)) { collect(lit->atom); }
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// JSON export

namespace {

json term_json(TermPtr const &t) {
    return std::visit(
        [](auto const &v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Numeral>) { return {{"type", "numeral"}, {"value", v.value}}; }
            else if constexpr (std::is_same_v<T, SymbolicConstant>) { return {{"type", "symbol"}, {"name", v.name}}; }
            else if constexpr (std::is_same_v<T, Variable>) { return {{"type", "variable"}, {"name", v.name}}; }
            else if constexpr (std::is_same_v<T, InfTerm>) { return {{"type", "inf"}}; }
            else if constexpr (std::is_same_v<T, SupTerm>) { return {{"type", "sup"}}; }
            else if constexpr (std::is_same_v<T, Binary>) {
                return {{"type", "binary"}, {"op", op_text(v.op)}, {"lhs", term_json(v.lhs)}, {"rhs", term_json(v.rhs)}};
            }
            else { return {{"type", "abs"}, {"arg", term_json(v.arg)}}; }
        },
        t->data);
}

json atom_json(Atom const &a) {
    json args = json::array();
    for (auto const &t : a.args) { args.push_back(term_json(t)); }
    return {{"predicate", a.predicate}, {"args", args}};
}

char const *sign_text(Sign s) {
    switch (s) {
        case Sign::none: return "none";
        case Sign::negation: return "not";
        case Sign::double_negation: return "not not";
    }
    return "?";
}

json literal_json(BasicLiteral const &l) {
    return {{"type", "literal"}, {"sign", sign_text(l.sign)}, {"atom", atom_json(l.atom)}};
}

json comparison_json(Comparison const &c) {
    return {{"type", "comparison"}, {"rel", render(c.rel)}, {"lhs", term_json(c.lhs)}, {"rhs", term_json(c.rhs)}};
}

json cond_head_json(CondHead const &h) {
    return std::visit(
        [](auto const &v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, BasicLiteral>) { return literal_json(v); }
            else if constexpr (std::is_same_v<T, Comparison>) { return comparison_json(v); }
            else { return {{"type", "falsum"}}; }
        },
        h);
}

} // namespace

std::string to_json(Program const &p) {
    json rules = json::array();
    for (auto const &r : p.rules) {
        json rule;
        switch (r.kind) {
            case Rule::Kind::basic: rule["kind"] = "basic"; break;
            case Rule::Kind::choice: rule["kind"] = "choice"; break;
            case Rule::Kind::constraint: rule["kind"] = "constraint"; break;
        }
        if (r.head) { rule["head"] = atom_json(*r.head); }
        json body = json::array();
        for (auto const &elem : r.body) {
            json conditions = json::array();
            for (auto const &c : elem.conditions) {
                conditions.push_back(std::visit(
                    [](auto const &v) -> json {
                        using T = std::decay_t<decltype(v)>;
                        if constexpr (std::is_same_v<T, BasicLiteral>) { return literal_json(v); }
                        else { return comparison_json(v); }
                    },
                    c));
            }
            body.push_back({{"head", cond_head_json(elem.head)}, {"conditions", conditions}});
        }
        rule["body"] = body;
        rules.push_back(rule);
    }
    json doc{{"schema", "clsem-program-1"}, {"rules", rules}};
    return doc.dump(2);
}

} // namespace clsem
