// clsem : a semantics workbench for logic programs with conditional literals
// Copyright (c) 2026 clsem authors. MIT license (see LICENSE).
//
// Shared test helpers: deterministic random generators for syntax trees and
// independent reference implementations (oracles) that the library code is
// checked against.

#ifndef CLSEM_TESTS_SUPPORT_HH
#define CLSEM_TESTS_SUPPORT_HH

#include <clsem/fol.hh>
#include <clsem/infinitary.hh>
#include <clsem/syntax.hh>
#include <clsem/values.hh>

#include <algorithm>
#include <random>

namespace clsem::test {

// ---------------------------------------------------------------------------
// deterministic randomness

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_{seed} {}

    //! uniform integer in [lo, hi]
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>{lo, hi}(engine_);
    }

    bool chance(double p) { return std::uniform_real_distribution<double>{0.0, 1.0}(engine_) < p; }

    template <typename T>
    T const &pick(std::vector<T> const &xs) {
        return xs[static_cast<size_t>(range(0, static_cast<std::int64_t>(xs.size()) - 1))];
    }

private:
    std::mt19937_64 engine_;
};

// ---------------------------------------------------------------------------
// rational rounding oracle
//
// floor/ceil of the rational quotient n1/n2 found by scanning candidate
// integers, with the comparison k <= n1/n2 resolved by exact cross
// multiplication. Independent of the library's round_div.

inline std::int64_t oracle_floor_div(std::int64_t n1, std::int64_t n2) {
    auto leq = [&](std::int64_t k) { return n2 > 0 ? k * n2 <= n1 : k * n2 >= n1; };
    std::int64_t k = -(std::abs(n1) + 1);
    while (leq(k + 1)) { ++k; }
    return k;
}

inline std::int64_t oracle_ceil_div(std::int64_t n1, std::int64_t n2) {
    auto geq = [&](std::int64_t k) { return n2 > 0 ? k * n2 >= n1 : k * n2 <= n1; };
    std::int64_t k = std::abs(n1) + 1;
    while (geq(k - 1)) { --k; }
    return k;
}

//! truncation towards zero: floor for nonnegative quotients, ceiling below
inline std::int64_t oracle_round_div(std::int64_t n1, std::int64_t n2) {
    bool nonneg = (n1 >= 0) == (n2 > 0) || n1 == 0;
    return nonneg ? oracle_floor_div(n1, n2) : oracle_ceil_div(n1, n2);
}

// ---------------------------------------------------------------------------
// term and rule generators

struct TermGenOptions {
    std::vector<std::string> symbols = {"a", "b"};
    std::vector<std::string> variables = {};       // empty: ground terms only
    std::int64_t min_num = -3;
    std::int64_t max_num = 3;
    bool with_inf_sup = true;
    int max_depth = 2;
};

inline TermPtr gen_term(Rng &rng, TermGenOptions const &opt, int depth = 0) {
    bool leaf = depth >= opt.max_depth || rng.chance(0.35);
    if (leaf) {
        auto roll = rng.range(0, 9);
        if (roll < 5) { return t_num(rng.range(opt.min_num, opt.max_num)); }
        if (roll < 7 && !opt.symbols.empty()) { return t_sym(rng.pick(opt.symbols)); }
        if (roll < 9 && !opt.variables.empty()) { return t_var(rng.pick(opt.variables)); }
        if (opt.with_inf_sup) { return rng.chance(0.5) ? t_inf() : t_sup(); }
        return t_num(rng.range(opt.min_num, opt.max_num));
    }
    auto roll = rng.range(0, 6);
    if (roll == 6) { return t_abs(gen_term(rng, opt, depth + 1)); }
    auto op = static_cast<BinOp>(roll);
    return t_bin(op, gen_term(rng, opt, depth + 1), gen_term(rng, opt, depth + 1));
}

inline PrecomputedTerm gen_precomputed(Rng &rng) {
    auto roll = rng.range(0, 9);
    if (roll == 0) { return pre_inf(); }
    if (roll == 1) { return pre_sup(); }
    if (roll < 7) { return pre_num(rng.range(-5, 5)); }
    std::vector<std::string> syms{"a", "b", "c", "aa"};
    return pre_sym(rng.pick(syms));
}

//! Terms for parse/render round trips: no negative numeral leaves, since the
//! concrete syntax spells them 0 - n (unary minus).
inline TermPtr gen_roundtrip_term(Rng &rng, int depth = 0) {
    TermGenOptions opt;
    opt.min_num = 0;
    opt.max_num = 9;
    opt.variables = {"X", "Y", "Z"};
    opt.max_depth = 3;
    if (depth == 0 && rng.chance(0.15)) { return t_neg(gen_roundtrip_term(rng, 1)); }
    return gen_term(rng, opt, depth);
}

inline Atom gen_atom(Rng &rng) {
    std::vector<std::string> preds{"p", "q", "r"};
    Atom a{rng.pick(preds), {}};
    auto arity = rng.range(0, 2);
    for (std::int64_t i = 0; i < arity; ++i) { a.args.push_back(gen_roundtrip_term(rng)); }
    return a;
}

inline BasicLiteral gen_literal(Rng &rng) {
    auto roll = rng.range(0, 2);
    auto sign = roll == 0 ? Sign::none : roll == 1 ? Sign::negation : Sign::double_negation;
    return BasicLiteral{sign, gen_atom(rng)};
}

inline Comparison gen_comparison(Rng &rng) {
    auto rel = static_cast<Rel>(rng.range(0, 5));
    return Comparison{gen_roundtrip_term(rng), rel, gen_roundtrip_term(rng)};
}

inline Condition gen_condition(Rng &rng) {
    if (rng.chance(0.7)) { return gen_literal(rng); }
    return gen_comparison(rng);
}

inline ConditionalLiteral gen_conditional_literal(Rng &rng) {
    ConditionalLiteral out;
    auto roll = rng.range(0, 9);
    if (roll < 6) { out.head = gen_literal(rng); }
    else if (roll < 9) { out.head = gen_comparison(rng); }
    else { out.head = Falsum{}; }
    auto m = rng.range(0, 2);
    for (std::int64_t i = 0; i < m; ++i) { out.conditions.push_back(gen_condition(rng)); }
    return out;
}

inline Rule gen_rule(Rng &rng) {
    Rule r;
    auto roll = rng.range(0, 2);
    r.kind = roll == 0 ? Rule::Kind::basic : roll == 1 ? Rule::Kind::choice : Rule::Kind::constraint;
    if (r.kind != Rule::Kind::constraint) { r.head = gen_atom(rng); }
    auto n = rng.range(0, 3);
    for (std::int64_t i = 0; i < n; ++i) { r.body.push_back(gen_conditional_literal(rng)); }
    return r;
}

// ---------------------------------------------------------------------------
// brute-force first-order evaluation by substitution
//
// Quantifiers are expanded by substituting every universe element; the ground
// remainder is evaluated by direct recursion. Exercises a different code path
// than the library's environment-based evaluator.

inline PrecomputedTerm brute_eval_term(FOTermPtr const &t) {
    return std::visit(
        [&](auto const &v) -> PrecomputedTerm {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, PrecomputedTerm>) { return v; }
            else if constexpr (std::is_same_v<T, SortedVar>) {
                throw std::invalid_argument("brute_eval_term: free variable " + v.name);
            }
            else {
                std::vector<std::int64_t> args;
                for (auto const &a : v.args) {
                    auto r = brute_eval_term(a);
                    if (!is_numeral(r)) { throw std::invalid_argument("non-numeral arithmetic"); }
                    args.push_back(numeral_value(r));
                }
                switch (v.op) {
                    case ArithOp::add: return pre_num(args[0] + args[1]);
                    case ArithOp::sub: return pre_num(args[0] - args[1]);
                    case ArithOp::mul: return pre_num(args[0] * args[1]);
                    case ArithOp::abs: return pre_num(args[0] < 0 ? -args[0] : args[0]);
                }
                throw std::logic_error("unhandled op");
            }
        },
        t->data);
}

inline bool brute_fo_eval(StandardInterpretation const &interp, FOFormulaPtr const &f) {
    return std::visit(
        [&](auto const &v) -> bool {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, FOAtom>) {
                GroundAtom atom{v.predicate, {}};
                for (auto const &a : v.args) { atom.args.push_back(brute_eval_term(a)); }
                return interp.true_atoms.count(atom) > 0;
            }
            else if constexpr (std::is_same_v<T, FOComparison>) {
                return rel_holds(v.rel, brute_eval_term(v.lhs), brute_eval_term(v.rhs));
            }
            else if constexpr (std::is_same_v<T, FOFalsum>) { return false; }
            else if constexpr (std::is_same_v<T, FOAnd>) {
                for (auto const &p : v.parts) {
                    if (!brute_fo_eval(interp, p)) { return false; }
                }
                return true;
            }
            else if constexpr (std::is_same_v<T, FOOr>) {
                for (auto const &p : v.parts) {
                    if (brute_fo_eval(interp, p)) { return true; }
                }
                return false;
            }
            else if constexpr (std::is_same_v<T, FOImplies>) {
                return !brute_fo_eval(interp, v.lhs) || brute_fo_eval(interp, v.rhs);
            }
            else {
                auto const &var = v.vars.front();
                std::vector<SortedVar> rest{v.vars.begin() + 1, v.vars.end()};
                std::vector<PrecomputedTerm> domain;
                if (var.sort == Sort::integer) {
                    for (auto n : interp.integers) { domain.push_back(pre_num(n)); }
                }
                else { domain = interp.universe; }
                for (auto const &value : domain) {
                    auto inst = substitute(f_quant(v.kind, rest, v.body), var.name, value);
                    bool r = brute_fo_eval(interp, inst);
                    if (v.kind == Quant::exists && r) { return true; }
                    if (v.kind == Quant::forall && !r) { return false; }
                }
                return v.kind == Quant::forall;
            }
        },
        f->data);
}

// ---------------------------------------------------------------------------
// propositional-formula generation over a fixed atom base

//! random formula of bounded structural depth; mixes the collapsing and the
//! raw set formers so both representations circulate through the properties
inline InfFormulaPtr gen_inf_formula(Rng &rng, std::vector<GroundAtom> const &atoms, int depth) {
    if (depth <= 0 || rng.chance(0.3)) {
        auto roll = rng.range(0, 9);
        if (roll == 0) { return inf_top(); }
        if (roll == 1) { return inf_bot(); }
        return inf_atom(rng.pick(atoms));
    }
    auto roll = rng.range(0, 9);
    if (roll < 3) {
        auto n = rng.range(0, 3);
        std::vector<InfFormulaPtr> parts;
        for (std::int64_t i = 0; i < n; ++i) { parts.push_back(gen_inf_formula(rng, atoms, depth - 1)); }
        return rng.chance(0.5) ? inf_conj(std::move(parts)) : inf_conj_raw(std::move(parts));
    }
    if (roll < 6) {
        auto n = rng.range(0, 3);
        std::vector<InfFormulaPtr> parts;
        for (std::int64_t i = 0; i < n; ++i) { parts.push_back(gen_inf_formula(rng, atoms, depth - 1)); }
        return rng.chance(0.5) ? inf_disj(std::move(parts)) : inf_disj_raw(std::move(parts));
    }
    if (roll < 8) { return inf_not(gen_inf_formula(rng, atoms, depth - 1)); }
    return inf_implies(gen_inf_formula(rng, atoms, depth - 1), gen_inf_formula(rng, atoms, depth - 1));
}

//! every subset of the given atoms, as sets, in bitmask order
inline std::vector<AtomSet> all_subsets(std::vector<GroundAtom> const &atoms) {
    std::vector<AtomSet> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << atoms.size()); ++mask) {
        AtomSet s;
        for (size_t i = 0; i < atoms.size(); ++i) {
            if ((mask >> i) & 1u) { s.insert(atoms[i]); }
        }
        out.push_back(std::move(s));
    }
    return out;
}

//! true when lhs is a subset of rhs
inline bool subset_of(AtomSet const &lhs, AtomSet const &rhs) {
    return std::includes(rhs.begin(), rhs.end(), lhs.begin(), lhs.end());
}

} // namespace clsem::test

#endif // CLSEM_TESTS_SUPPORT_HH
