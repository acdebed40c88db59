// clsem : a semantics workbench for logic programs with conditional literals
// Copyright (c) 2026 clsem authors. MIT license (see LICENSE).

#ifndef CLSEM_FOL_HH
#define CLSEM_FOL_HH

#include <clsem/syntax.hh>

#include <iosfwd>

namespace clsem {

// ---------------------------------------------------------------------------
// two-sorted signature: a program sort and an integer subsort

enum class Sort { program, integer };

struct FOTerm;
using FOTermPtr = std::shared_ptr<FOTerm const>;

struct SortedVar {
    std::string name;
    Sort sort = Sort::program;
    auto operator<=>(SortedVar const &) const = default;
};

enum class ArithOp { add, sub, mul, abs };

//! +, -, x are binary and |.| unary; all map integers to integers.
struct ArithApply {
    ArithOp op;
    std::vector<FOTermPtr> args;
};

struct FOTerm {
    std::variant<PrecomputedTerm, SortedVar, ArithApply> data;
};

FOTermPtr f_pre(PrecomputedTerm t);
FOTermPtr f_var(SortedVar v);
FOTermPtr f_arith(ArithOp op, std::vector<FOTermPtr> args);

Sort sort_of(FOTermPtr const &t);
bool foterm_equal(FOTermPtr const &a, FOTermPtr const &b);
std::string render(FOTermPtr const &t);

// ---------------------------------------------------------------------------
// formulas

struct FOFormula;
using FOFormulaPtr = std::shared_ptr<FOFormula const>;

struct FOAtom {
    std::string predicate;
    std::vector<FOTermPtr> args;
};
struct FOComparison {
    FOTermPtr lhs;
    Rel rel;
    FOTermPtr rhs;
};
struct FOFalsum {};
struct FOAnd {
    std::vector<FOFormulaPtr> parts;
};
struct FOOr {
    std::vector<FOFormulaPtr> parts;
};
struct FOImplies {
    FOFormulaPtr lhs;
    FOFormulaPtr rhs;
};
enum class Quant { forall, exists };
struct FOQuant {
    Quant kind;
    std::vector<SortedVar> vars;
    FOFormulaPtr body;
};

struct FOFormula {
    std::variant<FOAtom, FOComparison, FOFalsum, FOAnd, FOOr, FOImplies, FOQuant> data;
};

FOFormulaPtr f_atom(std::string predicate, std::vector<FOTermPtr> args = {});
FOFormulaPtr f_cmp(FOTermPtr lhs, Rel rel, FOTermPtr rhs);
FOFormulaPtr f_false();
FOFormulaPtr f_and(std::vector<FOFormulaPtr> parts);
FOFormulaPtr f_or(std::vector<FOFormulaPtr> parts);
FOFormulaPtr f_implies(FOFormulaPtr lhs, FOFormulaPtr rhs);
//! not F abbreviates F -> #false
FOFormulaPtr f_not(FOFormulaPtr f);
FOFormulaPtr f_quant(Quant kind, std::vector<SortedVar> vars, FOFormulaPtr body);

bool formula_equal(FOFormulaPtr const &a, FOFormulaPtr const &b);
//! Structural equality up to renaming of bound variables (sorts must match).
bool alpha_equal(FOFormulaPtr const &a, FOFormulaPtr const &b);
//! Free variables in first-occurrence order.
std::vector<SortedVar> free_variables(FOFormulaPtr const &f);
//! Capture-safe substitution of a precomputed term for a free variable.
FOFormulaPtr substitute(FOFormulaPtr const &f, std::string const &var, PrecomputedTerm const &value);
std::string render(FOFormulaPtr const &f);

//! A theory is a list of sentences whose conjunction is meant downstream.
struct FOTheory {
    std::vector<FOFormulaPtr> sentences;
};
std::string render(FOTheory const &t);
std::string to_json(FOTheory const &t);

// ---------------------------------------------------------------------------
// signatures and standard interpretations

//! Program predicate symbols; comparison symbols and the arithmetic function
//! constants are part of every signature implicitly.
struct ProgramSignature {
    std::set<Predicate> predicates;
};

ProgramSignature build_signature(Program const &p);

//! A standard interpretation restricted to a bounded universe: the symbolic
//! constants of the program, numerals in [-int_bound, int_bound], and
//! #inf/#sup. Every precomputed term denotes itself; arithmetic is exact even
//! when results leave the universe.
struct StandardInterpretation {
    std::vector<PrecomputedTerm> universe; // sorted by compare_precomputed
    std::vector<std::int64_t> integers;    // the numerals of the universe
    std::int64_t int_bound = 0;
    AtomSet true_atoms;

    bool in_universe(PrecomputedTerm const &t) const;
};

StandardInterpretation make_standard_interpretation(Program const &p, Limits const &limits, AtomSet true_atoms = {});
//! Universe from an explicit constant set (used by tests and tools).
StandardInterpretation make_interpretation(std::set<std::string> const &constants, Limits const &limits,
                                           AtomSet true_atoms = {});

//! Evaluate a ground first-order term; arithmetic is exact and checked.
PrecomputedTerm eval_foterm(FOTermPtr const &t, std::map<std::string, PrecomputedTerm> const &env,
                            Diagnostics *diag = nullptr, std::int64_t int_bound = 0);

//! Tarskian satisfaction over the bounded universe; f must be a sentence.
//! Integer variables range over the universe's numerals, program variables
//! over the whole universe. Out-of-universe arithmetic results are evaluated
//! exactly and flagged in diag.
bool fo_satisfies(StandardInterpretation const &interp, FOFormulaPtr const &f, Diagnostics *diag = nullptr);

// ---------------------------------------------------------------------------
// SM operator (rendering support)

//! The star transform: atoms over the listed predicates are renamed to their
//! paired predicate variables (u_p), implications gain the conjunct (F -> G),
//! everything else maps homomorphically.
FOFormulaPtr sm_star(FOFormulaPtr const &f, std::vector<Predicate> const &preds);

//! Render SM_p[F] = F & -exists u ((u < p) & F*(u)) with u <= p expanded as
//! forall W (u(W) -> p(W)). Documentation output only; never evaluated.
std::string sm_render(FOTheory const &theory, std::vector<Predicate> const &preds);

} // namespace clsem

#endif // CLSEM_FOL_HH
