// clsem : a semantics workbench for logic programs with conditional literals
// Copyright (c) 2026 clsem authors. MIT license (see LICENSE).

#ifndef CLSEM_SYNTAX_HH
#define CLSEM_SYNTAX_HH

#include <clsem/common.hh>

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace clsem {

// ---------------------------------------------------------------------------
// precomputed terms

struct InfValue {
    auto operator<=>(InfValue const &) const = default;
};
struct SupValue {
    auto operator<=>(SupValue const &) const = default;
};

//! A ground term without operation names: #inf, a numeral, a symbolic
//! constant, or #sup. The variant order realizes the total order
//! #inf < numerals (by value) < symbolic constants (byte-wise) < #sup.
using PrecomputedTerm = std::variant<InfValue, std::int64_t, std::string, SupValue>;

std::strong_ordering compare_precomputed(PrecomputedTerm const &a, PrecomputedTerm const &b);
std::string render(PrecomputedTerm const &t);

inline PrecomputedTerm pre_inf() { return PrecomputedTerm{InfValue{}}; }
inline PrecomputedTerm pre_sup() { return PrecomputedTerm{SupValue{}}; }
inline PrecomputedTerm pre_num(std::int64_t n) { return PrecomputedTerm{n}; }
inline PrecomputedTerm pre_sym(std::string s) { return PrecomputedTerm{std::move(s)}; }
inline bool is_numeral(PrecomputedTerm const &t) { return std::holds_alternative<std::int64_t>(t); }
inline std::int64_t numeral_value(PrecomputedTerm const &t) { return std::get<std::int64_t>(t); }

//! An atom over precomputed arguments; the currency of models.
struct GroundAtom {
    std::string predicate;
    std::vector<PrecomputedTerm> args;
    auto operator<=>(GroundAtom const &) const = default;
};
std::string render(GroundAtom const &a);

//! Sets of ground atoms double as interpretations of the propositional signature.
using AtomSet = std::set<GroundAtom>;
std::string render(AtomSet const &m);

//! Predicate symbol with arity; p/1 and p/2 are distinct.
struct Predicate {
    std::string name;
    int arity;
    auto operator<=>(Predicate const &) const = default;
};

// ---------------------------------------------------------------------------
// terms

enum class BinOp { add, sub, mul, div, mod, range };

struct Term;
using TermPtr = std::shared_ptr<Term const>;

struct Numeral {
    std::int64_t value;
};
struct SymbolicConstant {
    std::string name;
};
struct Variable {
    std::string name;
};
struct InfTerm {};
struct SupTerm {};
struct Binary {
    BinOp op;
    TermPtr lhs;
    TermPtr rhs;
};
struct AbsoluteValue {
    TermPtr arg;
};

struct Term {
    std::variant<Numeral, SymbolicConstant, Variable, InfTerm, SupTerm, Binary, AbsoluteValue> data;
};

TermPtr t_num(std::int64_t n);
TermPtr t_sym(std::string name);
TermPtr t_var(std::string name);
TermPtr t_inf();
TermPtr t_sup();
TermPtr t_bin(BinOp op, TermPtr lhs, TermPtr rhs);
TermPtr t_abs(TermPtr arg);
//! -t abbreviates 0 - t
TermPtr t_neg(TermPtr arg);
//! embed a precomputed term back into term syntax
TermPtr t_pre(PrecomputedTerm const &t);

bool term_equal(TermPtr const &a, TermPtr const &b);
//! the precomputed term a ground, operation-free term denotes
std::optional<PrecomputedTerm> as_precomputed(TermPtr const &t);
std::string render(TermPtr const &t);

// ---------------------------------------------------------------------------
// literals, rules, programs

enum class Rel { lt, le, gt, ge, eq, ne };

bool rel_holds(Rel rel, PrecomputedTerm const &lhs, PrecomputedTerm const &rhs);
std::string render(Rel rel);

struct Atom {
    std::string predicate;
    std::vector<TermPtr> args;
};

enum class Sign { none, negation, double_negation };

struct BasicLiteral {
    Sign sign = Sign::none;
    Atom atom;
};

struct Comparison {
    TermPtr lhs;
    Rel rel;
    TermPtr rhs;
};

struct Falsum {};

//! Head of a conditional literal; plain body elements carry empty conditions.
using CondHead = std::variant<BasicLiteral, Comparison, Falsum>;
using Condition = std::variant<BasicLiteral, Comparison>;

struct ConditionalLiteral {
    CondHead head;
    std::vector<Condition> conditions;
};

struct Rule {
    enum class Kind { basic, choice, constraint };
    Kind kind = Kind::basic;
    std::optional<Atom> head; // absent for constraints
    std::vector<ConditionalLiteral> body;
};

struct Program {
    std::vector<Rule> rules;
};

bool operator==(Atom const &a, Atom const &b);
bool operator==(BasicLiteral const &a, BasicLiteral const &b);
bool operator==(Comparison const &a, Comparison const &b);
bool operator==(Falsum const &, Falsum const &);
bool operator==(ConditionalLiteral const &a, ConditionalLiteral const &b);
bool operator==(Rule const &a, Rule const &b);
bool operator==(Program const &a, Program const &b);

std::string render(Atom const &a);
std::string render(BasicLiteral const &l);
std::string render(Comparison const &c);
std::string render(ConditionalLiteral const &l);
std::string render(Rule const &r);
std::string render(Program const &p);

//! Parse a program in clingo-compatible concrete syntax.
//! "%" starts a comment, "." terminates rules, ";" separates body elements,
//! ":" separates a conditional literal's head from its conditions.
//! Throws ParseError with a 1-based location.
Program parse_program(std::string_view text);

//! Variables global in the rule, in first-occurrence order: head variables,
//! variables of plain body literals and comparisons, and variables occurring
//! in a conditional literal's head but not its conditions.
std::vector<std::string> global_variables(Rule const &r);

//! All variable names occurring anywhere in the rule, in first-occurrence order.
std::vector<std::string> rule_variables(Rule const &r);

//! Variable names occurring in the term, in first-occurrence order.
std::vector<std::string> term_variables(TermPtr const &t);

//! Substitute precomputed terms for variables (used for rule instantiation).
Rule substitute_globals(Rule const &r, std::map<std::string, PrecomputedTerm> const &subst);

//! The same substitution applied to a single body element.
ConditionalLiteral substitute_literal(ConditionalLiteral const &e,
                                      std::map<std::string, PrecomputedTerm> const &subst);

//! The same substitution applied to a term.
TermPtr substitute_in_term(TermPtr const &t, std::map<std::string, PrecomputedTerm> const &subst);

//! Symbolic constants occurring as terms anywhere in the program.
std::set<std::string> program_constants(Program const &p);

//! Predicate symbols occurring in the program (heads, literals, conditions).
std::set<Predicate> program_predicates(Program const &p);

//! JSON export of the abstract syntax tree with stable field names.
std::string to_json(Program const &p);

} // namespace clsem

#endif // CLSEM_SYNTAX_HH
