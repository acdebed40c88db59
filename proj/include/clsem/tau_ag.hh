// clsem : a semantics workbench for logic programs with conditional literals
// Copyright (c) 2026 clsem authors. MIT license (see LICENSE).

#ifndef CLSEM_TAU_AG_HH
#define CLSEM_TAU_AG_HH

#include <clsem/common.hh>
#include <clsem/infinitary.hh>
#include <clsem/syntax.hh>

namespace clsem {

// Direct translation of programs to propositional formulas: rules are
// instantiated over a finite universe of precomputed terms and the closed
// instances map to implications, with conditional literals expanding to
// conjunctions over all substitutions of their local variables.

//! A closed copy of a rule together with the substitution that produced it.
struct RuleInstance {
    Rule rule;
    std::vector<std::pair<std::string, PrecomputedTerm>> substitution;
};

//! One instance per tuple of universe elements over the rule's global
//! variables (in first-occurrence order, last position varying fastest).
//! Rules without global variables yield exactly one instance.
std::vector<RuleInstance> instances(Rule const &r, std::vector<PrecomputedTerm> const &universe,
                                    Limits const &lim = {});

//! Translation of a closed body element:
//!   - falsum maps to bottom;
//!   - an atom p(t) becomes the disjunction of p(r) over the values r of t,
//!     with one or two negations inside the disjunction for "not"/"not not";
//!   - a comparison becomes top when some pair of values satisfies the
//!     relation and bottom otherwise;
//!   - a conditional literal H : L becomes the conjunction, over all tuples
//!     r of universe elements for its variables x, of
//!     translation(L[x->r]) -> translation(H[x->r]); with no conditions the
//!     element is just the translation of its head.
InfFormulaPtr tau_closed(ConditionalLiteral const &e, std::vector<PrecomputedTerm> const &universe,
                         Limits const &lim = {});

//! Translation of one closed rule:
//!   - basic:      body -> conjunction of p(r) over the head-tuple values
//!   - choice:     body -> conjunction of (p(r) or not p(r))
//!   - constraint: not body
InfFormulaPtr tau_closed_rule(Rule const &rho, std::vector<PrecomputedTerm> const &universe,
                              Limits const &lim = {});

//! Translation of an arbitrary rule: the conjunction of the translations of
//! all its instances. Implemented by substituting at the element level while
//! translating, which the test suite cross-checks against the
//! instances() + tau_closed_rule composition.
InfFormulaPtr tau_rule(Rule const &r, std::vector<PrecomputedTerm> const &universe,
                       Limits const &lim = {});

//! The set of rule translations, sorted and deduplicated canonically.
std::vector<InfFormulaPtr> tau_program(Program const &p,
                                       std::vector<PrecomputedTerm> const &universe,
                                       Limits const &lim = {});

} // namespace clsem

#endif // CLSEM_TAU_AG_HH
