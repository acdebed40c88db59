// clsem : a semantics workbench for logic programs with conditional literals
// Copyright (c) 2026 clsem authors. MIT license (see LICENSE).

#ifndef CLSEM_GROUNDER_HH
#define CLSEM_GROUNDER_HH

#include <clsem/fol.hh>
#include <clsem/infinitary.hh>

namespace clsem {

// ---------------------------------------------------------------------------
// predicate partitions

//! Splits the predicate symbols of a signature into intensional symbols,
//! whose atoms survive grounding, and extensional symbols, whose atoms are
//! decided by the interpretation and replaced with verum/falsum. Comparison
//! symbols are always treated extensionally and need not be listed.
struct PredicatePartition {
    std::set<Predicate> intensional;
    std::set<Predicate> extensional;

    bool is_intensional(Predicate const &p) const;
};

//! The standard partition of a program: every predicate symbol occurring in
//! the program is intensional; only comparisons remain extensional.
PredicatePartition standard_partition(Program const &p);

// ---------------------------------------------------------------------------
// grounding

//! Maps a closed two-sorted sentence to an infinitary propositional formula
//! over the interpretation's universe:
//!   - falsum stays falsum;
//!   - an atom over an intensional predicate becomes the propositional atom
//!     whose arguments are the exactly evaluated argument terms;
//!   - an atom over an extensional predicate becomes verum or falsum
//!     according to the interpretation, and comparisons become verum or
//!     falsum by evaluating both sides;
//!   - conjunction, disjunction and implication map homomorphically (in
//!     particular the image of a negation is the negation of the image);
//!   - an integer-sorted quantifier expands over the universe's numerals and
//!     a program-sorted quantifier over the whole universe, existentials as
//!     disjunctions and universals as conjunctions.
//!
//! Arguments that evaluate outside the bounded universe still form atoms
//! (such atoms are then absent from every candidate model's base); each one
//! is flagged in diag. Throws RefusalError when the accumulated quantifier
//! expansion exceeds limits.instance_cap, and std::invalid_argument if f is
//! not closed.
InfFormulaPtr ground_formula(StandardInterpretation const &interp, PredicatePartition const &part,
                             FOFormulaPtr const &f, Limits const &limits = {}, Diagnostics *diag = nullptr);

//! Grounds every sentence of the theory; the result is a canonical set
//! (sorted, duplicates removed) whose conjunction is meant downstream.
std::vector<InfFormulaPtr> ground_theory(StandardInterpretation const &interp, PredicatePartition const &part,
                                         FOTheory const &theory, Limits const &limits = {},
                                         Diagnostics *diag = nullptr);

} // namespace clsem

#endif // CLSEM_GROUNDER_HH
