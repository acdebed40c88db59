// clsem : a semantics workbench for logic programs with conditional literals
// Copyright (c) 2026 clsem authors. MIT license (see LICENSE).

#ifndef CLSEM_TAU_STAR_HH
#define CLSEM_TAU_STAR_HH

#include <clsem/fol.hh>
#include <clsem/syntax.hh>
#include <clsem/values.hh>

namespace clsem {

//! Switches that weaken the translation in deliberately wrong ways. The
//! defaults give the faithful translation; tests flip them to confirm the
//! equivalence machinery catches the difference.
struct TauStarOptions {
    //! choice-rule heads carry a double-negation conjunct
    bool choice_double_negation = true;
    //! a conditional literal's local variables are universally quantified
    bool conditional_universal = true;
};

//! Per-rule translation context: which variables are global, and which names
//! are taken (every variable of the rule, so generated names never collide).
struct GlobalContext {
    std::vector<std::string> z_vars;
    std::set<std::string> avoid;
};

GlobalContext make_context(Rule const &r);

//! Body-element translation:
//!   - #false maps to falsum;
//!   - an atom p(t1,...,tk) becomes exists Z .. Zk-1 (val conjuncts and the
//!     atom over those variables), with one or two negations applied inside
//!     for "not" and "not not"; arity 0 needs no quantifier;
//!   - t1 rel t2 becomes exists Z1 Z2 (val conjuncts and Z1 rel Z2);
//!   - a conditional literal H : L1,...,Lm becomes
//!     forall X (translation(L) -> translation(H)) where X are the literal's
//!     variables that are not global; with no conditions it is just the
//!     translation of H.
FOFormulaPtr tau_b(ConditionalLiteral const &e, GlobalContext const &ctx, TauStarOptions const &opt = {});

//! Rule translation, universally closed over fresh head variables V1..Vk
//! followed by the rule's global variables:
//!   - basic:      forall (val conjuncts and body -> p(V))
//!   - choice:     the same with an extra "not not p(V)" conjunct
//!   - constraint: forall (body -> falsum)
//! Facts over arity-0 heads reduce to the bare atom.
FOFormulaPtr tau_star_rule(Rule const &r, TauStarOptions const &opt = {});

//! One sentence per rule, source order preserved.
FOTheory tau_star_program(Program const &p, TauStarOptions const &opt = {});

} // namespace clsem

#endif // CLSEM_TAU_STAR_HH
