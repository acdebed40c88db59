// clsem : a semantics workbench for logic programs with conditional literals
// Copyright (c) 2026 clsem authors. MIT license (see LICENSE).

#ifndef CLSEM_SEMANTICS_HH
#define CLSEM_SEMANTICS_HH

#include <clsem/fol.hh>
#include <clsem/grounder.hh>
#include <clsem/infinitary.hh>
#include <clsem/syntax.hh>
#include <clsem/tau_star.hh>

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace clsem {

// Whole-program semantics over a bounded universe. Answer sets are computed
// two independent ways -- by grounding the first-order translation of the
// program, and by direct propositional instantiation -- and a verifier checks
// the two routes against each other on every here-and-there interpretation
// over the shared atom base.

//! Every atom formable from a program predicate and universe elements, in
//! canonical order. Models of the program at this bound are subsets of this
//! base; atoms outside it (arithmetic beyond the bound) are false throughout.
//! Throws RefusalError when the base would exceed limits.instance_cap.
std::vector<GroundAtom> atom_base(Program const &p, StandardInterpretation const &interp,
                                  Limits const &lim = {});

//! Overapproximation of the atoms that occur in some stable model: the least
//! set closed under "a sentence whose antecedent may hold drives the atoms in
//! consequent position". Negations count as both possibly true and possibly
//! false, so choice shapes support themselves. Sound only when no antecedent
//! nests implications more than two deep (negations aside) -- the shapes both
//! translation routes produce; deeper theories get nullopt and callers fall
//! back to the full base.
std::optional<std::set<GroundAtom>> possible_atoms(std::vector<InfFormulaPtr> const &fs);

//! Stable models of the grounded first-order translation of p, relative to
//! the universe drawn from the program and limits. Grounding runs under the
//! partition that minimizes every program predicate, so the interpretation's
//! own atoms are irrelevant and the result depends only on the program and
//! the limits. Models are sorted lexicographically as atom sets.
std::vector<AtomSet> answer_sets(Program const &p, Limits const &lim = {});

//! Stable models of the direct propositional translation of p over the same
//! universe and atom base. Agreement with answer_sets is the correspondence
//! the verifier certifies.
std::vector<AtomSet> gringo_answer_sets(Program const &p, Limits const &lim = {});

//! Stable models when only the given predicates are minimized and the rest
//! are fixed by an explicit extension: grounding resolves extensional atoms
//! against the extension, equilibrium search runs over the intensional part
//! of the base, and the extension joins each model. The extension must use
//! extensional predicates of the program and universe elements only.
std::vector<AtomSet> p_answer_sets_for(Program const &p, std::set<Predicate> const &intensional,
                                       AtomSet const &extension, Limits const &lim = {});

//! p_answer_sets_for summed over every extension of the extensional
//! predicates drawn from the atom base. With every predicate intensional
//! this equals answer_sets exactly.
std::vector<AtomSet> p_answer_sets(Program const &p, std::set<Predicate> const &intensional,
                                   Limits const &lim = {});

//! Outcome of checking the two translation routes against each other.
struct EquivalenceReport {
    enum class Verdict { equivalent, counterexample, refused };

    std::string program_id;
    std::int64_t int_bound = 0;
    std::size_t base_size = 0;
    Verdict verdict = Verdict::refused;
    //! present iff the verdict is counterexample: an interpretation the two
    //! theories disagree on, or -- when only the model cross-check failed --
    //! a total interpretation that is stable under exactly one route
    std::optional<HTWitness> witness;
    bool ht_checked = false;     //!< the full here-and-there sweep ran
    bool models_checked = false; //!< both model enumerations ran
    bool models_agree = false;   //!< meaningful only when models_checked
    std::string note;            //!< refusal reasons, grounding diagnostics
    double seconds = 0.0;
};

//! Grounds the first-order translation, translates directly, and checks the
//! two against each other: a here-and-there sweep over the full atom base
//! plus a cross-check of the enumerated stable models. The verdict is
//! equivalent only when the sweep ran and both checks agree; limit overruns
//! downgrade it to refused (with the sizes in the note) rather than throwing.
//! The options hook admits deliberately weakened translations so tests can
//! confirm a counterexample is found.
EquivalenceReport verify_equivalence(Program const &p, Limits const &lim = {},
                                     std::string program_id = "",
                                     TauStarOptions const &opt = {});

//! Multi-line "key: value" text; timing is optional so output can be
//! byte-reproducible across runs.
std::string render(EquivalenceReport const &r, bool with_timing = true);
//! Single-line JSON, schema "clsem-verify-1".
std::string to_json(EquivalenceReport const &r, bool with_timing = true);

} // namespace clsem

#endif // CLSEM_SEMANTICS_HH
