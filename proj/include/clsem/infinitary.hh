// clsem : a semantics workbench for logic programs with conditional literals
// Copyright (c) 2026 clsem authors. MIT license (see LICENSE).

#ifndef CLSEM_INFINITARY_HH
#define CLSEM_INFINITARY_HH

#include <clsem/common.hh>
#include <clsem/syntax.hh>

#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <variant>

namespace clsem {

// Propositional formulas with set-valued conjunction and disjunction. The
// universes this tool works over are finite, so the sets are materialized.
// Conjunctions and disjunctions keep their members sorted and deduplicated by
// a canonical serialization (the key), which makes structural equality,
// ordering, and rendering reproducible.

struct InfFormula;
using InfFormulaPtr = std::shared_ptr<InfFormula const>;

struct InfAtom {
    GroundAtom atom;
};
struct InfConj {
    std::vector<InfFormulaPtr> parts;
};
struct InfDisj {
    std::vector<InfFormulaPtr> parts;
};
struct InfImplies {
    InfFormulaPtr lhs;
    InfFormulaPtr rhs;
};

struct InfFormula {
    std::variant<InfAtom, InfConj, InfDisj, InfImplies> data;
    //! canonical identifier: equal keys mean structurally equal formulas and
    //! key byte order fixes the canonical member order of set formers; small
    //! formulas inline their serialization, large ones carry a digest
    std::string key;
};

InfFormulaPtr inf_atom(GroundAtom a);
//! sorted, deduplicated; a singleton collapses to its only member
InfFormulaPtr inf_conj(std::vector<InfFormulaPtr> parts);
InfFormulaPtr inf_disj(std::vector<InfFormulaPtr> parts);
//! sorted, deduplicated, but singletons keep their wrapper
InfFormulaPtr inf_conj_raw(std::vector<InfFormulaPtr> parts);
InfFormulaPtr inf_disj_raw(std::vector<InfFormulaPtr> parts);
InfFormulaPtr inf_implies(InfFormulaPtr lhs, InfFormulaPtr rhs);
InfFormulaPtr inf_top();                //! empty conjunction
InfFormulaPtr inf_bot();                //! empty disjunction
InfFormulaPtr inf_not(InfFormulaPtr f); //! f -> bottom

bool inf_equal(InfFormulaPtr const &a, InfFormulaPtr const &b);

//! atoms rank 0; a set former adds one to the largest member rank (empty
//! sets rank 1); an implication adds one to the larger side
int rank(InfFormulaPtr const &f);

//! rendering with unicode connectives; sets print with braces
std::string render(InfFormulaPtr const &f);
std::string to_json(InfFormulaPtr const &f);

//! sorted atoms occurring in the formulas
std::vector<GroundAtom> collect_atoms(std::vector<InfFormulaPtr> const &fs);

// ---------------------------------------------------------------------------
// satisfaction

bool prop_satisfies(AtomSet const &s, InfFormulaPtr const &f);

//! a pair of interpretations, here a subset of there
struct HTInterpretation {
    AtomSet here;
    AtomSet there;
};

//! atoms read in the here world; an implication holds when the there world
//! satisfies it classically and the here-world conditional holds
bool ht_satisfies(HTInterpretation const &i, InfFormulaPtr const &f);

// ---------------------------------------------------------------------------
// model search (brute force by design: this is the oracle)

//! true iff s_prime satisfies fs classically and no proper subset survives
//! the here-world check against s_prime
bool is_equilibrium(AtomSet const &s_prime, std::vector<InfFormulaPtr> const &fs,
                    Limits const &lim = {});

//! all equilibrium models with atoms drawn from base, in canonical order
//! (subset bitmasks over the sorted base, ascending)
std::vector<AtomSet> stable_models(std::vector<InfFormulaPtr> const &fs,
                                   std::vector<GroundAtom> const &base,
                                   Limits const &lim = {});

struct HTWitness {
    AtomSet here;
    AtomSet there;
};

struct EquivalenceOutcome {
    bool equivalent = false;
    //! first interpretation (in scan order) satisfying one side only
    std::optional<HTWitness> witness;
};

//! sweeps every here-and-there interpretation over base (3^|base| of them)
//! and reports whether the two sets of formulas agree on all of them
EquivalenceOutcome ht_equivalent(std::vector<InfFormulaPtr> const &a,
                                 std::vector<InfFormulaPtr> const &b,
                                 std::vector<GroundAtom> const &base,
                                 Limits const &lim = {});

// ---------------------------------------------------------------------------
// bitmask evaluation engine used by the enumerators

//! formulas compiled against a fixed atom base so interpretations are
//! bitmasks; atoms outside the base are constantly false
class CompiledTheory {
  public:
    CompiledTheory(std::vector<InfFormulaPtr> const &fs, std::vector<GroundAtom> base);

    std::vector<GroundAtom> const &base() const { return base_; }
    size_t size() const { return roots_.size(); }

    bool prop_all(std::uint64_t mask) const;
    bool ht_all(std::uint64_t here, std::uint64_t there) const;

    AtomSet to_atoms(std::uint64_t mask) const;

  private:
    struct Node {
        enum class Kind : std::uint8_t { atom, conj, disj, implies };
        Kind kind;
        std::int32_t atom = -1; // bit index, or -1 for out-of-base atoms
        std::vector<std::uint32_t> children;
    };

    std::uint32_t compile(InfFormulaPtr const &f,
                          std::unordered_map<InfFormula const *, std::uint32_t> &memo);
    bool prop(std::uint32_t node, std::uint64_t mask) const;
    bool ht(std::uint32_t node, std::uint64_t here, std::uint64_t there) const;

    std::vector<GroundAtom> base_;
    std::vector<Node> nodes_;
    std::vector<std::uint32_t> roots_;
};

} // namespace clsem

#endif // CLSEM_INFINITARY_HH
