// clsem : a semantics workbench for logic programs with conditional literals
// Copyright (c) 2026 clsem authors. MIT license (see LICENSE).

#include <clsem/semantics.hh>

#include <clsem/tau_ag.hh>

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace clsem {

namespace {

using json = nlohmann::json;

//! deepest chain of non-negation implications reachable through antecedents;
//! the possible-atoms closure is proven sound only up to depth two
int left_depth(InfFormulaPtr const &f, std::unordered_map<InfFormula const *, int> &memo) {
    if (auto it = memo.find(f.get()); it != memo.end()) { return it->second; }
    int d = std::visit(
        [&memo](auto const &v) -> int {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, InfAtom>) { return 0; }
            else if constexpr (std::is_same_v<T, InfConj> || std::is_same_v<T, InfDisj>) {
                int deepest = 0;
                for (auto const &part : v.parts) {
                    deepest = std::max(deepest, left_depth(part, memo));
                }
                return deepest;
            }
            else {
                if (v.rhs->key == inf_bot()->key) { return 0; }
                return std::max(1 + left_depth(v.lhs, memo), left_depth(v.rhs, memo));
            }
        },
        f->data);
    memo.emplace(f.get(), d);
    return d;
}

//! three-valued reading against a candidate atom set: atoms outside u are
//! false, atoms inside are unknown, negations are unconstrained either way
class Possibility {
  public:
    explicit Possibility(std::set<GroundAtom> const &u) : u_{u} {}

    bool possibly_true(InfFormulaPtr const &f) {
        if (auto it = pt_.find(f.get()); it != pt_.end()) { return it->second; }
        bool r = std::visit(
            [this](auto const &v) -> bool {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, InfAtom>) { return u_.count(v.atom) > 0; }
                else if constexpr (std::is_same_v<T, InfConj>) {
                    return std::all_of(v.parts.begin(), v.parts.end(),
                                       [this](auto const &p) { return possibly_true(p); });
                }
                else if constexpr (std::is_same_v<T, InfDisj>) {
                    return std::any_of(v.parts.begin(), v.parts.end(),
                                       [this](auto const &p) { return possibly_true(p); });
                }
                else {
                    if (v.rhs->key == inf_bot()->key) { return true; }
                    return possibly_false(v.lhs) || possibly_true(v.rhs);
                }
            },
            f->data);
        pt_.emplace(f.get(), r);
        return r;
    }

    bool possibly_false(InfFormulaPtr const &f) {
        if (auto it = pf_.find(f.get()); it != pf_.end()) { return it->second; }
        bool r = std::visit(
            [this](auto const &v) -> bool {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, InfAtom>) { return true; }
                else if constexpr (std::is_same_v<T, InfConj>) {
                    return std::any_of(v.parts.begin(), v.parts.end(),
                                       [this](auto const &p) { return possibly_false(p); });
                }
                else if constexpr (std::is_same_v<T, InfDisj>) {
                    return std::all_of(v.parts.begin(), v.parts.end(),
                                       [this](auto const &p) { return possibly_false(p); });
                }
                else {
                    if (v.rhs->key == inf_bot()->key) { return true; }
                    return possibly_true(v.lhs) && possibly_false(v.rhs);
                }
            },
            f->data);
        pf_.emplace(f.get(), r);
        return r;
    }

  private:
    std::set<GroundAtom> const &u_;
    std::unordered_map<InfFormula const *, bool> pt_;
    std::unordered_map<InfFormula const *, bool> pf_;
};

//! add every atom in consequent position whose guarding antecedents may hold
void drive(InfFormulaPtr const &f, Possibility &pos, std::set<GroundAtom> &next,
           std::unordered_set<InfFormula const *> &seen) {
    if (!seen.insert(f.get()).second) { return; }
    std::visit(
        [&](auto const &v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, InfAtom>) { next.insert(v.atom); }
            else if constexpr (std::is_same_v<T, InfConj> || std::is_same_v<T, InfDisj>) {
                for (auto const &part : v.parts) { drive(part, pos, next, seen); }
            }
            else {
                if (v.rhs->key != inf_bot()->key && pos.possibly_true(v.lhs)) {
                    drive(v.rhs, pos, next, seen);
                }
            }
        },
        f->data);
}

//! enumeration base restricted to atoms some rule can actually drive; falls
//! back to the full base when the theory shape defeats the analysis
std::vector<GroundAtom> effective_base(std::vector<InfFormulaPtr> const &theory,
                                       std::vector<GroundAtom> const &base) {
    auto possible = possible_atoms(theory);
    if (!possible) { return base; }
    std::vector<GroundAtom> eff;
    eff.reserve(possible->size());
    for (auto const &a : base) {
        if (possible->count(a) > 0) { eff.push_back(a); }
    }
    return eff;
}

//! stable models over the prunable part of the base, sorted lexicographically
std::vector<AtomSet> enumerate_models(std::vector<InfFormulaPtr> const &theory,
                                      std::vector<GroundAtom> const &base, Limits const &lim) {
    auto models = stable_models(theory, effective_base(theory, base), lim);
    std::sort(models.begin(), models.end());
    return models;
}

Predicate predicate_of(GroundAtom const &a) {
    return Predicate{a.predicate, static_cast<int>(a.args.size())};
}

void check_intensional(std::set<Predicate> const &intensional, std::set<Predicate> const &preds) {
    for (auto const &q : intensional) {
        if (preds.count(q) == 0) {
            throw std::invalid_argument("intensional predicate " + q.name + "/" +
                                        std::to_string(q.arity) + " does not occur in the program");
        }
    }
}

PredicatePartition make_partition(std::set<Predicate> const &intensional,
                                  std::set<Predicate> const &preds) {
    PredicatePartition part;
    part.intensional = intensional;
    for (auto const &q : preds) {
        if (intensional.count(q) == 0) { part.extensional.insert(q); }
    }
    return part;
}

//! grounds the program's first-order translation for one extensional
//! extension and enumerates equilibrium models over the intensional atoms
std::vector<AtomSet> models_under_extension(FOTheory const &theory, Program const &p,
                                            PredicatePartition const &part,
                                            std::vector<GroundAtom> const &intensional_base,
                                            AtomSet const &extension, Limits const &lim) {
    auto interp = make_standard_interpretation(p, lim, extension);
    auto ground = ground_theory(interp, part, theory, lim);
    auto models = enumerate_models(ground, intensional_base, lim);
    for (auto &m : models) { m.insert(extension.begin(), extension.end()); }
    std::sort(models.begin(), models.end());
    return models;
}

void append_note(std::string &note, std::string const &msg) {
    if (!note.empty()) { note += "; "; }
    note += msg;
}

char const *verdict_name(EquivalenceReport::Verdict v) {
    switch (v) {
        case EquivalenceReport::Verdict::equivalent: return "equivalent";
        case EquivalenceReport::Verdict::counterexample: return "counterexample";
        default: return "refused";
    }
}

} // namespace

std::vector<GroundAtom> atom_base(Program const &p, StandardInterpretation const &interp,
                                  Limits const &lim) {
    auto preds = program_predicates(p);
    unsigned __int128 total = 0;
    for (auto const &pred : preds) {
        unsigned __int128 combos = 1;
        for (int i = 0; i < pred.arity && combos <= lim.instance_cap; ++i) {
            combos *= interp.universe.size();
        }
        total += combos;
        if (total > lim.instance_cap) {
            auto clamped = total > UINT64_MAX ? UINT64_MAX : static_cast<std::uint64_t>(total);
            throw RefusalError("atom base too large", clamped, lim.instance_cap);
        }
    }
    std::set<GroundAtom> out;
    std::vector<PrecomputedTerm> args;
    for (auto const &pred : preds) {
        auto enumerate = [&](auto &&self, int remaining) -> void {
            if (remaining == 0) {
                out.insert(GroundAtom{pred.name, args});
                return;
            }
            for (auto const &u : interp.universe) {
                args.push_back(u);
                self(self, remaining - 1);
                args.pop_back();
            }
        };
        enumerate(enumerate, pred.arity);
    }
    return {out.begin(), out.end()};
}

std::optional<std::set<GroundAtom>> possible_atoms(std::vector<InfFormulaPtr> const &fs) {
    {
        std::unordered_map<InfFormula const *, int> memo;
        for (auto const &f : fs) {
            if (left_depth(f, memo) > 2) { return std::nullopt; }
        }
    }
    std::set<GroundAtom> u;
    for (;;) {
        Possibility pos(u);
        std::set<GroundAtom> next = u;
        std::unordered_set<InfFormula const *> seen;
        for (auto const &f : fs) { drive(f, pos, next, seen); }
        if (next.size() == u.size()) { return next; }
        u = std::move(next);
    }
}

std::vector<AtomSet> answer_sets(Program const &p, Limits const &lim) {
    auto interp = make_standard_interpretation(p, lim);
    auto ground = ground_theory(interp, standard_partition(p), tau_star_program(p), lim);
    return enumerate_models(ground, atom_base(p, interp, lim), lim);
}

std::vector<AtomSet> gringo_answer_sets(Program const &p, Limits const &lim) {
    auto interp = make_standard_interpretation(p, lim);
    auto direct = tau_program(p, interp.universe, lim);
    return enumerate_models(direct, atom_base(p, interp, lim), lim);
}

std::vector<AtomSet> p_answer_sets_for(Program const &p, std::set<Predicate> const &intensional,
                                       AtomSet const &extension, Limits const &lim) {
    auto preds = program_predicates(p);
    check_intensional(intensional, preds);
    auto part = make_partition(intensional, preds);
    auto interp = make_standard_interpretation(p, lim);
    for (auto const &a : extension) {
        if (part.is_intensional(predicate_of(a))) {
            throw std::invalid_argument("extension atom " + render(a) +
                                        " uses an intensional predicate");
        }
        for (auto const &arg : a.args) {
            if (!interp.in_universe(arg)) {
                throw std::invalid_argument("extension atom " + render(a) +
                                            " mentions " + render(arg) +
                                            ", which is outside the universe");
            }
        }
    }
    std::vector<GroundAtom> intensional_base;
    for (auto const &a : atom_base(p, interp, lim)) {
        if (part.is_intensional(predicate_of(a))) { intensional_base.push_back(a); }
    }
    return models_under_extension(tau_star_program(p), p, part, intensional_base, extension, lim);
}

std::vector<AtomSet> p_answer_sets(Program const &p, std::set<Predicate> const &intensional,
                                   Limits const &lim) {
    auto preds = program_predicates(p);
    check_intensional(intensional, preds);
    auto part = make_partition(intensional, preds);
    auto interp = make_standard_interpretation(p, lim);
    std::vector<GroundAtom> intensional_base;
    std::vector<GroundAtom> extensional_atoms;
    for (auto const &a : atom_base(p, interp, lim)) {
        (part.is_intensional(predicate_of(a)) ? intensional_base : extensional_atoms).push_back(a);
    }
    if (extensional_atoms.size() > lim.stable_base_limit) {
        throw RefusalError("extension sweep over too many atoms", extensional_atoms.size(),
                           lim.stable_base_limit);
    }
    auto theory = tau_star_program(p);
    std::vector<AtomSet> out;
    std::uint64_t count = std::uint64_t{1} << extensional_atoms.size();
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        AtomSet extension;
        for (std::size_t bit = 0; bit < extensional_atoms.size(); ++bit) {
            if (mask & (std::uint64_t{1} << bit)) { extension.insert(extensional_atoms[bit]); }
        }
        auto models = models_under_extension(theory, p, part, intensional_base, extension, lim);
        out.insert(out.end(), models.begin(), models.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

EquivalenceReport verify_equivalence(Program const &p, Limits const &lim, std::string program_id,
                                     TauStarOptions const &opt) {
    auto start = std::chrono::steady_clock::now();
    using Verdict = EquivalenceReport::Verdict;
    EquivalenceReport rep;
    rep.program_id = std::move(program_id);
    rep.int_bound = lim.int_bound;
    bool ht_ok = false;
    try {
        auto interp = make_standard_interpretation(p, lim);
        auto base = atom_base(p, interp, lim);
        rep.base_size = base.size();
        Diagnostics diag;
        auto ground = ground_theory(interp, standard_partition(p), tau_star_program(p, opt), lim,
                                    &diag);
        auto direct = tau_program(p, interp.universe, lim);
        if (!diag.empty()) {
            append_note(rep.note, std::to_string(diag.notes.size()) +
                                      " grounding notes, first: " + diag.notes.front());
        }
        std::size_t stray = 0;
        for (auto const &a : collect_atoms(ground)) {
            if (!std::binary_search(base.begin(), base.end(), a)) { ++stray; }
        }
        for (auto const &a : collect_atoms(direct)) {
            if (!std::binary_search(base.begin(), base.end(), a)) { ++stray; }
        }
        if (stray > 0) {
            append_note(rep.note, std::to_string(stray) +
                                      " atoms fall outside the atom base and are false "
                                      "throughout; the universe bound does not cover the "
                                      "program's arithmetic");
        }
        try {
            auto outcome = ht_equivalent(ground, direct, base, lim);
            rep.ht_checked = true;
            ht_ok = outcome.equivalent;
            if (!outcome.equivalent) { rep.witness = outcome.witness; }
        } catch (RefusalError const &e) { append_note(rep.note, e.what()); }
        try {
            auto a = enumerate_models(ground, base, lim);
            auto b = enumerate_models(direct, base, lim);
            rep.models_checked = true;
            rep.models_agree = a == b;
            if (!rep.models_agree && !rep.witness) {
                std::vector<AtomSet> diff;
                std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                              std::back_inserter(diff));
                rep.witness = HTWitness{diff.front(), diff.front()};
            }
        } catch (RefusalError const &e) { append_note(rep.note, e.what()); }
        if ((rep.ht_checked && !ht_ok) || (rep.models_checked && !rep.models_agree)) {
            rep.verdict = Verdict::counterexample;
        }
        else if (rep.ht_checked) { rep.verdict = Verdict::equivalent; }
        else { rep.verdict = Verdict::refused; }
    } catch (RefusalError const &e) {
        append_note(rep.note, e.what());
        rep.verdict = Verdict::refused;
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

std::string render(EquivalenceReport const &r, bool with_timing) {
    std::ostringstream out;
    if (!r.program_id.empty()) { out << "program: " << r.program_id << "\n"; }
    out << "verdict: " << verdict_name(r.verdict) << "\n";
    out << "int bound: " << r.int_bound << "\n";
    out << "atom base: " << r.base_size << "\n";
    out << "ht sweep: " << (r.ht_checked ? "done" : "skipped") << "\n";
    out << "model cross-check: "
        << (r.models_checked ? (r.models_agree ? "agree" : "disagree") : "skipped") << "\n";
    if (r.witness) {
        out << "witness here: {" << render(r.witness->here) << "}\n";
        out << "witness there: {" << render(r.witness->there) << "}\n";
    }
    if (!r.note.empty()) { out << "note: " << r.note << "\n"; }
    if (with_timing) { out << "time: " << r.seconds << "s\n"; }
    return out.str();
}

std::string to_json(EquivalenceReport const &r, bool with_timing) {
    json j;
    j["schema"] = "clsem-verify-1";
    j["program"] = r.program_id;
    j["int_bound"] = r.int_bound;
    j["atom_base"] = r.base_size;
    j["verdict"] = verdict_name(r.verdict);
    j["ht_sweep"] = r.ht_checked;
    j["model_cross_check"] = r.models_checked;
    if (r.models_checked) { j["models_agree"] = r.models_agree; }
    if (r.witness) {
        json here = json::array();
        for (auto const &a : r.witness->here) { here.push_back(render(a)); }
        json there = json::array();
        for (auto const &a : r.witness->there) { there.push_back(render(a)); }
        j["witness"] = {{"here", here}, {"there", there}};
    }
    if (!r.note.empty()) { j["note"] = r.note; }
    if (with_timing) { j["seconds"] = r.seconds; }
    return j.dump();
}

} // namespace clsem
