// clsem : a semantics workbench for logic programs with conditional literals
// Copyright (c) 2026 clsem authors. MIT license (see LICENSE).

#include <clsem/infinitary.hh>

#include <json.hpp>

#include <algorithm>
#include <thread>

namespace clsem {

namespace {

using json = nlohmann::json;

InfFormulaPtr make(std::variant<InfAtom, InfConj, InfDisj, InfImplies> data, std::string key) {
    return std::make_shared<InfFormula const>(InfFormula{std::move(data), std::move(key)});
}

void sort_dedup(std::vector<InfFormulaPtr> &parts) {
    std::sort(parts.begin(), parts.end(),
              [](InfFormulaPtr const &a, InfFormulaPtr const &b) { return a->key < b->key; });
    parts.erase(std::unique(parts.begin(), parts.end(),
                            [](InfFormulaPtr const &a, InfFormulaPtr const &b) {
                                return a->key == b->key;
                            }),
                parts.end());
}

// Keys inline the full serialization only up to this many bytes; past it they
// degrade to a fixed-width digest of the member keys. Formula graphs share
// subterms, so inlining everything would copy a subformula's text into every
// ancestor key — exponential in the worst case. The digest keeps the two key
// guarantees (equal keys = equal formulas, byte order = canonical set order)
// up to 128-bit hash collisions.
constexpr std::size_t key_inline_limit = 256;

struct KeyDigest {
    std::uint64_t lo = 0xcbf29ce484222325ull;
    std::uint64_t hi = 0x9e3779b97f4a7c15ull;

    void feed(char c) {
        auto byte = static_cast<unsigned char>(c);
        lo = (lo ^ byte) * 0x00000100000001b3ull; // FNV-1a
        hi = ((hi << 5) | (hi >> 59)) ^ byte;
        hi *= 0xff51afd7ed558ccdull;
    }
    void feed(std::string const &text) {
        for (char c : text) { feed(c); }
    }
    std::string hex() const {
        static char const *digits = "0123456789abcdef";
        std::string out;
        out.reserve(32);
        for (int i = 60; i >= 0; i -= 4) { out += digits[(hi >> i) & 0xf]; }
        for (int i = 60; i >= 0; i -= 4) { out += digits[(lo >> i) & 0xf]; }
        return out;
    }
};

std::string set_key(char tag, std::vector<InfFormulaPtr> const &parts) {
    std::size_t inline_size = 3;
    for (auto const &p : parts) { inline_size += p->key.size() + 1; }
    if (inline_size <= key_inline_limit) {
        std::string key;
        key += tag;
        key += '{';
        for (size_t i = 0; i < parts.size(); ++i) {
            if (i > 0) { key += ','; }
            key += parts[i]->key;
        }
        key += '}';
        return key;
    }
    KeyDigest digest;
    digest.feed(tag);
    digest.feed('{');
    for (auto const &p : parts) {
        digest.feed(p->key);
        digest.feed(',');
    }
    digest.feed('}');
    return "H{" + digest.hex() + "}";
}

std::string implies_key(std::string const &lhs, std::string const &rhs) {
    if (lhs.size() + rhs.size() + 4 <= key_inline_limit) { return "I(" + lhs + ";" + rhs + ")"; }
    KeyDigest digest;
    digest.feed('I');
    digest.feed('(');
    digest.feed(lhs);
    digest.feed(';');
    digest.feed(rhs);
    digest.feed(')');
    return "H{" + digest.hex() + "}";
}

} // namespace

InfFormulaPtr inf_atom(GroundAtom a) {
    std::string key = "a(" + render(a) + ")";
    return make(InfAtom{std::move(a)}, std::move(key));
}

InfFormulaPtr inf_conj_raw(std::vector<InfFormulaPtr> parts) {
    sort_dedup(parts);
    std::string key = set_key('C', parts);
    return make(InfConj{std::move(parts)}, std::move(key));
}

InfFormulaPtr inf_disj_raw(std::vector<InfFormulaPtr> parts) {
    sort_dedup(parts);
    std::string key = set_key('D', parts);
    return make(InfDisj{std::move(parts)}, std::move(key));
}

InfFormulaPtr inf_conj(std::vector<InfFormulaPtr> parts) {
    sort_dedup(parts);
    if (parts.size() == 1) { return parts.front(); }
    std::string key = set_key('C', parts);
    return make(InfConj{std::move(parts)}, std::move(key));
}

InfFormulaPtr inf_disj(std::vector<InfFormulaPtr> parts) {
    sort_dedup(parts);
    if (parts.size() == 1) { return parts.front(); }
    std::string key = set_key('D', parts);
    return make(InfDisj{std::move(parts)}, std::move(key));
}

InfFormulaPtr inf_implies(InfFormulaPtr lhs, InfFormulaPtr rhs) {
    std::string key = implies_key(lhs->key, rhs->key);
    return make(InfImplies{std::move(lhs), std::move(rhs)}, std::move(key));
}

InfFormulaPtr inf_top() { return inf_conj({}); }

InfFormulaPtr inf_bot() { return inf_disj({}); }

InfFormulaPtr inf_not(InfFormulaPtr f) { return inf_implies(std::move(f), inf_bot()); }

bool inf_equal(InfFormulaPtr const &a, InfFormulaPtr const &b) { return a->key == b->key; }

namespace {

int rank_memo(InfFormulaPtr const &f, std::unordered_map<InfFormula const *, int> &memo) {
    auto it = memo.find(f.get());
    if (it != memo.end()) { return it->second; }
    int r = std::visit(
        [&memo](auto const &v) -> int {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, InfAtom>) {
                return 0;
            }
            else if constexpr (std::is_same_v<T, InfConj> || std::is_same_v<T, InfDisj>) {
                int worst = 0;
                for (auto const &p : v.parts) { worst = std::max(worst, rank_memo(p, memo)); }
                return 1 + worst;
            }
            else {
                return 1 + std::max(rank_memo(v.lhs, memo), rank_memo(v.rhs, memo));
            }
        },
        f->data);
    memo.emplace(f.get(), r);
    return r;
}

std::string render_rec(InfFormulaPtr const &f) {
    return std::visit(
        [](auto const &v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, InfAtom>) {
                return render(v.atom);
            }
            else if constexpr (std::is_same_v<T, InfConj> || std::is_same_v<T, InfDisj>) {
                if (v.parts.empty()) { return std::is_same_v<T, InfConj> ? "⊤" : "⊥"; }
                std::string out = std::is_same_v<T, InfConj> ? "∧{" : "∨{";
                for (size_t i = 0; i < v.parts.size(); ++i) {
                    if (i > 0) { out += ", "; }
                    out += render_rec(v.parts[i]);
                }
                return out + "}";
            }
            else {
                bool negation = std::holds_alternative<InfDisj>(v.rhs->data) &&
                                std::get<InfDisj>(v.rhs->data).parts.empty();
                if (negation) {
                    // implications parenthesize themselves, so "¬" composes
                    return "¬" + render_rec(v.lhs);
                }
                return "(" + render_rec(v.lhs) + " → " + render_rec(v.rhs) + ")";
            }
        },
        f->data);
}

json json_rec(InfFormulaPtr const &f) {
    return std::visit(
        [](auto const &v) -> json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, InfAtom>) {
                return {{"type", "atom"}, {"atom", render(v.atom)}};
            }
            else if constexpr (std::is_same_v<T, InfConj> || std::is_same_v<T, InfDisj>) {
                json parts = json::array();
                for (auto const &p : v.parts) { parts.push_back(json_rec(p)); }
                return {{"type", std::is_same_v<T, InfConj> ? "conj" : "disj"},
                        {"parts", parts}};
            }
            else {
                return {{"type", "implies"}, {"lhs", json_rec(v.lhs)}, {"rhs", json_rec(v.rhs)}};
            }
        },
        f->data);
}

void collect_atoms_rec(InfFormulaPtr const &f, std::set<GroundAtom> &out) {
    std::visit(
        [&out](auto const &v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, InfAtom>) {
                out.insert(v.atom);
            }
            else if constexpr (std::is_same_v<T, InfConj> || std::is_same_v<T, InfDisj>) {
                for (auto const &p : v.parts) { collect_atoms_rec(p, out); }
            }
            else {
                collect_atoms_rec(v.lhs, out);
                collect_atoms_rec(v.rhs, out);
            }
        },
        f->data);
}

} // namespace

int rank(InfFormulaPtr const &f) {
    std::unordered_map<InfFormula const *, int> memo;
    return rank_memo(f, memo);
}

std::string render(InfFormulaPtr const &f) { return render_rec(f); }

std::string to_json(InfFormulaPtr const &f) { return json_rec(f).dump(); }

std::vector<GroundAtom> collect_atoms(std::vector<InfFormulaPtr> const &fs) {
    std::set<GroundAtom> seen;
    for (auto const &f : fs) { collect_atoms_rec(f, seen); }
    return {seen.begin(), seen.end()};
}

bool prop_satisfies(AtomSet const &s, InfFormulaPtr const &f) {
    return std::visit(
        [&s](auto const &v) -> bool {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, InfAtom>) {
                return s.find(v.atom) != s.end();
            }
            else if constexpr (std::is_same_v<T, InfConj>) {
                return std::all_of(v.parts.begin(), v.parts.end(),
                                   [&s](InfFormulaPtr const &p) { return prop_satisfies(s, p); });
            }
            else if constexpr (std::is_same_v<T, InfDisj>) {
                return std::any_of(v.parts.begin(), v.parts.end(),
                                   [&s](InfFormulaPtr const &p) { return prop_satisfies(s, p); });
            }
            else {
                return !prop_satisfies(s, v.lhs) || prop_satisfies(s, v.rhs);
            }
        },
        f->data);
}

bool ht_satisfies(HTInterpretation const &i, InfFormulaPtr const &f) {
    return std::visit(
        [&i, &f](auto const &v) -> bool {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, InfAtom>) {
                return i.here.find(v.atom) != i.here.end();
            }
            else if constexpr (std::is_same_v<T, InfConj>) {
                return std::all_of(v.parts.begin(), v.parts.end(),
                                   [&i](InfFormulaPtr const &p) { return ht_satisfies(i, p); });
            }
            else if constexpr (std::is_same_v<T, InfDisj>) {
                return std::any_of(v.parts.begin(), v.parts.end(),
                                   [&i](InfFormulaPtr const &p) { return ht_satisfies(i, p); });
            }
            else {
                return prop_satisfies(i.there, f) &&
                       (!ht_satisfies(i, v.lhs) || ht_satisfies(i, v.rhs));
            }
        },
        f->data);
}

// ---------------------------------------------------------------------------
// compiled evaluation

CompiledTheory::CompiledTheory(std::vector<InfFormulaPtr> const &fs, std::vector<GroundAtom> base)
    : base_(std::move(base)) {
    std::sort(base_.begin(), base_.end());
    base_.erase(std::unique(base_.begin(), base_.end()), base_.end());
    std::unordered_map<InfFormula const *, std::uint32_t> memo;
    roots_.reserve(fs.size());
    for (auto const &f : fs) { roots_.push_back(compile(f, memo)); }
}

std::uint32_t CompiledTheory::compile(InfFormulaPtr const &f,
                                      std::unordered_map<InfFormula const *, std::uint32_t> &memo) {
    auto it = memo.find(f.get());
    if (it != memo.end()) { return it->second; }
    Node node = std::visit(
        [this, &memo](auto const &v) -> Node {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, InfAtom>) {
                auto pos = std::lower_bound(base_.begin(), base_.end(), v.atom);
                std::int32_t index = -1;
                if (pos != base_.end() && *pos == v.atom) {
                    index = static_cast<std::int32_t>(pos - base_.begin());
                }
                return Node{Node::Kind::atom, index, {}};
            }
            else if constexpr (std::is_same_v<T, InfConj> || std::is_same_v<T, InfDisj>) {
                Node n{std::is_same_v<T, InfConj> ? Node::Kind::conj : Node::Kind::disj, -1, {}};
                n.children.reserve(v.parts.size());
                for (auto const &p : v.parts) { n.children.push_back(compile(p, memo)); }
                return n;
            }
            else {
                Node n{Node::Kind::implies, -1, {}};
                n.children.push_back(compile(v.lhs, memo));
                n.children.push_back(compile(v.rhs, memo));
                return n;
            }
        },
        f->data);
    nodes_.push_back(std::move(node));
    auto id = static_cast<std::uint32_t>(nodes_.size() - 1);
    memo.emplace(f.get(), id);
    return id;
}

bool CompiledTheory::prop(std::uint32_t node, std::uint64_t mask) const {
    Node const &n = nodes_[node];
    switch (n.kind) {
        case Node::Kind::atom:
            return n.atom >= 0 && ((mask >> n.atom) & 1u) != 0;
        case Node::Kind::conj:
            for (auto c : n.children) {
                if (!prop(c, mask)) { return false; }
            }
            return true;
        case Node::Kind::disj:
            for (auto c : n.children) {
                if (prop(c, mask)) { return true; }
            }
            return false;
        case Node::Kind::implies:
            return !prop(n.children[0], mask) || prop(n.children[1], mask);
    }
    return false;
}

bool CompiledTheory::ht(std::uint32_t node, std::uint64_t here, std::uint64_t there) const {
    Node const &n = nodes_[node];
    switch (n.kind) {
        case Node::Kind::atom:
            return n.atom >= 0 && ((here >> n.atom) & 1u) != 0;
        case Node::Kind::conj:
            for (auto c : n.children) {
                if (!ht(c, here, there)) { return false; }
            }
            return true;
        case Node::Kind::disj:
            for (auto c : n.children) {
                if (ht(c, here, there)) { return true; }
            }
            return false;
        case Node::Kind::implies:
            return prop(node, there) &&
                   (!ht(n.children[0], here, there) || ht(n.children[1], here, there));
    }
    return false;
}

bool CompiledTheory::prop_all(std::uint64_t mask) const {
    for (auto r : roots_) {
        if (!prop(r, mask)) { return false; }
    }
    return true;
}

bool CompiledTheory::ht_all(std::uint64_t here, std::uint64_t there) const {
    for (auto r : roots_) {
        if (!ht(r, here, there)) { return false; }
    }
    return true;
}

AtomSet CompiledTheory::to_atoms(std::uint64_t mask) const {
    AtomSet out;
    for (size_t i = 0; i < base_.size(); ++i) {
        if ((mask >> i) & 1u) { out.insert(base_[i]); }
    }
    return out;
}

// ---------------------------------------------------------------------------
// enumeration

namespace {

//! true iff no proper submask of s_prime ht-satisfies the theory
bool no_smaller_here_model(CompiledTheory const &ct, std::uint64_t s_prime) {
    std::uint64_t sub = s_prime;
    while (sub != 0) {
        sub = (sub - 1) & s_prime;
        if (ct.ht_all(sub, s_prime)) { return false; }
        if (sub == 0) { break; }
    }
    return true;
}

size_t worker_count(std::uint64_t jobs) {
    size_t hw = std::thread::hardware_concurrency();
    if (hw == 0) { hw = 1; }
    return static_cast<size_t>(std::min<std::uint64_t>(hw, std::max<std::uint64_t>(jobs, 1)));
}

} // namespace

bool is_equilibrium(AtomSet const &s_prime, std::vector<InfFormulaPtr> const &fs,
                    Limits const &lim) {
    if (s_prime.size() > static_cast<size_t>(lim.stable_base_limit)) {
        throw RefusalError("equilibrium check over too many atoms",
                           s_prime.size(), lim.stable_base_limit);
    }
    CompiledTheory ct(fs, {s_prime.begin(), s_prime.end()});
    std::uint64_t full = s_prime.empty() ? 0 : ((std::uint64_t{1} << s_prime.size()) - 1);
    // atoms of fs outside s_prime are false in both worlds by compilation,
    // which matches evaluating the interpretation s_prime directly
    if (!ct.prop_all(full)) { return false; }
    return no_smaller_here_model(ct, full);
}

std::vector<AtomSet> stable_models(std::vector<InfFormulaPtr> const &fs,
                                   std::vector<GroundAtom> const &base, Limits const &lim) {
    if (base.size() > static_cast<size_t>(lim.stable_base_limit)) {
        throw RefusalError("stable-model search over too many atoms",
                           base.size(), lim.stable_base_limit);
    }
    CompiledTheory ct(fs, base);
    std::uint64_t count = std::uint64_t{1} << ct.base().size();
    size_t workers = worker_count(count);
    std::vector<std::vector<std::uint64_t>> found(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::uint64_t chunk = (count + workers - 1) / workers;
    for (size_t w = 0; w < workers; ++w) {
        std::uint64_t lo = w * chunk;
        std::uint64_t hi = std::min(count, lo + chunk);
        pool.emplace_back([&ct, &found, w, lo, hi]() {
            for (std::uint64_t mask = lo; mask < hi; ++mask) {
                if (ct.prop_all(mask) && no_smaller_here_model(ct, mask)) {
                    found[w].push_back(mask);
                }
            }
        });
    }
    for (auto &t : pool) { t.join(); }
    std::vector<AtomSet> out;
    for (auto const &bucket : found) {
        for (auto mask : bucket) { out.push_back(ct.to_atoms(mask)); }
    }
    return out;
}

EquivalenceOutcome ht_equivalent(std::vector<InfFormulaPtr> const &a,
                                 std::vector<InfFormulaPtr> const &b,
                                 std::vector<GroundAtom> const &base, Limits const &lim) {
    if (base.size() > static_cast<size_t>(lim.equivalence_base_limit)) {
        throw RefusalError("equivalence sweep over too many atoms",
                           base.size(), lim.equivalence_base_limit);
    }
    CompiledTheory ca(a, base);
    CompiledTheory cb(b, base);
    std::uint64_t count = std::uint64_t{1} << ca.base().size();
    size_t workers = worker_count(count);
    // per-worker first disagreement in scan order: there-mask ascending,
    // here-submask descending from the there-mask itself
    struct Hit {
        std::uint64_t there;
        std::uint64_t here;
    };
    std::vector<std::optional<Hit>> hits(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    std::uint64_t chunk = (count + workers - 1) / workers;
    for (size_t w = 0; w < workers; ++w) {
        std::uint64_t lo = w * chunk;
        std::uint64_t hi = std::min(count, lo + chunk);
        pool.emplace_back([&ca, &cb, &hits, w, lo, hi]() {
            for (std::uint64_t there = lo; there < hi && !hits[w]; ++there) {
                std::uint64_t here = there;
                for (;;) {
                    if (ca.ht_all(here, there) != cb.ht_all(here, there)) {
                        hits[w] = Hit{there, here};
                        break;
                    }
                    if (here == 0) { break; }
                    here = (here - 1) & there;
                }
            }
        });
    }
    for (auto &t : pool) { t.join(); }
    for (auto const &hit : hits) {
        if (hit) {
            return EquivalenceOutcome{
                false, HTWitness{ca.to_atoms(hit->here), ca.to_atoms(hit->there)}};
        }
    }
    return EquivalenceOutcome{true, std::nullopt};
}

} // namespace clsem
