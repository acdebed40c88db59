// clsem : a semantics workbench for logic programs with conditional literals
// Copyright (c) 2026 clsem authors. MIT license (see LICENSE).

#include <doctest.h>

#include <clsem/tau_ag.hh>

#include "support.hh"

using namespace clsem;

namespace {

Rule parse_rule(std::string const &text) {
    auto prog = parse_program(text);
    REQUIRE(prog.rules.size() == 1);
    return prog.rules.front();
}

std::vector<PrecomputedTerm> small_universe() {
    return {pre_num(1), pre_num(2), pre_sym("a")};
}

} // namespace

TEST_CASE("instantiation substitutes universe elements for global variables") {
    auto insts = instances(parse_rule("q(X) :- p(X)."), {pre_num(1), pre_sym("a")});
    REQUIRE(insts.size() == 2);
    CHECK(render(insts[0].rule) == "q(1) :- p(1).");
    CHECK(render(insts[1].rule) == "q(a) :- p(a).");
    REQUIRE(insts[0].substitution.size() == 1);
    CHECK(insts[0].substitution[0].first == "X");
    CHECK(insts[0].substitution[0].second == pre_num(1));

    CHECK(instances(parse_rule("p :- q."), small_universe()).size() == 1);
    CHECK(instances(parse_rule("p :- q."), small_universe())[0].substitution.empty());

    // local variables of conditional literals are not instantiated
    auto cond = instances(parse_rule(":- not asg(V,C) : col(C); vtx(V)."),
                          {pre_sym("v"), pre_sym("w")});
    REQUIRE(cond.size() == 2);
    CHECK(render(cond[0].rule) == ":- not asg(v,C) : col(C); vtx(v).");
    CHECK(render(cond[1].rule) == ":- not asg(w,C) : col(C); vtx(w).");
}

TEST_CASE("instantiation enumerates tuples with the last variable fastest") {
    auto insts = instances(parse_rule(":- p(X,Y)."), {pre_num(1), pre_num(2)});
    REQUIRE(insts.size() == 4);
    auto subst_text = [](RuleInstance const &inst) {
        std::string out;
        for (auto const &[var, value] : inst.substitution) {
            out += var + "=" + render(value) + " ";
        }
        return out;
    };
    CHECK(subst_text(insts[0]) == "X=1 Y=1 ");
    CHECK(subst_text(insts[1]) == "X=1 Y=2 ");
    CHECK(subst_text(insts[2]) == "X=2 Y=1 ");
    CHECK(subst_text(insts[3]) == "X=2 Y=2 ");
}

TEST_CASE("instantiation refuses to exceed the tuple cap") {
    Limits tight;
    tight.instance_cap = 3;
    CHECK_THROWS_AS(instances(parse_rule(":- p(X,Y)."), {pre_num(1), pre_num(2)}, tight),
                    RefusalError);
    try {
        instances(parse_rule(":- p(X,Y)."), {pre_num(1), pre_num(2)}, tight);
    }
    catch (RefusalError const &e) {
        CHECK(e.size() == 4);
        CHECK(e.cap() == 3);
    }
}

TEST_CASE("closed atoms become disjunctions over their values") {
    auto u = small_universe();
    CHECK(render(tau_closed(parse_rule(":- p(1..2).").body[0], u)) == "∨{p(1), p(2)}");
    CHECK(render(tau_closed(parse_rule(":- not p(1..2).").body[0], u)) == "∨{¬p(1), ¬p(2)}");
    CHECK(render(tau_closed(parse_rule(":- not not p.").body[0], u)) == "¬¬p");
    CHECK(render(tau_closed(parse_rule(":- p(3/0).").body[0], u)) == "⊥");
    CHECK(render(tau_closed(parse_rule(":- p(4/2).").body[0], u)) == "p(2)");
    CHECK(render(tau_closed(parse_rule(":- p(1,a).").body[0], u)) == "p(1,a)");
}

TEST_CASE("closed comparisons evaluate eagerly") {
    auto u = small_universe();
    CHECK(render(tau_closed(parse_rule(":- 1 < 1.").body[0], u)) == "⊥");
    CHECK(render(tau_closed(parse_rule(":- 1 < 2.").body[0], u)) == "⊤");
    CHECK(render(tau_closed(parse_rule(":- 1..3 > 2.").body[0], u)) == "⊤");
    CHECK(render(tau_closed(parse_rule(":- 1..0 = 1..0.").body[0], u)) == "⊥"); // empty values
    CHECK(render(tau_closed(parse_rule(":- a < #sup.").body[0], u)) == "⊤");
    CHECK(render(tau_closed(parse_rule(":- #inf >= 0.").body[0], u)) == "⊥");
}

TEST_CASE("closed conditional literals expand over universe tuples") {
    auto elem = parse_rule(":- not asg(v,C) : col(C).").body[0];
    auto f = tau_closed(elem, {pre_num(1), pre_sym("v")});
    CHECK(render(f) == "∧{(col(1) → ¬asg(v,1)), (col(v) → ¬asg(v,v))}");

    // hand-built counterpart
    auto build = [](PrecomputedTerm c) {
        return inf_implies(inf_atom(GroundAtom{"col", {c}}),
                           inf_not(inf_atom(GroundAtom{"asg", {pre_sym("v"), c}})));
    };
    CHECK(inf_equal(f, inf_conj({build(pre_num(1)), build(pre_sym("v"))})));
}

TEST_CASE("conditional literals with comparison conditions decide per tuple") {
    auto elem = parse_rule(":- q(Y) : Y = 1..2.").body[0];
    auto f = tau_closed(elem, small_universe());
    CHECK(render(f) == "∧{(⊤ → q(1)), (⊤ → q(2)), (⊥ → q(a))}");
}

TEST_CASE("empty universes make conditional expansions vacuous") {
    auto elem = parse_rule(":- q(Y) : p(Y).").body[0];
    CHECK(render(tau_closed(elem, {})) == "⊤");
}

TEST_CASE("closed rules translate to implications") {
    auto u = small_universe();
    CHECK(render(tau_closed_rule(parse_rule(":- q."), u)) == "¬q");
    CHECK(render(tau_closed_rule(parse_rule("p(1..2) :- q."), u)) == "(q → ∧{p(1), p(2)})");
    CHECK(render(tau_closed_rule(parse_rule("p."), u)) == "(⊤ → p)");
    CHECK(render(tau_closed_rule(parse_rule("p(2/2)."), u)) == "(⊤ → p(1))");
    CHECK(render(tau_closed_rule(parse_rule("p(1/0)."), u)) == "(⊤ → ⊤)");
    CHECK(render(tau_closed_rule(parse_rule("{p(1..2)} :- q."), u)) ==
          "(q → ∧{∨{¬p(1), p(1)}, ∨{¬p(2), p(2)}})");
    CHECK(render(tau_closed_rule(parse_rule(":- q; not r."), u)) == "¬∧{¬r, q}");
}

TEST_CASE("precomputed ground programs translate to their clause image") {
    auto u = small_universe();
    auto p = inf_atom(GroundAtom{"p", {}});
    auto q = inf_atom(GroundAtom{"q", {}});
    auto r = inf_atom(GroundAtom{"r", {}});
    CHECK(inf_equal(tau_rule(parse_rule("p :- q; not r."), u),
                    inf_implies(inf_conj({q, inf_not(r)}), p)));
    CHECK(inf_equal(tau_rule(parse_rule(":- q; not r."), u),
                    inf_not(inf_conj({q, inf_not(r)}))));
    CHECK(inf_equal(tau_rule(parse_rule("{p} :- q."), u),
                    inf_implies(q, inf_disj({p, inf_not(p)}))));
}

TEST_CASE("rules with global variables conjoin their instances") {
    auto f = tau_rule(parse_rule(":- not asg(V,C) : col(C); vtx(V)."),
                      {pre_sym("v"), pre_sym("w")});
    auto cl = [](PrecomputedTerm v, PrecomputedTerm c) {
        return inf_implies(inf_atom(GroundAtom{"col", {c}}),
                           inf_not(inf_atom(GroundAtom{"asg", {v, c}})));
    };
    auto vn = pre_sym("v");
    auto wn = pre_sym("w");
    auto inst = [&](PrecomputedTerm v) {
        return inf_not(inf_conj_raw({inf_conj({cl(v, vn), cl(v, wn)}),
                                     inf_atom(GroundAtom{"vtx", {v}})}));
    };
    CHECK(inf_equal(f, inf_conj({inst(vn), inst(wn)})));
}

TEST_CASE("element-level and rule-level substitution agree") {
    test::Rng rng(20260815);
    auto u = small_universe();
    for (int i = 0; i < 250; ++i) {
        auto r = test::gen_rule(rng);
        CAPTURE(render(r));
        InfFormulaPtr direct;
        try {
            direct = tau_rule(r, u);
        }
        catch (RefusalError const &) {
            continue;
        }
        std::vector<InfFormulaPtr> parts;
        for (auto const &inst : instances(r, u)) {
            parts.push_back(tau_closed_rule(inst.rule, u));
        }
        CHECK(inf_equal(direct, inf_conj(std::move(parts))));
    }
}

TEST_CASE("program translation is a canonical set") {
    auto u = small_universe();
    CHECK(tau_program(parse_program(""), u).empty());
    CHECK(tau_program(parse_program("p. p."), u).size() == 1);
    auto two = tau_program(parse_program("z. b."), u);
    REQUIRE(two.size() == 2);
    CHECK(render(two[0]) == "(⊤ → b)");
    CHECK(render(two[1]) == "(⊤ → z)");
}

TEST_CASE("conditional expansion respects the tuple cap") {
    Limits tight;
    tight.instance_cap = 8;
    std::vector<PrecomputedTerm> u;
    for (int i = 0; i < 3; ++i) { u.push_back(pre_num(i)); }
    auto elem = parse_rule(":- q(X,Y) : p(X,Y).").body[0];
    CHECK_THROWS_AS(tau_closed(elem, u, tight), RefusalError);
}
