// clsem : a semantics workbench for logic programs with conditional literals
// Copyright (c) 2026 clsem authors. MIT license (see LICENSE).

#include "support.hh"

#include <doctest.h>

using namespace clsem;
using test::Rng;

TEST_CASE("precomputed terms are totally ordered by category then value") {
    CHECK(compare_precomputed(pre_inf(), pre_num(-1000)) == std::strong_ordering::less);
    CHECK(compare_precomputed(pre_num(5), pre_sym("a")) == std::strong_ordering::less);
    CHECK(compare_precomputed(pre_sym("a"), pre_sym("b")) == std::strong_ordering::less);
    CHECK(compare_precomputed(pre_sym("zzz"), pre_sup()) == std::strong_ordering::less);
    CHECK(compare_precomputed(pre_num(-1), pre_num(1)) == std::strong_ordering::less);
    CHECK(compare_precomputed(pre_num(3), pre_num(3)) == std::strong_ordering::equal);
    CHECK(compare_precomputed(pre_sup(), pre_inf()) == std::strong_ordering::greater);
    // byte order on symbolic constants
    CHECK(compare_precomputed(pre_sym("ab"), pre_sym("b")) == std::strong_ordering::less);
}

TEST_CASE("precomputed order is total on random samples") {
    Rng rng{20260815};
    std::vector<PrecomputedTerm> xs;
    for (int i = 0; i < 40; ++i) { xs.push_back(test::gen_precomputed(rng)); }
    for (auto const &a : xs) {
        for (auto const &b : xs) {
            auto ab = compare_precomputed(a, b);
            auto ba = compare_precomputed(b, a);
            CHECK((ab == std::strong_ordering::equal) == (ba == std::strong_ordering::equal));
            if (ab == std::strong_ordering::less) { CHECK(ba == std::strong_ordering::greater); }
            for (auto const &c : xs) {
                if (ab != std::strong_ordering::greater &&
                    compare_precomputed(b, c) != std::strong_ordering::greater) {
                    CHECK(compare_precomputed(a, c) != std::strong_ordering::greater);
                }
            }
        }
    }
}

TEST_CASE("rel_holds follows the total order") {
    CHECK(rel_holds(Rel::lt, pre_inf(), pre_num(0)));
    CHECK(rel_holds(Rel::le, pre_num(2), pre_num(2)));
    CHECK(rel_holds(Rel::ne, pre_num(2), pre_sym("a")));
    CHECK(rel_holds(Rel::gt, pre_sup(), pre_sym("zz")));
    CHECK_FALSE(rel_holds(Rel::eq, pre_inf(), pre_sup()));
    CHECK(rel_holds(Rel::ge, pre_sym("b"), pre_sym("a")));
}

TEST_CASE("parsing a fact keeps arithmetic unevaluated") {
    auto p = parse_program("p(3+5).");
    REQUIRE(p.rules.size() == 1);
    auto const &r = p.rules[0];
    CHECK(r.kind == Rule::Kind::basic);
    REQUIRE(r.head.has_value());
    CHECK(r.head->predicate == "p");
    REQUIRE(r.head->args.size() == 1);
    auto const *bin = std::get_if<Binary>(&r.head->args[0]->data);
    REQUIRE(bin != nullptr);
    CHECK(bin->op == BinOp::add);
    CHECK(term_equal(bin->lhs, t_num(3)));
    CHECK(term_equal(bin->rhs, t_num(5)));
    CHECK(r.body.empty());
}

TEST_CASE("parsing a constraint with a conditional literal") {
    auto p = parse_program(":- not asg(V,C) : col(C); vtx(V).");
    REQUIRE(p.rules.size() == 1);
    auto const &r = p.rules[0];
    CHECK(r.kind == Rule::Kind::constraint);
    CHECK_FALSE(r.head.has_value());
    REQUIRE(r.body.size() == 2);

    auto const &cond = r.body[0];
    auto const *head = std::get_if<BasicLiteral>(&cond.head);
    REQUIRE(head != nullptr);
    CHECK(head->sign == Sign::negation);
    CHECK(head->atom.predicate == "asg");
    REQUIRE(cond.conditions.size() == 1);
    auto const *c0 = std::get_if<BasicLiteral>(&cond.conditions[0]);
    REQUIRE(c0 != nullptr);
    CHECK(c0->sign == Sign::none);
    CHECK(c0->atom.predicate == "col");

    auto const &plain = r.body[1];
    CHECK(plain.conditions.empty());
    auto const *p1 = std::get_if<BasicLiteral>(&plain.head);
    REQUIRE(p1 != nullptr);
    CHECK(p1->atom.predicate == "vtx");
}

TEST_CASE("parsing a choice rule") {
    auto p = parse_program("{asg(V,C)} :- vtx(V), col(C).");
    REQUIRE(p.rules.size() == 1);
    auto const &r = p.rules[0];
    CHECK(r.kind == Rule::Kind::choice);
    REQUIRE(r.head.has_value());
    CHECK(r.head->predicate == "asg");
    CHECK(r.head->args.size() == 2);
    REQUIRE(r.body.size() == 2);
    CHECK(r.body[0].conditions.empty());
    CHECK(r.body[1].conditions.empty());
}

TEST_CASE("global variables of the coloring constraint") {
    auto p = parse_program(":- not asg(V,C) : col(C); vtx(V).");
    CHECK(global_variables(p.rules[0]) == std::vector<std::string>{"V"});
}

TEST_CASE("global variables of plain rules") {
    auto p = parse_program("q(X) :- p(X,Y).");
    CHECK(global_variables(p.rules[0]) == std::vector<std::string>{"X", "Y"});
    auto q = parse_program("p :- q.");
    CHECK(global_variables(q.rules[0]).empty());
}

TEST_CASE("a variable is global iff it occurs outside every condition scope") {
    auto p = parse_program(":- p(X) : q(X,Y), r(Y); s(Z).");
    CHECK(global_variables(p.rules[0]) == std::vector<std::string>{"Z"});
    CHECK(rule_variables(p.rules[0]) == std::vector<std::string>{"X", "Y", "Z"});

    // head variables are always global, even when reused inside conditions
    auto q = parse_program("w(X) :- p(X) : q(X).");
    CHECK(global_variables(q.rules[0]) == std::vector<std::string>{"X"});
}

TEST_CASE("term precedence and associativity") {
    auto p = parse_program("p(1+2*3-4..5).");
    CHECK(render(p.rules[0]) == "p(1+2*3-4..5).");
    auto const *range = std::get_if<Binary>(&p.rules[0].head->args[0]->data);
    REQUIRE(range != nullptr);
    CHECK(range->op == BinOp::range);

    auto q = parse_program("p((1+2)*3).");
    CHECK(render(q.rules[0]) == "p((1+2)*3).");
    auto const *mul = std::get_if<Binary>(&q.rules[0].head->args[0]->data);
    REQUIRE(mul != nullptr);
    CHECK(mul->op == BinOp::mul);

    // left associativity within a level
    auto r = parse_program("p(1-2-3).");
    auto const *outer = std::get_if<Binary>(&r.rules[0].head->args[0]->data);
    REQUIRE(outer != nullptr);
    CHECK(outer->op == BinOp::sub);
    CHECK(term_equal(outer->rhs, t_num(3)));
}

TEST_CASE("unary minus is stored as zero minus") {
    auto p = parse_program("p(-X).");
    auto const *bin = std::get_if<Binary>(&p.rules[0].head->args[0]->data);
    REQUIRE(bin != nullptr);
    CHECK(bin->op == BinOp::sub);
    CHECK(term_equal(bin->lhs, t_num(0)));
    CHECK(term_equal(bin->rhs, t_var("X")));
    CHECK(render(p.rules[0]) == "p(-X).");
}

TEST_CASE("absolute value and infimum/supremum tokens") {
    auto p = parse_program("p(|X-1|, #inf, #sup).");
    auto const &args = p.rules[0].head->args;
    REQUIRE(args.size() == 3);
    CHECK(std::holds_alternative<AbsoluteValue>(args[0]->data));
    CHECK(std::holds_alternative<InfTerm>(args[1]->data));
    CHECK(std::holds_alternative<SupTerm>(args[2]->data));
    CHECK(render(p.rules[0]) == "p(|X-1|,#inf,#sup).");

    // bare identifiers inf and sup are reserved spellings of the same terms
    auto q = parse_program("p(inf, sup).");
    CHECK(std::holds_alternative<InfTerm>(q.rules[0].head->args[0]->data));
    CHECK(std::holds_alternative<SupTerm>(q.rules[0].head->args[1]->data));
}

TEST_CASE("comparisons parse in rule bodies and conditions") {
    auto p = parse_program("p(X) :- q(X), X < 3, a + 1 < 3.");
    REQUIRE(p.rules[0].body.size() == 3);
    auto const *cmp = std::get_if<Comparison>(&p.rules[0].body[1].head);
    REQUIRE(cmp != nullptr);
    CHECK(cmp->rel == Rel::lt);
    auto const *cmp2 = std::get_if<Comparison>(&p.rules[0].body[2].head);
    REQUIRE(cmp2 != nullptr);
    auto const *lhs = std::get_if<Binary>(&cmp2->lhs->data);
    REQUIRE(lhs != nullptr);
    CHECK(std::holds_alternative<SymbolicConstant>(lhs->lhs->data));

    auto q = parse_program(":- p(X) : X != 1..3.");
    auto const *c = std::get_if<Comparison>(&q.rules[0].body[0].conditions[0]);
    REQUIRE(c != nullptr);
    CHECK(c->rel == Rel::ne);
}

TEST_CASE("propositional atoms need no parentheses") {
    auto p = parse_program("p. q :- p, not r.");
    CHECK(p.rules.size() == 2);
    CHECK(p.rules[0].head->args.empty());
    CHECK(render(p.rules[1]) == "q :- p; not r.");
}

TEST_CASE("empty constraint and falsum heads parse") {
    auto p = parse_program(":- .");
    CHECK(p.rules[0].kind == Rule::Kind::constraint);
    CHECK(p.rules[0].body.empty());

    auto q = parse_program(":- #false : p(X).");
    REQUIRE(q.rules[0].body.size() == 1);
    CHECK(std::holds_alternative<Falsum>(q.rules[0].body[0].head));
}

TEST_CASE("comments and whitespace are skipped") {
    auto p = parse_program("% leading comment\np(1). % trailing\n\n q.\n");
    CHECK(p.rules.size() == 2);
}

TEST_CASE("same name at different arities names different predicates") {
    auto p = parse_program("p. p(1).");
    auto preds = program_predicates(p);
    CHECK(preds.size() == 2);
    CHECK(preds.count(Predicate{"p", 0}) == 1);
    CHECK(preds.count(Predicate{"p", 1}) == 1);
}

TEST_CASE("program constants and predicates are collected everywhere") {
    auto p = parse_program("{w(a)} :- p(X) : q(X, b); r(c), X < d.");
    CHECK(program_constants(p) == std::set<std::string>{"a", "b", "c", "d"});
    auto preds = program_predicates(p);
    CHECK(preds.count(Predicate{"w", 1}) == 1);
    CHECK(preds.count(Predicate{"p", 1}) == 1);
    CHECK(preds.count(Predicate{"q", 2}) == 1);
    CHECK(preds.count(Predicate{"r", 1}) == 1);
}

TEST_CASE("parse errors carry one-based locations") {
    try {
        parse_program("p(1).\nq( .");
        FAIL("expected ParseError");
    }
    catch (ParseError const &e) {
        CHECK(e.line() == 2);
        CHECK(e.column() >= 3);
    }

    CHECK_THROWS_AS(parse_program("p"), ParseError);                      // missing dot
    CHECK_THROWS_AS(parse_program("p(X) :- q(X)"), ParseError);           // missing dot
    CHECK_THROWS_AS(parse_program("p(_X)."), ParseError);                 // reserved leading underscore
    CHECK_THROWS_AS(parse_program("p() ."), ParseError);                  // empty argument list
    CHECK_THROWS_AS(parse_program("p(99999999999999999999)."), ParseError); // numeral overflow
    CHECK_THROWS_AS(parse_program("not p."), ParseError);                 // negation in a head
}

TEST_CASE("substituting global variables instantiates the rule") {
    auto p = parse_program("w(X) :- p(X, Y); q(V) : r(V, X).");
    std::map<std::string, PrecomputedTerm> subst{{"X", pre_num(2)}, {"Y", pre_sym("a")}};
    auto inst = substitute_globals(p.rules[0], subst);
    CHECK(render(inst) == "w(2) :- p(2,a); q(V) : r(V,2).");
    // the original rule is untouched
    CHECK(render(p.rules[0]) == "w(X) :- p(X,Y); q(V) : r(V,X).");
}

TEST_CASE("parse after render is the identity on generated rules") {
    Rng rng{7};
    for (int i = 0; i < 500; ++i) {
        Rule r = test::gen_rule(rng);
        auto text = render(r);
        CAPTURE(text);
        Program back;
        REQUIRE_NOTHROW(back = parse_program(text));
        REQUIRE(back.rules.size() == 1);
        CHECK(back.rules[0] == r);
    }
}

TEST_CASE("json export carries the schema tag and rule structure") {
    auto p = parse_program("{p(1+1)} :- q(X) : r(X).");
    auto j = to_json(p);
    CHECK(j.find("clsem-program-1") != std::string::npos);
    CHECK(j.find("\"choice\"") != std::string::npos);
    CHECK(j.find("\"conditions\"") != std::string::npos);
}

TEST_CASE("atom sets render space separated in order") {
    AtomSet m{{"q", {}}, {"p", {pre_num(1)}}, {"p", {pre_inf()}}};
    CHECK(render(m) == "p(#inf) p(1) q");
}
