// clsem : a semantics workbench for logic programs with conditional literals
// Copyright (c) 2026 clsem authors. MIT license (see LICENSE).

#include "support.hh"

#include <doctest.h>

#include <functional>
#include <limits>

using namespace clsem;
using test::Rng;

namespace {

//! Parse a single term through the fact grammar.
TermPtr term_of(std::string const &text) {
    auto p = parse_program("p(" + text + ").");
    return p.rules[0].head->args[0];
}

std::set<PrecomputedTerm> values_of(TermPtr const &t, Limits const &lim = {}) { return eval_values(t, lim).values; }

std::set<PrecomputedTerm> nums(std::initializer_list<std::int64_t> ns) {
    std::set<PrecomputedTerm> out;
    for (auto n : ns) { out.insert(pre_num(n)); }
    return out;
}

} // namespace

TEST_CASE("round_div truncates towards zero") {
    CHECK(round_div(7, 2) == 3);
    CHECK(round_div(-7, 2) == -3);
    CHECK(round_div(0, 5) == 0);
    CHECK(round_div(7, -2) == -3);
    CHECK(round_div(-7, -2) == 3);
    CHECK(round_div(1, 3) == 0);
    CHECK(round_div(-1, 3) == 0);
}

TEST_CASE("round_div agrees with the rational rounding oracle") {
    for (std::int64_t i = -20; i <= 20; ++i) {
        for (std::int64_t j = -20; j <= 20; ++j) {
            if (j == 0) { continue; }
            CAPTURE(i);
            CAPTURE(j);
            CHECK(round_div(i, j) == test::oracle_round_div(i, j));
        }
    }
}

TEST_CASE("round(i/j) is the quotient of absolute values with the product sign") {
    for (std::int64_t i = -50; i <= 50; ++i) {
        for (std::int64_t j = -50; j <= 50; ++j) {
            if (j == 0) { continue; }
            auto k = test::oracle_floor_div(std::abs(i), std::abs(j));
            CAPTURE(i);
            CAPTURE(j);
            if (i * j >= 0) { CHECK(round_div(i, j) == k); }
            else { CHECK(round_div(i, j) == -k); }
        }
    }
}

TEST_CASE("values of leaves are singletons") {
    CHECK(values_of(t_num(5)) == nums({5}));
    CHECK(values_of(t_sym("a")) == std::set<PrecomputedTerm>{pre_sym("a")});
    CHECK(values_of(t_inf()) == std::set<PrecomputedTerm>{pre_inf()});
    CHECK(values_of(t_sup()) == std::set<PrecomputedTerm>{pre_sup()});
}

TEST_CASE("arithmetic over a symbolic constant has no values") {
    CHECK(values_of(term_of("a+3")).empty());
    CHECK(values_of(t_abs(t_sym("a"))).empty());
    CHECK(values_of(t_bin(BinOp::mul, t_inf(), t_num(2))).empty());
    CHECK(values_of(t_bin(BinOp::range, t_inf(), t_num(2))).empty());
}

TEST_CASE("addition distributes over interval values") {
    // the term Add(3, Range(1, 5)): enumerate the interval, then shift
    auto t = t_bin(BinOp::add, t_num(3), t_bin(BinOp::range, t_num(1), t_num(5)));
    CHECK(values_of(t) == nums({4, 5, 6, 7, 8}));
    // the concrete syntax reads 3+1..5 as (3+1)..5, since .. binds loosest
    CHECK(values_of(term_of("3+1..5")) == nums({4, 5}));
}

TEST_CASE("division by zero has no values") {
    CHECK(values_of(term_of("1/0")).empty());
    CHECK(values_of(term_of("1\\0")).empty());
    CHECK(values_of(term_of("1/(1-1)")).empty());
}

TEST_CASE("division and modulo truncate towards zero") {
    CHECK(values_of(term_of("7/2")) == nums({3}));
    CHECK(values_of(term_of("-7/2")) == nums({-3}));
    CHECK(values_of(term_of("-7\\2")) == nums({-1}));
    CHECK(values_of(term_of("7\\2")) == nums({1}));
    CHECK(values_of(term_of("7\\-2")) == nums({1}));
    CHECK(values_of(term_of("-7\\-2")) == nums({-1}));
}

TEST_CASE("absolute value applies to numerals only") {
    CHECK(values_of(term_of("|0-3|")) == nums({3}));
    CHECK(values_of(term_of("|3|")) == nums({3}));
    CHECK(values_of(t_abs(t_bin(BinOp::range, t_num(-2), t_num(1)))) == nums({0, 1, 2}));
}

TEST_CASE("intervals enumerate inclusively and compose") {
    CHECK(values_of(term_of("1..3")) == nums({1, 2, 3}));
    CHECK(values_of(term_of("3..3")) == nums({3}));
    CHECK(values_of(term_of("3..1")).empty());
    CHECK(values_of(term_of("(1..3)*2")) == nums({2, 4, 6}));
    CHECK(values_of(t_bin(BinOp::range, t_num(2), t_bin(BinOp::range, t_num(1), t_num(3)))) == nums({2, 3}));
}

TEST_CASE("interval enumeration beyond the cap refuses or truncates on request") {
    Limits lim;
    lim.interval_cap = 10;
    auto t = term_of("1..20");
    CHECK_THROWS_AS(eval_values(t, lim), RefusalError);
    try {
        eval_values(t, lim);
    }
    catch (RefusalError const &e) {
        CHECK(e.size() == 20);
        CHECK(e.cap() == 10);
    }

    lim.allow_truncation = true;
    auto vs = eval_values(t, lim);
    CHECK(vs.truncated);
    CHECK(vs.values == nums({1, 2, 3, 4, 5, 6, 7, 8, 9, 10}));
}

TEST_CASE("value computation is exact and overflow is loud") {
    auto big = t_num(std::numeric_limits<std::int64_t>::max());
    CHECK_THROWS_AS(eval_values(t_bin(BinOp::mul, big, t_num(2))), std::overflow_error);
    CHECK_THROWS_AS(eval_values(t_bin(BinOp::add, big, t_num(1))), std::overflow_error);
}

TEST_CASE("terms with variables are not ground") {
    CHECK_THROWS_AS(eval_values(t_var("X")), std::invalid_argument);
    CHECK_THROWS_AS(eval_values(t_bin(BinOp::add, t_num(1), t_var("X"))), std::invalid_argument);
}

TEST_CASE("tuple values form the Cartesian product") {
    auto ts = std::vector<TermPtr>{term_of("1..2"), t_sym("a")};
    auto tv = eval_tuple_values(ts);
    CHECK(tv.tuples == std::set<std::vector<PrecomputedTerm>>{{pre_num(1), pre_sym("a")},
                                                              {pre_num(2), pre_sym("a")}});

    CHECK(eval_tuple_values({}).tuples == std::set<std::vector<PrecomputedTerm>>{{}});
    CHECK(eval_tuple_values({term_of("1/0")}).tuples.empty());
    CHECK(eval_tuple_values({term_of("1/0"), term_of("1..2")}).tuples.empty());
}

TEST_CASE("val formula of a leaf equates the target variable with the leaf") {
    CHECK(render(val_formula(t_num(5), "Z")) == "Z = 5");
    CHECK(render(val_formula(t_sym("a"), "Z")) == "Z = a");
    CHECK(render(val_formula(t_var("X"), "Z")) == "Z = X");
    CHECK(render(val_formula(t_inf(), "Z")) == "Z = #inf");
}

TEST_CASE("val formula for absolute value binds one fresh integer variable") {
    CHECK(render(val_formula(t_abs(t_var("X")), "Z")) == "exists I1 ((I1 = X and Z = |I1|))");
}

TEST_CASE("val formula for addition binds a fresh pair") {
    auto f = val_formula(t_bin(BinOp::add, t_var("X"), t_num(1)), "Z");
    CHECK(render(f) == "exists I1 J1 ((Z = (I1 + J1) and I1 = X and J1 = 1))");
}

TEST_CASE("val formula for division encodes rounding via the quotient bracketing") {
    auto f = val_formula(t_bin(BinOp::div, t_var("X"), t_var("Y")), "Z");
    CHECK(render(f) ==
          "exists I1 J1 K1 ((I1 = X and J1 = Y"
          " and ((K1 * |J1|) <= |I1| and |I1| < ((K1 + 1) * |J1|))"
          " and (((I1 * J1) >= 0 and Z = K1) or ((I1 * J1) < 0 and Z = (0 - K1)))))");
}

TEST_CASE("val formula for modulo reuses the bracketing with the remainder form") {
    auto f = val_formula(t_bin(BinOp::mod, t_var("X"), t_var("Y")), "Z");
    CHECK(render(f) ==
          "exists I1 J1 K1 ((I1 = X and J1 = Y"
          " and ((K1 * |J1|) <= |I1| and |I1| < ((K1 + 1) * |J1|))"
          " and (((I1 * J1) >= 0 and Z = (I1 - (K1 * J1))) or ((I1 * J1) < 0 and Z = (I1 + (K1 * J1))))))");
}

TEST_CASE("val formula for intervals sandwiches the witness") {
    auto f = val_formula(t_bin(BinOp::range, t_num(1), t_num(3)), "Z");
    CHECK(render(f) == "exists I1 J1 K1 ((Z = K1 and I1 <= K1 and K1 <= J1 and I1 = 1 and J1 = 3))");
}

TEST_CASE("val formula numbers nested operators in pre-order") {
    auto t = t_bin(BinOp::add, t_bin(BinOp::add, t_var("X"), t_num(1)), t_num(2));
    CHECK(render(val_formula(t, "Z")) ==
          "exists I1 J1 ((Z = (I1 + J1) and exists I2 J2 ((I1 = (I2 + J2) and I2 = X and J2 = 1)) and J1 = 2))");
}

TEST_CASE("val formula skips indices that collide with source variables") {
    auto t = t_bin(BinOp::add, t_var("I1"), t_num(1));
    CHECK(render(val_formula(t, "Z")) == "exists I2 J2 ((Z = (I2 + J2) and I2 = I1 and J2 = 1))");

    auto u = t_bin(BinOp::add, t_var("X"), t_num(1));
    CHECK(render(val_formula(u, "Z", {"J1"})) == "exists I2 J2 ((Z = (I2 + J2) and I2 = X and J2 = 1))");
}

TEST_CASE("val formula is satisfied exactly by the values of the term") {
    // Bounded quantification is exact as long as every intermediate value
    // fits inside the universe; the generator filters accordingly.
    Limits lim;
    lim.int_bound = 4;
    auto interp = make_interpretation({"a", "b"}, lim);

    std::function<bool(TermPtr const &)> intermediates_fit = [&](TermPtr const &t) -> bool {
        bool kids = std::visit(
            [&](auto const &v) {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, Binary>) {
                    return intermediates_fit(v.lhs) && intermediates_fit(v.rhs);
                }
                else if constexpr (std::is_same_v<T, AbsoluteValue>) { return intermediates_fit(v.arg); }
                else { return true; }
            },
            t->data);
        if (!kids) { return false; }
        for (auto const &r : eval_values(t, lim).values) {
            if (is_numeral(r) && std::abs(numeral_value(r)) > lim.int_bound) { return false; }
        }
        return true;
    };

    Rng rng{42};
    test::TermGenOptions opt; // ground terms over {-3..3, a, b, inf, sup}, depth <= 2
    int accepted = 0;
    int attempts = 0;
    while (accepted < 300 && attempts < 20000) {
        ++attempts;
        auto t = test::gen_term(rng, opt);
        if (!intermediates_fit(t)) { continue; }
        ++accepted;
        auto vs = values_of(t, lim);
        auto f = val_formula(t, "Z");
        for (auto const &r : interp.universe) {
            CAPTURE(render(t));
            CAPTURE(render(r));
            bool holds = fo_satisfies(interp, substitute(f, "Z", r));
            CHECK(holds == (vs.count(r) > 0));
        }
    }
    CHECK(accepted == 300);
}
