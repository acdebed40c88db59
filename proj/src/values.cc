// clsem : a semantics workbench for logic programs with conditional literals
// Copyright (c) 2026 clsem authors. MIT license (see LICENSE).

#include <clsem/values.hh>

#include <limits>

namespace clsem {

std::int64_t round_div(std::int64_t n1, std::int64_t n2) {
    if (n2 == 0) { throw std::invalid_argument("round_div: zero divisor"); }
    if (n1 == std::numeric_limits<std::int64_t>::min() && n2 == -1) {
        throw std::overflow_error("integer overflow in division");
    }
    return n1 / n2; // rounds towards zero
}

// ---------------------------------------------------------------------------
// value enumeration

namespace {

ValueSet eval_rec(TermPtr const &t, Limits const &limits) {
    return std::visit(
        [&](auto const &v) -> ValueSet {
            using T = std::decay_t<decltype(v)>;
            ValueSet out;
            if constexpr (std::is_same_v<T, Numeral>) { out.values.insert(pre_num(v.value)); }
            else if constexpr (std::is_same_v<T, SymbolicConstant>) { out.values.insert(pre_sym(v.name)); }
            else if constexpr (std::is_same_v<T, Variable>) {
                throw std::invalid_argument("eval_values: term is not ground (variable " + v.name + ")");
            }
            else if constexpr (std::is_same_v<T, InfTerm>) { out.values.insert(pre_inf()); }
            else if constexpr (std::is_same_v<T, SupTerm>) { out.values.insert(pre_sup()); }
            else if constexpr (std::is_same_v<T, AbsoluteValue>) {
                auto arg = eval_rec(v.arg, limits);
                out.truncated = arg.truncated;
                for (auto const &r : arg.values) {
                    if (is_numeral(r)) { out.values.insert(pre_num(checked_abs(numeral_value(r)))); }
                }
            }
            else {
                auto lhs = eval_rec(v.lhs, limits);
                auto rhs = eval_rec(v.rhs, limits);
                out.truncated = lhs.truncated || rhs.truncated;
                for (auto const &r1 : lhs.values) {
                    if (!is_numeral(r1)) { continue; }
                    auto n1 = numeral_value(r1);
                    for (auto const &r2 : rhs.values) {
                        if (!is_numeral(r2)) { continue; }
                        auto n2 = numeral_value(r2);
                        switch (v.op) {
                            case BinOp::add: out.values.insert(pre_num(checked_add(n1, n2))); break;
                            case BinOp::sub: out.values.insert(pre_num(checked_sub(n1, n2))); break;
                            case BinOp::mul: out.values.insert(pre_num(checked_mul(n1, n2))); break;
                            case BinOp::div:
                                if (n2 != 0) { out.values.insert(pre_num(round_div(n1, n2))); }
                                break;
                            case BinOp::mod:
                                if (n2 != 0) {
                                    out.values.insert(pre_num(checked_sub(n1, checked_mul(n2, round_div(n1, n2)))));
                                }
                                break;
                            case BinOp::range: {
                                if (n1 > n2) { break; }
                                auto width = static_cast<std::uint64_t>(n2 - n1) + 1;
                                if (width > limits.interval_cap) {
                                    if (!limits.allow_truncation) {
                                        throw RefusalError("interval " + std::to_string(n1) + ".." +
                                                               std::to_string(n2) + " enumerates too many values",
                                                           width, limits.interval_cap);
                                    }
                                    out.truncated = true;
                                    width = limits.interval_cap;
                                }
                                for (std::uint64_t i = 0; i < width; ++i) {
                                    out.values.insert(pre_num(n1 + static_cast<std::int64_t>(i)));
                                }
                                break;
                            }
                        }
                    }
                }
            }
            return out;
        },
        t->data);
}

} // namespace

ValueSet eval_values(TermPtr const &t, Limits const &limits) { return eval_rec(t, limits); }

TupleValues eval_tuple_values(std::vector<TermPtr> const &ts, Limits const &limits) {
    TupleValues out;
    out.tuples.insert(std::vector<PrecomputedTerm>{});
    for (auto const &t : ts) {
        auto vs = eval_values(t, limits);
        out.truncated = out.truncated || vs.truncated;
        std::set<std::vector<PrecomputedTerm>> next;
        for (auto const &prefix : out.tuples) {
            for (auto const &r : vs.values) {
                auto tuple = prefix;
                tuple.push_back(r);
                next.insert(std::move(tuple));
            }
        }
        out.tuples = std::move(next);
    }
    return out;
}

// ---------------------------------------------------------------------------
// val_t(Z)

namespace {

class ValBuilder {
public:
    explicit ValBuilder(std::set<std::string> avoid) : avoid_{std::move(avoid)} {}

    FOFormulaPtr build(TermPtr const &t, FOTermPtr const &z) {
        return std::visit(
            [&](auto const &v) -> FOFormulaPtr {
                using T = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<T, Numeral>) { return f_cmp(z, Rel::eq, f_pre(pre_num(v.value))); }
                else if constexpr (std::is_same_v<T, SymbolicConstant>) {
                    return f_cmp(z, Rel::eq, f_pre(pre_sym(v.name)));
                }
                else if constexpr (std::is_same_v<T, Variable>) {
                    return f_cmp(z, Rel::eq, f_var(SortedVar{v.name, Sort::program}));
                }
                else if constexpr (std::is_same_v<T, InfTerm>) { return f_cmp(z, Rel::eq, f_pre(pre_inf())); }
                else if constexpr (std::is_same_v<T, SupTerm>) { return f_cmp(z, Rel::eq, f_pre(pre_sup())); }
                else if constexpr (std::is_same_v<T, AbsoluteValue>) {
                    auto names = fresh();
                    auto i = f_var(names.i);
                    return f_quant(Quant::exists, {names.i},
                                   f_and({build(v.arg, i), f_cmp(z, Rel::eq, f_arith(ArithOp::abs, {i}))}));
                }
                else {
                    auto names = fresh();
                    auto i = f_var(names.i);
                    auto j = f_var(names.j);
                    auto k = f_var(names.k);
                    switch (v.op) {
                        case BinOp::add:
                        case BinOp::sub:
                        case BinOp::mul: {
                            auto op = v.op == BinOp::add ? ArithOp::add
                                                         : v.op == BinOp::sub ? ArithOp::sub : ArithOp::mul;
                            return f_quant(Quant::exists, {names.i, names.j},
                                           f_and({f_cmp(z, Rel::eq, f_arith(op, {i, j})), build(v.lhs, i),
                                                  build(v.rhs, j)}));
                        }
                        case BinOp::div:
                            return f_quant(Quant::exists, {names.i, names.j, names.k},
                                           f_and({build(v.lhs, i), build(v.rhs, j), f1(i, j, k), f2(i, j, k, z)}));
                        case BinOp::mod:
                            return f_quant(Quant::exists, {names.i, names.j, names.k},
                                           f_and({build(v.lhs, i), build(v.rhs, j), f1(i, j, k), f3(i, j, k, z)}));
                        case BinOp::range:
                            return f_quant(Quant::exists, {names.i, names.j, names.k},
                                           f_and({f_cmp(z, Rel::eq, k), f_cmp(i, Rel::le, k), f_cmp(k, Rel::le, j),
                                                  build(v.lhs, i), build(v.rhs, j)}));
                    }
                    throw std::logic_error("unhandled operator");
                }
            },
            t->data);
    }

private:
    //! F1(I,J,K): K is |I| / |J| by the Euclidean bracketing of the quotient.
    static FOFormulaPtr f1(FOTermPtr const &i, FOTermPtr const &j, FOTermPtr const &k) {
        auto abs_i = f_arith(ArithOp::abs, {i});
        auto abs_j = f_arith(ArithOp::abs, {j});
        auto k1 = f_arith(ArithOp::add, {k, f_pre(pre_num(1))});
        return f_and({f_cmp(f_arith(ArithOp::mul, {k, abs_j}), Rel::le, abs_i),
                      f_cmp(abs_i, Rel::lt, f_arith(ArithOp::mul, {k1, abs_j}))});
    }

    //! F2(I,J,K,Z): Z is K or -K depending on the sign of I * J.
    static FOFormulaPtr f2(FOTermPtr const &i, FOTermPtr const &j, FOTermPtr const &k, FOTermPtr const &z) {
        auto prod = f_arith(ArithOp::mul, {i, j});
        auto zero = f_pre(pre_num(0));
        auto neg_k = f_arith(ArithOp::sub, {zero, k});
        return f_or({f_and({f_cmp(prod, Rel::ge, zero), f_cmp(z, Rel::eq, k)}),
                     f_and({f_cmp(prod, Rel::lt, zero), f_cmp(z, Rel::eq, neg_k)})});
    }

    //! F3(I,J,K,Z): Z is I -+ K * J depending on the sign of I * J.
    static FOFormulaPtr f3(FOTermPtr const &i, FOTermPtr const &j, FOTermPtr const &k, FOTermPtr const &z) {
        auto prod = f_arith(ArithOp::mul, {i, j});
        auto zero = f_pre(pre_num(0));
        auto kj = f_arith(ArithOp::mul, {k, j});
        return f_or({f_and({f_cmp(prod, Rel::ge, zero), f_cmp(z, Rel::eq, f_arith(ArithOp::sub, {i, kj}))}),
                     f_and({f_cmp(prod, Rel::lt, zero), f_cmp(z, Rel::eq, f_arith(ArithOp::add, {i, kj}))})});
    }

    struct Fresh {
        SortedVar i;
        SortedVar j;
        SortedVar k;
    };

    Fresh fresh() {
        for (;;) {
            auto n = std::to_string(++counter_);
            std::string i = "I" + n;
            std::string j = "J" + n;
            std::string k = "K" + n;
            if (avoid_.count(i) == 0 && avoid_.count(j) == 0 && avoid_.count(k) == 0) {
                return {SortedVar{i, Sort::integer}, SortedVar{j, Sort::integer}, SortedVar{k, Sort::integer}};
            }
        }
    }

    std::set<std::string> avoid_;
    unsigned counter_ = 0;
};

} // namespace

FOFormulaPtr val_formula(TermPtr const &t, std::string const &z, std::set<std::string> const &avoid) {
    std::set<std::string> names = avoid;
    names.insert(z);
    for (auto const &v : term_variables(t)) { names.insert(v); }
    return ValBuilder{std::move(names)}.build(t, f_var(SortedVar{z, Sort::program}));
}

} // namespace clsem
