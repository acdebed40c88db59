// clsem : a semantics workbench for logic programs with conditional literals
// Copyright (c) 2026 clsem authors. MIT license (see LICENSE).

#ifndef CLSEM_VALUES_HH
#define CLSEM_VALUES_HH

#include <clsem/fol.hh>
#include <clsem/syntax.hh>

namespace clsem {

//! The finite set of precomputed values a ground term stands for.
struct ValueSet {
    std::set<PrecomputedTerm> values;
    //! Set when an interval enumeration hit the configured cap.
    bool truncated = false;
};

//! Integer division rounded towards zero (floor for quotients >= 0, ceiling
//! below). Callers must rule out n2 = 0.
std::int64_t round_div(std::int64_t n1, std::int64_t n2);

//! All values of a ground term:
//!   - numerals, symbolic constants, #inf and #sup stand for themselves;
//!   - |t1| collects |n| for the numerals n among the values of t1;
//!   - t1 + t2, t1 - t2, t1 * t2 combine numeral values pointwise;
//!   - t1 / t2 collects round(n1/n2) and t1 \ t2 collects n1 - n2*round(n1/n2)
//!     for numeral values with n2 != 0;
//!   - t1 .. t2 collects every m with n1 <= m <= n2.
//! Non-numeral operands contribute nothing to arithmetic results. Interval
//! enumerations larger than limits.interval_cap throw RefusalError unless
//! limits.allow_truncation is set, in which case the result is cut off there
//! and flagged.
ValueSet eval_values(TermPtr const &t, Limits const &limits = {});

//! Values of a term tuple: the Cartesian product of the member value sets.
//! The empty tuple list yields the singleton empty tuple.
struct TupleValues {
    std::set<std::vector<PrecomputedTerm>> tuples;
    bool truncated = false;
};
TupleValues eval_tuple_values(std::vector<TermPtr> const &ts, Limits const &limits = {});

//! The first-order formula val_t(Z) expressing "Z is a value of t":
//!   - Z = t for leaves;
//!   - exists I (val_t1(I) and Z = |I|) for |t1|;
//!   - exists I J (Z = I o J and val_t1(I) and val_t2(J)) for o in {+,-,*};
//!   - exists I J K (val_t1(I) and val_t2(J) and F1(I,J,K) and F2(I,J,K,Z))
//!     for t1 / t2, and with F3(I,J,K,Z) in place of F2 for t1 \ t2, where
//!       F1(I,J,K) = K * |J| <= |I| and |I| < (K+1) * |J|
//!       F2(I,J,K,Z) = (I * J >= 0 and Z = K) or (I * J < 0 and Z = -K)
//!       F3(I,J,K,Z) = (I * J >= 0 and Z = I - K * J)
//!                     or (I * J < 0 and Z = I + K * J);
//!   - exists I J K (Z = K and I <= K and K <= J and val_t1(I) and val_t2(J))
//!     for t1 .. t2.
//! Bound integer variables are named I1, J1, K1, I2, ... by a counter in
//! pre-order; indices whose names collide with z, a variable of t, or a name
//! in avoid are skipped. z itself is free in the result (program-sorted).
FOFormulaPtr val_formula(TermPtr const &t, std::string const &z, std::set<std::string> const &avoid = {});

} // namespace clsem

#endif // CLSEM_VALUES_HH
