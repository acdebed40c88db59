// clsem : a semantics workbench for logic programs with conditional literals
// Copyright (c) 2026 clsem authors. MIT license (see LICENSE).

#ifndef CLSEM_COMMON_HH
#define CLSEM_COMMON_HH

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace clsem {

//! Parse failure with 1-based source location.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string const &msg, int line, int column)
        : std::runtime_error(msg + " at " + std::to_string(line) + ":" + std::to_string(column))
        , line_{line}
        , column_{column} {}
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_;
    int column_;
};

//! Explicit refusal: an enumeration would exceed a configured cap.
//! Refusals are never silent truncations; callers see the offending size.
class RefusalError : public std::runtime_error {
public:
    RefusalError(std::string const &msg, std::uint64_t size, std::uint64_t cap)
        : std::runtime_error(msg + " (size " + std::to_string(size) + " exceeds cap " + std::to_string(cap) + ")")
        , size_{size}
        , cap_{cap} {}
    std::uint64_t size() const { return size_; }
    std::uint64_t cap() const { return cap_; }

private:
    std::uint64_t size_;
    std::uint64_t cap_;
};

//! Enumeration caps and universe bound shared across the pipeline.
struct Limits {
    //! numerals in [-int_bound, int_bound] populate the universe
    std::int64_t int_bound = 8;
    //! interval terms may enumerate at most this many values
    std::uint64_t interval_cap = 10000;
    //! rule instantiation / quantifier expansion cap
    std::uint64_t instance_cap = 100000;
    //! HT-equivalence sweeps accept at most this many atoms (3^n pairs)
    std::uint64_t equivalence_base_limit = 12;
    //! equilibrium model search accepts at most this many atoms (2^n candidates)
    std::uint64_t stable_base_limit = 20;
    //! permit partial interval enumeration (sets ValueSet::truncated) instead of refusing
    bool allow_truncation = false;
};

//! Collects non-fatal notes (out-of-universe values and the like).
struct Diagnostics {
    std::vector<std::string> notes;
    void note(std::string msg) {
        if (notes.size() < 1000) { notes.emplace_back(std::move(msg)); }
    }
    bool empty() const { return notes.empty(); }
};

//! Checked 64-bit arithmetic; all overflow surfaces as std::overflow_error.
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) { throw std::overflow_error("integer overflow in addition"); }
    return r;
}
inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_sub_overflow(a, b, &r)) { throw std::overflow_error("integer overflow in subtraction"); }
    return r;
}
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) { throw std::overflow_error("integer overflow in multiplication"); }
    return r;
}
inline std::int64_t checked_abs(std::int64_t a) {
    if (a == INT64_MIN) { throw std::overflow_error("integer overflow in absolute value"); }
    return a < 0 ? -a : a;
}

} // namespace clsem

#endif // CLSEM_COMMON_HH
