// clsem : a semantics workbench for logic programs with conditional literals
// Copyright (c) 2026 clsem authors. MIT license (see LICENSE).

#ifndef CLSEM_SOLVER_ORACLE_HH
#define CLSEM_SOLVER_ORACLE_HH

#include <clsem/syntax.hh>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace clsem {

// ---------------------------------------------------------------------------
// external solver cross-check
//
// Runs a user-supplied ASP solver executable on a program and parses its
// plain-text output into model lists comparable with our own enumeration.
// Nothing here bundles or links a solver; a missing binary is an expected,
// non-fatal outcome.

enum class SolverStatus {
    ok,             //!< ran to completion and the output was understood
    missing_binary, //!< the executable could not be found or started
    timeout,        //!< killed after the deadline passed
    parse_trouble,  //!< ran, but the output did not follow the expected format
};

char const *to_string(SolverStatus s);

//! One solver invocation: what ran, how it ended, and what it said.
struct SolverRun {
    SolverStatus status = SolverStatus::missing_binary;
    std::string binary;
    std::vector<std::string> args;
    //! exit code when the process ran to completion, -1 otherwise
    int exit_code = -1;
    //! meaningful only when status is ok
    bool satisfiable = false;
    //! parsed models in canonical order; present only when status is ok
    std::vector<AtomSet> models;
    //! captured standard output, kept verbatim for diagnosis
    std::string raw;
    //! why the run is not usable, or empty when status is ok
    std::string diagnostic;
};

//! environment variable naming the default solver executable
inline constexpr char const *solver_env_var = "CLSEM_SOLVER";

//! Resolve the solver to use: a non-empty hint wins, then $CLSEM_SOLVER, then
//! a "clingo" executable on PATH. A configured path that is not executable
//! yields nullopt rather than a silent fallback.
std::optional<std::string> find_solver(std::string const &hint = "");

//! A single atom in solver output: a lowercase predicate over numerals,
//! lowercase constants, #inf, or #sup. Anything richer (nested functions,
//! strings, tuples) is outside the supported fragment and yields nullopt.
std::optional<GroundAtom> parse_solver_atom(std::string_view text);

struct ParsedOutput {
    //! the output carried a SATISFIABLE or UNSATISFIABLE verdict and every
    //! answer line parsed
    bool recognized = false;
    bool satisfiable = false;
    std::vector<AtomSet> models; //!< canonical order
    std::string diagnostic;      //!< first thing that stopped recognition
};

//! Parse "Answer: k" blocks (the model is the line that follows, possibly
//! empty) plus the final SATISFIABLE/UNSATISFIABLE verdict.
ParsedOutput parse_solver_output(std::string const &text);

//! Run solver_path on program_text (written to a temporary file) in
//! enumerate-all-models mode, capture stdout, and parse it. The process is
//! killed once timeout_seconds pass.
SolverRun run_external(std::string const &program_text, std::string const &solver_path,
                       double timeout_seconds = 10.0,
                       std::vector<std::string> const &extra_args = {});

//! Order-insensitive difference of two model lists.
struct ModelDiff {
    std::vector<AtomSet> only_left;
    std::vector<AtomSet> only_right;
    bool equal() const { return only_left.empty() && only_right.empty(); }
};

ModelDiff compare_model_sets(std::vector<AtomSet> const &left,
                             std::vector<AtomSet> const &right);
std::string render(ModelDiff const &d);

} // namespace clsem

#endif // CLSEM_SOLVER_ORACLE_HH
