// clsem : a semantics workbench for logic programs with conditional literals
// Copyright (c) 2026 clsem authors. MIT license (see LICENSE).

#include <clsem/fol.hh>
#include <clsem/grounder.hh>
#include <clsem/infinitary.hh>
#include <clsem/semantics.hh>
#include <clsem/solver_oracle.hh>
#include <clsem/syntax.hh>
#include <clsem/tau_ag.hh>
#include <clsem/tau_star.hh>

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace clsem;
using nlohmann::json;

// every exit code is documented and distinct:
constexpr int exit_ok = 0;           // command succeeded
constexpr int exit_usage = 1;        // bad flags or unreadable input
constexpr int exit_parse = 2;        // the program does not parse
constexpr int exit_refusal = 3;      // a size cap stopped the computation
constexpr int exit_mismatch = 4;     // the two semantics routes disagree
constexpr int exit_disagreement = 5; // an external solver disagrees

struct Options {
    std::string file = "-";
    Limits limits;
    std::string format = "text";
    bool sm = false;
    std::string route = "both";
    std::string solver;
    double timeout = 10.0;

    bool json_out() const { return format == "json"; }
    std::string input_name() const { return file == "-" ? "<stdin>" : file; }
};

std::string read_input(std::string const &file) {
    std::ostringstream buf;
    if (file == "-") {
        buf << std::cin.rdbuf();
    }
    else {
        std::ifstream in{file};
        if (!in) { throw std::runtime_error("cannot open " + file); }
        buf << in.rdbuf();
    }
    return buf.str();
}

std::vector<Predicate> intensional_list(Program const &p) {
    auto part = standard_partition(p);
    return {part.intensional.begin(), part.intensional.end()};
}

int cmd_translate(Options const &opt) {
    auto prog = parse_program(read_input(opt.file));
    auto theory = tau_star_program(prog);
    if (opt.json_out()) {
        json j;
        j["schema"] = "clsem-translate-1";
        j["sentences"] = json::array();
        for (auto const &f : theory.sentences) { j["sentences"].push_back(render(f)); }
        if (opt.sm) { j["sm"] = sm_render(theory, intensional_list(prog)); }
        std::cout << j.dump() << "\n";
        return exit_ok;
    }
    for (auto const &f : theory.sentences) { std::cout << render(f) << "\n"; }
    if (opt.sm) { std::cout << sm_render(theory, intensional_list(prog)) << "\n"; }
    return exit_ok;
}

int cmd_ground(Options const &opt) {
    auto prog = parse_program(read_input(opt.file));
    auto interp = make_standard_interpretation(prog, opt.limits);
    Diagnostics diag;
    auto theory = ground_theory(interp, standard_partition(prog), tau_star_program(prog),
                                opt.limits, &diag);
    for (auto const &note : diag.notes) { std::cerr << "note: " << note << "\n"; }
    if (opt.json_out()) {
        json j;
        j["schema"] = "clsem-ground-1";
        j["int_bound"] = opt.limits.int_bound;
        j["formulas"] = json::array();
        for (auto const &f : theory) { j["formulas"].push_back(render(f)); }
        j["notes"] = diag.notes;
        std::cout << j.dump() << "\n";
        return exit_ok;
    }
    for (auto const &f : theory) { std::cout << render(f) << "\n"; }
    return exit_ok;
}

int cmd_tau(Options const &opt) {
    auto prog = parse_program(read_input(opt.file));
    auto interp = make_standard_interpretation(prog, opt.limits);
    auto theory = tau_program(prog, interp.universe, opt.limits);
    if (opt.json_out()) {
        json j;
        j["schema"] = "clsem-tau-1";
        j["int_bound"] = opt.limits.int_bound;
        j["formulas"] = json::array();
        for (auto const &f : theory) { j["formulas"].push_back(render(f)); }
        std::cout << j.dump() << "\n";
        return exit_ok;
    }
    for (auto const &f : theory) { std::cout << render(f) << "\n"; }
    return exit_ok;
}

//! models by the configured route; exits instead of returning when the two
//! routes disagree, because that is never supposed to happen
std::vector<AtomSet> solve_models(Program const &prog, Options const &opt, int &rc) {
    rc = exit_ok;
    if (opt.route == "smdef") { return answer_sets(prog, opt.limits); }
    if (opt.route == "gringo") { return gringo_answer_sets(prog, opt.limits); }
    auto via_grounding = answer_sets(prog, opt.limits);
    auto direct = gringo_answer_sets(prog, opt.limits);
    if (via_grounding != direct) {
        std::cerr << "the two semantics routes disagree on this program:\n"
                  << render(compare_model_sets(via_grounding, direct)) << "\n";
        rc = exit_mismatch;
    }
    return via_grounding;
}

int cmd_solve(Options const &opt) {
    auto prog = parse_program(read_input(opt.file));
    int rc = exit_ok;
    auto models = solve_models(prog, opt, rc);
    if (rc != exit_ok) { return rc; }
    if (opt.json_out()) {
        json j;
        j["schema"] = "clsem-solve-1";
        j["int_bound"] = opt.limits.int_bound;
        j["route"] = opt.route;
        j["satisfiable"] = !models.empty();
        j["models"] = json::array();
        for (auto const &m : models) {
            json atoms = json::array();
            for (auto const &a : m) { atoms.push_back(render(a)); }
            j["models"].push_back(atoms);
        }
        std::cout << j.dump() << "\n";
        return exit_ok;
    }
    if (models.empty()) {
        std::cout << "UNSATISFIABLE\n";
        return exit_ok;
    }
    for (auto const &m : models) { std::cout << render(m) << "\n"; }
    return exit_ok;
}

int cmd_verify(Options const &opt) {
    auto prog = parse_program(read_input(opt.file));
    auto rep = verify_equivalence(prog, opt.limits, opt.input_name());
    if (opt.json_out()) {
        std::cout << to_json(rep, false) << "\n";
    }
    else {
        std::cout << render(rep, false);
    }
    std::cerr << "time: " << rep.seconds << "s\n";
    switch (rep.verdict) {
        case EquivalenceReport::Verdict::equivalent:     return exit_ok;
        case EquivalenceReport::Verdict::counterexample: return exit_mismatch;
        case EquivalenceReport::Verdict::refused:        return exit_refusal;
    }
    return exit_refusal;
}

int cmd_crosscheck(Options const &opt) {
    auto prog = parse_program(read_input(opt.file));

    auto emit = [&](std::string const &status, SolverRun const *run, ModelDiff const *diff,
                    std::size_t internal) {
        if (opt.json_out()) {
            json j;
            j["schema"] = "clsem-crosscheck-1";
            j["int_bound"] = opt.limits.int_bound;
            j["status"] = status;
            if (run != nullptr) {
                j["solver"] = run->binary;
                j["external_models"] = run->models.size();
            }
            j["internal_models"] = internal;
            if (diff != nullptr && !diff->equal()) {
                json only_internal = json::array();
                for (auto const &m : diff->only_left) { only_internal.push_back(render(m)); }
                json only_external = json::array();
                for (auto const &m : diff->only_right) { only_external.push_back(render(m)); }
                j["diff"] = {{"only_internal", only_internal}, {"only_external", only_external}};
            }
            std::cout << j.dump() << "\n";
        }
    };

    auto solver = find_solver(opt.solver);
    if (!solver) {
        emit("skipped", nullptr, nullptr, 0);
        if (!opt.json_out()) { std::cout << "SKIPPED: no solver executable configured\n"; }
        return exit_ok;
    }

    int rc = exit_ok;
    Options both = opt;
    both.route = "both";
    auto ours = solve_models(prog, both, rc);
    if (rc != exit_ok) { return rc; }

    auto run = run_external(render(prog), *solver, opt.timeout);
    if (run.status == SolverStatus::missing_binary) {
        emit("skipped", &run, nullptr, ours.size());
        if (!opt.json_out()) { std::cout << "SKIPPED: " << run.diagnostic << "\n"; }
        return exit_ok;
    }
    if (run.status != SolverStatus::ok) {
        emit(to_string(run.status), &run, nullptr, ours.size());
        std::cerr << "solver run unusable (" << to_string(run.status)
                  << "): " << run.diagnostic << "\n";
        return exit_refusal;
    }

    auto diff = compare_model_sets(ours, run.models);
    if (!diff.equal()) {
        emit("disagree", &run, &diff, ours.size());
        if (!opt.json_out()) { std::cout << render(diff) << "\n"; }
        return exit_disagreement;
    }
    emit("agree", &run, &diff, ours.size());
    if (!opt.json_out()) {
        std::cout << "AGREE: " << ours.size() << " model" << (ours.size() == 1 ? "" : "s")
                  << "\n";
    }
    return exit_ok;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"semantics workbench for logic programs with conditional literals"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App *sub) {
        sub->add_option("file", opt.file, "program file, or - for stdin");
        sub->add_option("--int-bound", opt.limits.int_bound,
                        "numerals in [-N, N] populate the universe")
            ->check(CLI::NonNegativeNumber)
            ->capture_default_str();
        sub->add_option("--eq-limit", opt.limits.equivalence_base_limit,
                        "largest atom base an equivalence sweep accepts")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        sub->add_option("--base-limit", opt.limits.stable_base_limit,
                        "largest atom base a model search accepts")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        sub->add_option("--instance-cap", opt.limits.instance_cap,
                        "rule instantiation / quantifier expansion cap")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        sub->add_option("--interval-cap", opt.limits.interval_cap,
                        "largest value count an interval term may take")
            ->check(CLI::PositiveNumber)
            ->capture_default_str();
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };

    auto *translate = app.add_subcommand("translate", "print the first-order translation");
    add_common(translate);
    translate->add_flag("--sm", opt.sm, "also print the stable-model operator rendering");

    auto *ground = app.add_subcommand(
        "ground", "print the first-order translation grounded over the bounded universe");
    add_common(ground);

    auto *tau = app.add_subcommand("tau", "print the direct propositional translation");
    add_common(tau);

    auto *solve = app.add_subcommand("solve", "enumerate models, one per line");
    add_common(solve);
    solve->add_option("--route", opt.route, "which semantics route to run")
        ->check(CLI::IsMember({"smdef", "gringo", "both"}))
        ->capture_default_str();

    auto *verify = app.add_subcommand(
        "verify", "check that both translation routes agree on every interpretation");
    add_common(verify);

    auto *crosscheck = app.add_subcommand(
        "crosscheck", "compare models with an external solver executable");
    add_common(crosscheck);
    crosscheck->add_option("--solver", opt.solver,
                           "solver executable (default: $CLSEM_SOLVER, then clingo on PATH)");
    crosscheck->add_option("--timeout", opt.timeout, "seconds before the solver is killed")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    }
    catch (CLI::ParseError const &e) {
        int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*translate) { return cmd_translate(opt); }
        if (*ground) { return cmd_ground(opt); }
        if (*tau) { return cmd_tau(opt); }
        if (*solve) { return cmd_solve(opt); }
        if (*verify) { return cmd_verify(opt); }
        if (*crosscheck) { return cmd_crosscheck(opt); }
    }
    catch (ParseError const &e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return exit_parse;
    }
    catch (RefusalError const &e) {
        std::cerr << "refused: " << e.what() << "\n";
        return exit_refusal;
    }
    catch (std::exception const &e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    }
    return exit_usage;
}
