// clsem : a semantics workbench for logic programs with conditional literals
// Copyright (c) 2026 clsem authors. MIT license (see LICENSE).

#include <clsem/solver_oracle.hh>

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/stat.h>
#include <sys/wait.h>
#include <unistd.h>

namespace clsem {

namespace {

bool is_executable(std::string const &path) {
    struct stat st;
    return ::stat(path.c_str(), &st) == 0 && S_ISREG(st.st_mode)
           && ::access(path.c_str(), X_OK) == 0;
}

std::optional<std::string> search_path(std::string const &name) {
    char const *path = std::getenv("PATH");
    if (path == nullptr) { return std::nullopt; }
    std::istringstream dirs{path};
    std::string dir;
    while (std::getline(dirs, dir, ':')) {
        if (dir.empty()) { continue; }
        auto candidate = dir + "/" + name;
        if (is_executable(candidate)) { return candidate; }
    }
    return std::nullopt;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

bool is_lower_name(std::string_view s) {
    if (s.empty() || !std::islower(static_cast<unsigned char>(s.front()))) { return false; }
    return std::all_of(s.begin(), s.end(), [](unsigned char c) {
        return std::isalnum(c) || c == '_';
    });
}

std::optional<PrecomputedTerm> parse_argument(std::string_view s) {
    if (s == "#inf") { return pre_inf(); }
    if (s == "#sup") { return pre_sup(); }
    if (is_lower_name(s)) { return pre_sym(std::string{s}); }
    auto digits = s;
    if (!digits.empty() && digits.front() == '-') { digits.remove_prefix(1); }
    if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](unsigned char c) {
            return std::isdigit(c);
        })) {
        errno = 0;
        char *end = nullptr;
        std::string buf{s};
        long long n = std::strtoll(buf.c_str(), &end, 10);
        if (errno == 0 && end != nullptr && *end == '\0') { return pre_num(n); }
    }
    return std::nullopt;
}

//! scratch file that cleans up after itself
struct TempFile {
    std::string path;
    explicit TempFile(std::string const &contents) {
        char name[] = "/tmp/clsem-solver-XXXXXX";
        int fd = ::mkstemp(name);
        if (fd < 0) { throw std::runtime_error("cannot create temporary file"); }
        path = name;
        auto const *data = contents.data();
        auto left = contents.size();
        while (left > 0) {
            auto n = ::write(fd, data, left);
            if (n < 0) {
                ::close(fd);
                throw std::runtime_error("cannot write temporary file");
            }
            data += n;
            left -= static_cast<std::size_t>(n);
        }
        ::close(fd);
    }
    ~TempFile() { ::unlink(path.c_str()); }
    TempFile(TempFile const &) = delete;
    TempFile &operator=(TempFile const &) = delete;
};

} // namespace

char const *to_string(SolverStatus s) {
    switch (s) {
        case SolverStatus::ok:             return "ok";
        case SolverStatus::missing_binary: return "missing binary";
        case SolverStatus::timeout:        return "timeout";
        case SolverStatus::parse_trouble:  return "parse trouble";
    }
    return "unknown";
}

std::optional<std::string> find_solver(std::string const &hint) {
    if (!hint.empty()) {
        if (is_executable(hint)) { return hint; }
        if (hint.find('/') == std::string::npos) { return search_path(hint); }
        return std::nullopt;
    }
    if (char const *env = std::getenv(solver_env_var); env != nullptr && *env != '\0') {
        return find_solver(env);
    }
    return search_path("clingo");
}

std::optional<GroundAtom> parse_solver_atom(std::string_view text) {
    text = trim(text);
    auto open = text.find('(');
    if (open == std::string_view::npos) {
        if (!is_lower_name(text)) { return std::nullopt; }
        return GroundAtom{std::string{text}, {}};
    }
    if (text.back() != ')') { return std::nullopt; }
    auto name = text.substr(0, open);
    if (!is_lower_name(name)) { return std::nullopt; }
    auto inside = text.substr(open + 1, text.size() - open - 2);
    std::vector<PrecomputedTerm> args;
    std::size_t start = 0;
    while (true) {
        auto comma = inside.find(',', start);
        auto piece = trim(inside.substr(start, comma - start));
        auto arg = parse_argument(piece);
        if (!arg) { return std::nullopt; }
        args.push_back(std::move(*arg));
        if (comma == std::string_view::npos) { break; }
        start = comma + 1;
    }
    return GroundAtom{std::string{name}, std::move(args)};
}

ParsedOutput parse_solver_output(std::string const &text) {
    ParsedOutput out;
    std::vector<std::string> lines;
    std::istringstream in{text};
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') { line.pop_back(); }
        lines.push_back(line);
    }
    bool verdict_seen = false;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto stripped = trim(lines[i]);
        if (stripped.rfind("Answer:", 0) == 0) {
            if (i + 1 >= lines.size()) {
                out.diagnostic = "output ends right after an answer header";
                return out;
            }
            AtomSet model;
            std::istringstream atoms{lines[++i]};
            std::string word;
            while (atoms >> word) {
                auto atom = parse_solver_atom(word);
                if (!atom) {
                    out.diagnostic = "atom \"" + word + "\" is outside the supported fragment";
                    return out;
                }
                model.insert(std::move(*atom));
            }
            out.models.push_back(std::move(model));
        }
        else if (stripped == "SATISFIABLE") {
            verdict_seen = true;
            out.satisfiable = true;
        }
        else if (stripped == "UNSATISFIABLE") {
            verdict_seen = true;
            out.satisfiable = false;
        }
    }
    if (!verdict_seen) {
        out.diagnostic = "no SATISFIABLE or UNSATISFIABLE verdict in the output";
        return out;
    }
    if (!out.satisfiable && !out.models.empty()) {
        out.diagnostic = "output claims unsatisfiable yet lists answers";
        return out;
    }
    std::sort(out.models.begin(), out.models.end());
    out.models.erase(std::unique(out.models.begin(), out.models.end()), out.models.end());
    out.recognized = true;
    return out;
}

SolverRun run_external(std::string const &program_text, std::string const &solver_path,
                       double timeout_seconds, std::vector<std::string> const &extra_args) {
    SolverRun run;
    run.binary = solver_path;
    run.args = {"--models=0"};
    run.args.insert(run.args.end(), extra_args.begin(), extra_args.end());

    TempFile file{program_text};
    run.args.push_back(file.path);

    int out_pipe[2];
    if (::pipe(out_pipe) != 0) {
        run.diagnostic = "cannot create a pipe";
        run.status = SolverStatus::parse_trouble;
        return run;
    }

    pid_t pid = ::fork();
    if (pid < 0) {
        ::close(out_pipe[0]);
        ::close(out_pipe[1]);
        run.diagnostic = "cannot fork";
        run.status = SolverStatus::parse_trouble;
        return run;
    }
    if (pid == 0) {
        ::dup2(out_pipe[1], STDOUT_FILENO);
        ::dup2(out_pipe[1], STDERR_FILENO);
        ::close(out_pipe[0]);
        ::close(out_pipe[1]);
        std::vector<char *> argv;
        argv.push_back(const_cast<char *>(solver_path.c_str()));
        for (auto const &a : run.args) { argv.push_back(const_cast<char *>(a.c_str())); }
        argv.push_back(nullptr);
        ::execvp(solver_path.c_str(), argv.data());
        ::_exit(errno == ENOENT ? 127 : 126);
    }

    ::close(out_pipe[1]);
    auto deadline = std::chrono::steady_clock::now()
                    + std::chrono::duration<double>(timeout_seconds);
    bool timed_out = false;
    char buf[4096];
    while (true) {
        auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
            deadline - std::chrono::steady_clock::now());
        if (left.count() <= 0) {
            timed_out = true;
            break;
        }
        struct pollfd pfd{out_pipe[0], POLLIN, 0};
        int ready = ::poll(&pfd, 1, static_cast<int>(left.count()));
        if (ready == 0) {
            timed_out = true;
            break;
        }
        if (ready < 0) {
            if (errno == EINTR) { continue; }
            break;
        }
        auto n = ::read(out_pipe[0], buf, sizeof buf);
        if (n <= 0) { break; }
        run.raw.append(buf, static_cast<std::size_t>(n));
    }
    ::close(out_pipe[0]);

    // the child may outlive its output; give it until the deadline to exit
    int wait_status = 0;
    if (!timed_out) {
        while (true) {
            auto r = ::waitpid(pid, &wait_status, WNOHANG);
            if (r == pid || (r < 0 && errno != EINTR)) { break; }
            if (std::chrono::steady_clock::now() >= deadline) {
                timed_out = true;
                break;
            }
            ::usleep(2000);
        }
    }
    if (timed_out) {
        ::kill(pid, SIGKILL);
        while (::waitpid(pid, &wait_status, 0) < 0 && errno == EINTR) {}
    }

    if (timed_out) {
        run.status = SolverStatus::timeout;
        std::ostringstream msg;
        msg << "killed after " << timeout_seconds << "s";
        run.diagnostic = msg.str();
        return run;
    }
    if (WIFEXITED(wait_status)) { run.exit_code = WEXITSTATUS(wait_status); }
    if (run.exit_code == 126 || run.exit_code == 127) {
        run.status = SolverStatus::missing_binary;
        run.diagnostic = "cannot execute " + solver_path;
        return run;
    }

    auto parsed = parse_solver_output(run.raw);
    if (!parsed.recognized) {
        run.status = SolverStatus::parse_trouble;
        run.diagnostic = parsed.diagnostic;
        return run;
    }
    run.status = SolverStatus::ok;
    run.satisfiable = parsed.satisfiable;
    run.models = std::move(parsed.models);
    return run;
}

ModelDiff compare_model_sets(std::vector<AtomSet> const &left,
                             std::vector<AtomSet> const &right) {
    auto a = left;
    auto b = right;
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    std::sort(b.begin(), b.end());
    b.erase(std::unique(b.begin(), b.end()), b.end());
    ModelDiff diff;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(diff.only_left));
    std::set_difference(b.begin(), b.end(), a.begin(), a.end(),
                        std::back_inserter(diff.only_right));
    return diff;
}

std::string render(ModelDiff const &d) {
    if (d.equal()) { return "model lists agree"; }
    std::ostringstream out;
    out << "model lists differ";
    for (auto const &m : d.only_left) { out << "\n  only left:  {" << render(m) << "}"; }
    for (auto const &m : d.only_right) { out << "\n  only right: {" << render(m) << "}"; }
    return out.str();
}

} // namespace clsem
