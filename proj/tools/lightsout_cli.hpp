#pragma once

// Command-line front end. Exit codes: 0 ok, 1 usage/parse error, 2 invalid
// geometry or a computation-level failure (method mismatch, oracle
// disagreement, scan bound exceeded).
//
// JSON output is one object per invocation:
//   {"command": ..., "parameters": {...}, "result": {...}, "meta": {...}}
// Indices in JSON are 0-based (presses[i] is applied to board row i+1);
// human-readable output counts rows from 1. Exact (unbounded) integers are
// emitted as decimal strings, residues as JSON numbers. "meta" is omitted
// with --quiet-meta.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iterator>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lightsout/lightsout.hpp"

namespace lightsout::cli {

using json = nlohmann::ordered_json;

inline constexpr const char* version = "1.0.0";
inline constexpr std::uint64_t max_exact_terms = 100000;

enum exit_code : int { ok = 0, usage = 1, failure = 2 };

struct Style {
    bool color = false;

    std::string good(const std::string& s) const { return color ? "\033[32m" + s + "\033[0m" : s; }
    std::string bad(const std::string& s) const { return color ? "\033[31m" + s + "\033[0m" : s; }
};

struct OutputOptions {
    bool json = false;
    bool quiet_meta = false;
};

/// Raised inside a command to abort with a specific exit code.
struct command_error : std::runtime_error {
    command_error(int code, const std::string& what) : std::runtime_error(what), code(code) {}
    int code;
};

namespace detail {

inline json to_json(const std::vector<std::vector<Residue>>& m) {
    json a = json::array();
    for (const auto& row : m)
        a.push_back(row);
    return a;
}

inline void emit(std::ostream& out, const OutputOptions& opt, const std::string& command,
                 json params, json result) {
    json env;
    env["command"] = command;
    env["parameters"] = std::move(params);
    env["result"] = std::move(result);
    if (!opt.quiet_meta)
        env["meta"] = {{"tool", "lightsout"},
                       {"version", version},
                       {"indexing", "0-based; presses[i] is applied to row i+1"}};
    out << env.dump(2) << '\n';
}

template <typename T>
std::string join(const std::vector<T>& v, const char* sep = " ") {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? sep : "") << v[i];
    return os.str();
}

template <typename T>
bool constant(std::span<const T> v) {
    for (const auto& x : v)
        if (x != v.front())
            return false;
    return true;
}

inline bool uniform_rows(const std::vector<std::vector<Residue>>& m) {
    for (const auto& r : m)
        if (!constant(std::span<const Residue>(r)))
            return false;
    return true;
}

} // namespace detail

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
    std::uint64_t rows = 0, cols = 0, k = 0, q = 0;
    std::string grid;
};

inline int cmd_simulate(const SimulateArgs& a, bool uniform, const OutputOptions& opt,
                        const Style& style, std::ostream& out) {
    Board start = [&] {
        if (!uniform) {
            std::ifstream in(a.grid);
            if (!in)
                throw command_error(usage, "cannot open grid file '" + a.grid + "'");
            return read_grid(in);
        }
        return new_uniform({a.rows, a.cols, a.k, a.q});
    }();
    const auto t = one_pass(start);

    if (opt.json) {
        json params;
        if (uniform)
            params = {{"rows", a.rows}, {"cols", a.cols}, {"k", a.k}, {"q", a.q}};
        else
            params = {{"grid", a.grid}};
        json result = {{"input", {{"rows", start.rows()},
                                  {"cols", start.cols()},
                                  {"k", start.k()},
                                  {"grid", start.to_matrix()}}},
                       {"presses", detail::to_json(t.presses)},
                       {"row_states", detail::to_json(t.row_states)},
                       {"final_row", t.final_row},
                       {"final_board", t.final_board.to_matrix()},
                       {"solved", t.solved}};
        detail::emit(out, opt, "simulate", std::move(params), std::move(result));
        return ok;
    }

    out << "board " << start.rows() << " x " << start.cols() << ", k = " << start.k();
    if (uniform)
        out << ", all lights start at " << mod::neg(a.q, a.k) << " (q = " << a.q << ")";
    out << '\n';

    const bool scalar = uniform || (detail::uniform_rows(t.presses) &&
                                    detail::uniform_rows(t.row_states) &&
                                    detail::constant(std::span<const Residue>(t.final_row)));
    if (t.presses.empty())
        out << "single row: no presses\n";
    if (scalar) {
        if (!t.presses.empty())
            out << "press row  times  row state after\n";
        for (std::size_t i = 0; i < t.presses.size(); ++i)
            out << std::setw(9) << i + 2 << "  " << std::setw(5) << t.presses[i].front() << "  "
                << std::setw(15) << t.row_states[i].front() << '\n';
        out << "presses: [" << [&] {
            std::vector<Residue> p;
            for (const auto& r : t.presses)
                p.push_back(r.front());
            return detail::join(p, ", ");
        }() << "]\n";
    } else {
        out << "presses (row: per-column multiplicities):\n";
        for (std::size_t i = 0; i < t.presses.size(); ++i)
            out << "  row " << i + 2 << ": " << detail::join(t.presses[i]) << '\n';
        out << "final board:\n";
        for (const auto& r : t.final_board.to_matrix())
            out << "  " << detail::join(r) << '\n';
    }
    out << "last row: " << detail::join(t.final_row) << '\n';
    out << (t.solved ? style.good("SOLVED") : style.bad("UNSOLVED")) << '\n';
    return ok;
}

// ---------------------------------------------------------------- alpha

inline int cmd_alpha(std::uint64_t k, const std::string& method, const OutputOptions& opt,
                     std::ostream& out) {
    if (k < 1)
        throw command_error(usage, "K must be >= 1");
    const bool want_direct = method == "direct" || method == "both";
    const bool want_factored = method == "factored" || method == "both";
    if (want_factored && k < 2)
        throw command_error(usage, "factored method needs K >= 2");

    std::optional<AlphaResult> direct, factored;
    if (want_direct)
        direct = alpha_direct(k);
    if (want_factored)
        factored = alpha_factored(k);
    const bool agree = !(direct && factored) || direct->alpha == factored->alpha;

    if (opt.json) {
        json result;
        if (direct)
            result["direct"] = {{"alpha", direct->alpha}};
        if (factored) {
            json trace = json::array();
            for (const auto& e : factored->trace)
                trace.push_back(
                    {{"p", e.p}, {"s", e.s}, {"alpha", e.alpha}, {"rule", to_string(e.rule)}});
            result["factored"] = {{"alpha", factored->alpha}, {"trace", trace}};
        }
        if (direct && factored)
            result["agree"] = agree;
        detail::emit(out, opt, "alpha", {{"k", k}, {"method", method}}, std::move(result));
    } else {
        if (direct)
            out << "alpha(" << k << ") = " << direct->alpha << "  [direct-scan]\n";
        if (factored) {
            out << "alpha(" << k << ") = " << factored->alpha << "  [factored]\n";
            std::vector<std::uint64_t> parts;
            for (const auto& e : factored->trace) {
                out << "  alpha(" << e.p;
                if (e.s > 1)
                    out << '^' << e.s;
                out << ") = " << e.alpha << "  (" << to_string(e.rule) << ")\n";
                parts.push_back(e.alpha);
            }
            out << "  lcm(" << detail::join(parts, ", ") << ") = " << factored->alpha << '\n';
        }
    }
    if (!agree)
        throw command_error(failure, "direct and factored alpha disagree for k=" +
                                         std::to_string(k));
    return ok;
}

// ---------------------------------------------------------------- solvable

inline int cmd_solvable(std::uint64_t k, std::uint64_t q, std::optional<std::uint64_t> max_rows,
                        bool classes, const OutputOptions& opt, const Style& style,
                        std::ostream& out) {
    if (k < 2 || q >= k)
        throw command_error(usage, "need K >= 2 and 0 <= Q <= K-1");
    if (max_rows && *max_rows < 1)
        throw command_error(usage, "--max-rows must be >= 1");
    if (!max_rows)
        classes = true;

    json result;
    if (max_rows) {
        auto rows = solvable_rows_up_to(k, q, *max_rows);
        if (opt.json)
            result["rows"] = rows;
        else
            out << "solvable row counts up to " << *max_rows << ": "
                << (rows.empty() ? "(none)" : detail::join(rows)) << '\n';
    }
    if (classes) {
        auto rep = characterize(k, q);
        if (opt.json) {
            result["alpha"] = rep.alpha;
            result["period"] = rep.period;
            result["residues"] = rep.residues;
            result["alpha_classes"] = {0, rep.alpha - 1};
            result["complete"] = rep.complete;
        } else {
            out << "alpha(" << k << ") = " << rep.alpha << ", period = " << rep.period << '\n';
            out << "rule: rows == 0 or " << rep.alpha - 1 << " (mod " << rep.alpha
                << ") is always solvable\n";
            out << "solvable iff rows mod " << rep.period << " in {" << detail::join(rep.residues, ", ")
                << "}\n";
            if (rep.complete) {
                out << "complete: " << style.good("yes") << " (solvable iff rows == 0 or "
                    << rep.alpha - 1 << " (mod " << rep.alpha << "))\n";
            } else {
                std::vector<std::uint64_t> extra;
                std::set_difference(rep.residues.begin(), rep.residues.end(),
                                    rep.predicted.begin(), rep.predicted.end(),
                                    std::back_inserter(extra));
                out << "complete: " << style.bad("no") << " (extra classes mod " << rep.period
                    << ": " << detail::join(extra, ", ") << ")\n";
            }
        }
    }
    if (opt.json) {
        json params = {{"k", k}, {"q", q}};
        if (max_rows)
            params["max_rows"] = *max_rows;
        params["classes"] = classes;
        detail::emit(out, opt, "solvable", std::move(params), std::move(result));
    }
    return ok;
}

// ---------------------------------------------------------------- sequence

inline int cmd_sequence(std::uint64_t q, std::uint64_t n, std::optional<std::uint64_t> k,
                        bool exact, const OutputOptions& opt, std::ostream& out) {
    if (exact == k.has_value())
        throw command_error(usage, "give exactly one of --exact or --k");
    if (exact && n > max_exact_terms)
        throw command_error(usage, "--exact is limited to n <= " + std::to_string(max_exact_terms));
    if (k && (*k < 2 || q >= *k))
        throw command_error(usage, "need K >= 2 and 0 <= Q <= K-1");

    const auto seq = chase_sequence({q, k}, n);
    json values = json::array();
    std::ostringstream line;
    std::visit(
        [&](const auto& v) {
            for (std::size_t i = 0; i < v.size(); ++i) {
                line << (i ? " " : "") << v[i];
                if constexpr (std::is_same_v<std::decay_t<decltype(v[i])>, BigInt>)
                    values.push_back(v[i].str());
                else
                    values.push_back(v[i]);
            }
        },
        seq.values);

    if (opt.json) {
        json params = {{"q", q}, {"n", n}};
        if (k)
            params["k"] = *k;
        params["exact"] = exact;
        detail::emit(out, opt, "sequence", std::move(params), {{"values", values}});
    } else {
        out << line.str() << '\n';
    }
    return ok;
}

// ---------------------------------------------------------------- verify

struct OracleCase {
    std::uint64_t k, q, rows, cols;
    friend bool operator==(const OracleCase&, const OracleCase&) = default;
};

struct VerifySummary {
    std::uint64_t cases = 0;
    std::uint64_t passed = 0;
    std::vector<OracleCase> failures;
    /// Solvable cases whose row count lies outside the 0 / -1 (mod alpha) classes.
    std::vector<OracleCase> beyond_alpha;
};

using OracleCheck = std::function<bool(std::uint64_t, std::uint64_t, std::size_t, std::size_t)>;

/// Runs `check` over k in 2..k_max, q in 0..k-1, rows in 1..rows_max, ordered by (k, q, rows).
inline VerifySummary run_oracle_grid(std::uint64_t k_max, std::uint64_t rows_max,
                                     std::uint64_t cols, const OracleCheck& check = cross_validate) {
    VerifySummary sum;
    for (std::uint64_t k = 2; k <= k_max; ++k) {
        const auto alpha = alpha_factored(k).alpha;
        for (std::uint64_t q = 0; q < k; ++q) {
            const auto seq = s_sequence_mod(q, rows_max, k);
            for (std::uint64_t rows = 1; rows <= rows_max; ++rows) {
                ++sum.cases;
                OracleCase c{k, q, rows, cols};
                if (check(k, q, rows, cols))
                    ++sum.passed;
                else
                    sum.failures.push_back(c);
                if (q > 0 && seq[rows] == 0 && !in_alpha_classes(rows, alpha))
                    sum.beyond_alpha.push_back(c);
            }
        }
    }
    return sum;
}

inline int cmd_verify(std::uint64_t k_max, std::uint64_t rows_max, std::uint64_t cols,
                      const OutputOptions& opt, const Style& style, std::ostream& out,
                      const OracleCheck& check = cross_validate) {
    if (k_max < 2 || rows_max < 1)
        throw command_error(usage, "need --k-max >= 2 and --rows-max >= 1");
    if (cols < 3)
        throw invalid_geometry("cylinder needs at least 3 columns, got " + std::to_string(cols));

    const auto sum = run_oracle_grid(k_max, rows_max, cols, check);
    auto case_json = [](const OracleCase& c) {
        return json{{"k", c.k}, {"q", c.q}, {"rows", c.rows}, {"cols", c.cols}};
    };
    if (opt.json) {
        json failures = json::array(), beyond = json::array();
        for (const auto& c : sum.failures)
            failures.push_back(case_json(c));
        for (const auto& c : sum.beyond_alpha)
            beyond.push_back(case_json(c));
        detail::emit(out, opt, "verify", {{"k_max", k_max}, {"rows_max", rows_max}, {"cols", cols}},
                     {{"cases", sum.cases},
                      {"passed", sum.passed},
                      {"failed", sum.failures.size()},
                      {"failures", failures},
                      {"solvable_beyond_alpha", beyond}});
    } else {
        out << "checked " << sum.cases << " cases (k 2.." << k_max << ", all q, rows 1.."
            << rows_max << ", " << cols << " columns)\n";
        out << "passed: " << sum.passed << ", failed: " << sum.failures.size() << '\n';
        out << "solvable outside the alpha classes: " << sum.beyond_alpha.size() << '\n';
        for (const auto& c : sum.failures)
            out << style.bad("MISMATCH") << " k=" << c.k << " q=" << c.q << " rows=" << c.rows
                << " cols=" << c.cols << '\n';
        out << (sum.failures.empty() ? style.good("ALL PASS") : style.bad("FAIL")) << '\n';
    }
    return sum.failures.empty() ? ok : failure;
}

// ---------------------------------------------------------------- driver

/// Parses `args` (argv[0] excluded) and runs the selected command.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               Style style = {}) {
    CLI::App app{"Cylindrical Lights Out: one-pass chasing simulator and analyzer", "lightsout"};
    app.require_subcommand(1);
    app.set_version_flag("--version", version);

    OutputOptions opt;
    auto add_output_flags = [&](CLI::App* sub) {
        sub->add_flag("--json", opt.json, "Emit a single JSON object");
        sub->add_flag("--quiet-meta", opt.quiet_meta, "Omit the meta block from JSON output");
    };

    SimulateArgs sim;
    auto* simulate = app.add_subcommand("simulate", "Run one-pass chasing and print the transcript");
    auto* o_rows = simulate->add_option("--rows", sim.rows, "Number of rows")->check(CLI::PositiveNumber);
    auto* o_cols = simulate->add_option("--cols", sim.cols, "Number of columns (>= 3)");
    auto* o_k = simulate->add_option("--k", sim.k, "Number of light states");
    auto* o_q = simulate->add_option("--q", sim.q, "Start offset: lights begin at k - q");
    auto* o_grid = simulate->add_option("--grid", sim.grid, "Grid file to load instead of a uniform start");
    for (auto* o : {o_rows, o_cols, o_k, o_q})
        o->excludes(o_grid);
    add_output_flags(simulate);

    std::uint64_t alpha_k = 0;
    std::string method;
    auto* alpha = app.add_subcommand("alpha", "Restricted period alpha(K) of the Fibonacci numbers");
    alpha->add_option("K", alpha_k, "Modulus")->required();
    alpha->add_option("--method", method, "direct | factored | both")
        ->check(CLI::IsMember({"direct", "factored", "both"}));
    add_output_flags(alpha);

    std::uint64_t sol_k = 0, sol_q = 0, sol_n = 0;
    bool sol_classes = false;
    auto* solvable = app.add_subcommand("solvable", "Which row counts are one-pass solvable");
    solvable->add_option("--k", sol_k, "Number of light states")->required();
    solvable->add_option("--q", sol_q, "Start offset")->required();
    auto* o_max = solvable->add_option("--max-rows", sol_n, "List solvable row counts up to N");
    solvable->add_flag("--classes", sol_classes, "Report residue classes over one period");
    add_output_flags(solvable);

    std::uint64_t seq_q = 0, seq_n = 0, seq_k = 0;
    bool seq_exact = false;
    auto* sequence = app.add_subcommand("sequence", "Row states S_0..S_N");
    sequence->add_option("--q", seq_q, "Start offset")->required();
    sequence->add_option("--n", seq_n, "Last index")->required();
    auto* o_seq_k = sequence->add_option("--k", seq_k, "Reduce mod K");
    sequence->add_flag("--exact", seq_exact, "Exact integers");
    add_output_flags(sequence);

    std::uint64_t ver_k = 0, ver_rows = 0, ver_cols = 3;
    auto* verify = app.add_subcommand("verify", "Cross-check simulation against the recursion");
    verify->add_option("--k-max", ver_k, "Largest modulus")->required();
    verify->add_option("--rows-max", ver_rows, "Largest row count")->required();
    verify->add_option("--cols", ver_cols, "Columns (default 3)");
    add_output_flags(verify);

    std::vector<const char*> argv{"lightsout"};
    for (const auto& a : args)
        argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? ok : usage;
    }

    try {
        if (simulate->parsed()) {
            const bool uniform = o_grid->count() == 0;
            if (uniform && (!o_rows->count() || !o_cols->count() || !o_k->count() || !o_q->count()))
                throw command_error(usage, "simulate needs --rows --cols --k --q, or --grid FILE");
            if (uniform && sim.q >= sim.k)
                throw command_error(usage, "--q must lie in 0..k-1");
            return cmd_simulate(sim, uniform, opt, style, out);
        }
        if (alpha->parsed()) {
            if (method.empty())
                method = alpha_k >= 2 ? "both" : "direct";
            return cmd_alpha(alpha_k, method, opt, out);
        }
        if (solvable->parsed())
            return cmd_solvable(sol_k, sol_q, o_max->count() ? std::optional(sol_n) : std::nullopt,
                                sol_classes, opt, style, out);
        if (sequence->parsed())
            return cmd_sequence(seq_q, seq_n, o_seq_k->count() ? std::optional(seq_k) : std::nullopt,
                                seq_exact, opt, out);
        if (verify->parsed())
            return cmd_verify(ver_k, ver_rows, ver_cols, opt, style, out);
    } catch (const command_error& e) {
        err << "error: " << e.what() << '\n';
        return e.code;
    } catch (const invalid_geometry& e) {
        err << "error: " << e.what() << '\n';
        return failure;
    } catch (const grid_parse_error& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return usage;
    } catch (const bound_exceeded& e) {
        err << "internal error: " << e.what() << '\n';
        return failure;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << '\n';
        return failure;
    }
    return usage;
}

} // namespace lightsout::cli
