#pragma once

#include "arsys/bicharacter.hpp"
#include "arsys/groupoid.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace arsys {

/// A parsed problem: the ambient group (F, N), the braiding entries, and
/// optional run parameters carried in the input document.
struct ProblemSpec {
    std::size_t rank = 0;
    Int torsion_order = 1;
    std::vector<std::string> free_names;
    std::vector<GroupValue> entries; // row-major
    std::optional<std::size_t> cap;
};

/**
 * Parse the JSON input format:
 *   {"rank": n, "torsion_order": N, "free": ["q", ...],
 *    "matrix": [[entry, ...], ...], "cap": c?}
 * where entry is either the canonical object {"free": [...], "tors": k} or
 * a shorthand string such as "q^2*z^5", "-z^2", "1" ("-" multiplies by
 * z^(N/2) and requires even N).
 */
ProblemSpec parse_input(const std::string& text);

BraidingMatrix to_matrix(const ProblemSpec& spec);

/// Canonical shorthand for one value, e.g. "q^-2*z^3" or "1".
std::string render_value(const GroupValue& value, const std::vector<std::string>& names);

nlohmann::json value_to_json(const GroupValue& value);
nlohmann::json spec_to_json(const ProblemSpec& spec);

/// Deterministic DOT rendering of the exchange graph (nodes sorted by
/// coordinate key, pivot labels 1-based, one undirected edge per pair).
std::string exchange_graph_dot(const WeylGroupoid& groupoid);

struct RunOptions {
    std::size_t cap = kDefaultCap;
    bool json_format = false;
    std::string dot_path;       // empty: no DOT output
    std::string mode = "weyl";  // for equiv: "twist" or "weyl"
};

struct RunResult {
    int exit_code = 0;
    std::string text;
    nlohmann::json json;
};

/// Exit codes: finite 0, usage error 1, not arithmetic 2, cap exceeded 3,
/// certified infinite 4.
int exit_code_for(OutcomeKind kind);

RunResult run_classify(const ProblemSpec& spec, const RunOptions& options);
RunResult run_groupoid(const ProblemSpec& spec, const RunOptions& options);
RunResult run_equiv(const ProblemSpec& a, const ProblemSpec& b, const RunOptions& options);
RunResult run_table(const RunOptions& options);

} // namespace arsys
