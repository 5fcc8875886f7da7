#include "arsys/cli.hpp"

#include "arsys/classification.hpp"
#include "arsys/dimension.hpp"
#include "arsys/equivalence.hpp"
#include "arsys/rank2.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace arsys {

using nlohmann::json;

namespace {

GroupValue parse_shorthand(const std::string& text, std::size_t free_rank,
                           Int modulus, const std::vector<std::string>& names)
{
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s.push_back(c);
    if (s.empty())
        throw std::invalid_argument("entry: empty shorthand");

    bool minus = false;
    if (s.front() == '-') {
        if (modulus % 2 != 0)
            throw std::invalid_argument("entry '" + text +
                                        "': '-' needs even torsion order");
        minus = true;
        s.erase(s.begin());
    }
    if (s.empty())
        throw std::invalid_argument("entry '" + text + "': nothing after '-'");

    std::vector<Int> free(free_rank, 0);
    Int tors = minus ? modulus / 2 : 0;

    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t star = s.find('*', pos);
        std::string token = s.substr(pos, star == std::string::npos ? star : star - pos);
        pos = star == std::string::npos ? s.size() : star + 1;
        if (token.empty())
            throw std::invalid_argument("entry '" + text + "': empty factor");
        if (token == "1")
            continue;

        std::size_t caret = token.find('^');
        std::string name = token.substr(0, caret);
        Int exp = 1;
        if (caret != std::string::npos) {
            std::string es = token.substr(caret + 1);
            try {
                std::size_t used = 0;
                exp = std::stoll(es, &used);
                if (used != es.size())
                    throw std::invalid_argument("");
            } catch (...) {
                throw std::invalid_argument("entry '" + text + "': bad exponent '" + es +
                                            "'");
            }
        }
        if (name == "z") {
            tors = mod_norm(tors + mod_norm(exp, modulus), modulus);
            continue;
        }
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end())
            throw std::invalid_argument("entry '" + text + "': unknown parameter '" +
                                        name + "'");
        std::size_t index = static_cast<std::size_t>(it - names.begin());
        free[index] = checked_add(free[index], exp);
    }
    return GroupValue(std::move(free), tors, modulus);
}

GroupValue parse_entry(const json& entry, std::size_t free_rank, Int modulus,
                       const std::vector<std::string>& names)
{
    if (entry.is_string())
        return parse_shorthand(entry.get<std::string>(), free_rank, modulus, names);
    if (!entry.is_object())
        throw std::invalid_argument("entry: expected object or shorthand string");
    std::vector<Int> free(free_rank, 0);
    if (entry.contains("free")) {
        const json& f = entry.at("free");
        if (!f.is_array() || f.size() != free_rank)
            throw std::invalid_argument("entry: 'free' length != number of parameters");
        for (std::size_t i = 0; i < free_rank; ++i)
            free[i] = f[i].get<Int>();
    }
    Int tors = 0;
    if (entry.contains("tors")) {
        tors = entry.at("tors").get<Int>();
        if (tors < 0 || tors >= modulus)
            throw std::invalid_argument("entry: 'tors' out of [0, N)");
    }
    return GroupValue(std::move(free), tors, modulus);
}

std::string render_vector(const IntVector& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

std::string render_basis(const OrderedBasis& basis)
{
    std::string s;
    for (std::size_t i = 0; i < basis.rank(); ++i) {
        if (i)
            s += ";";
        s += render_vector(basis[i]);
    }
    return s;
}

json vector_to_json(const IntVector& v)
{
    return json(v);
}

json basis_to_json(const OrderedBasis& basis)
{
    json a = json::array();
    for (const auto& v : basis.vectors())
        a.push_back(vector_to_json(v));
    return a;
}

json twist_class_to_json(const TwistClass& t)
{
    json diag = json::array();
    for (const auto& v : t.diagonal)
        diag.push_back(value_to_json(v));
    json prods = json::array();
    for (const auto& v : t.products)
        prods.push_back(value_to_json(v));
    return json{{"diagonal", diag}, {"products", prods}};
}

} // namespace

ProblemSpec parse_input(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("input: malformed JSON: ") + e.what());
    }
    if (!doc.is_object())
        throw std::invalid_argument("input: top level must be an object");

    ProblemSpec spec;
    if (!doc.contains("rank") || !doc.contains("matrix"))
        throw std::invalid_argument("input: 'rank' and 'matrix' are required");
    Int rank = doc.at("rank").get<Int>();
    if (rank < 1)
        throw std::invalid_argument("input: rank must be >= 1");
    spec.rank = static_cast<std::size_t>(rank);

    spec.torsion_order = doc.value("torsion_order", Int{1});
    if (spec.torsion_order < 1)
        throw std::invalid_argument("input: torsion_order must be >= 1");

    if (doc.contains("free")) {
        for (const auto& name : doc.at("free")) {
            std::string n = name.get<std::string>();
            if (n.empty() || n == "z")
                throw std::invalid_argument("input: invalid parameter name '" + n + "'");
            spec.free_names.push_back(std::move(n));
        }
    }

    const json& matrix = doc.at("matrix");
    if (!matrix.is_array() || matrix.size() != spec.rank)
        throw std::invalid_argument("input: matrix must be a rank x rank array");
    for (const auto& row : matrix) {
        if (!row.is_array() || row.size() != spec.rank)
            throw std::invalid_argument("input: matrix must be square");
        for (const auto& entry : row)
            spec.entries.push_back(parse_entry(entry, spec.free_names.size(),
                                               spec.torsion_order, spec.free_names));
    }

    if (doc.contains("cap")) {
        Int cap = doc.at("cap").get<Int>();
        if (cap < 1)
            throw std::invalid_argument("input: cap must be >= 1");
        spec.cap = static_cast<std::size_t>(cap);
    }
    return spec;
}

BraidingMatrix to_matrix(const ProblemSpec& spec)
{
    return BraidingMatrix(spec.rank, spec.entries);
}

std::string render_value(const GroupValue& value, const std::vector<std::string>& names)
{
    std::string s;
    for (std::size_t i = 0; i < value.free().size(); ++i) {
        Int e = value.free()[i];
        if (e == 0)
            continue;
        if (!s.empty())
            s += "*";
        s += i < names.size() ? names[i] : "q" + std::to_string(i + 1);
        if (e != 1)
            s += "^" + std::to_string(e);
    }
    if (value.tors() != 0) {
        if (!s.empty())
            s += "*";
        s += "z";
        if (value.tors() != 1)
            s += "^" + std::to_string(value.tors());
    }
    return s.empty() ? "1" : s;
}

json value_to_json(const GroupValue& value)
{
    return json{{"free", value.free()}, {"tors", value.tors()}};
}

json spec_to_json(const ProblemSpec& spec)
{
    json matrix = json::array();
    for (std::size_t i = 0; i < spec.rank; ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < spec.rank; ++j)
            row.push_back(value_to_json(spec.entries[i * spec.rank + j]));
        matrix.push_back(std::move(row));
    }
    json doc{{"rank", spec.rank},
             {"torsion_order", spec.torsion_order},
             {"free", spec.free_names},
             {"matrix", std::move(matrix)}};
    if (spec.cap)
        doc["cap"] = *spec.cap;
    return doc;
}

std::string exchange_graph_dot(const WeylGroupoid& groupoid)
{
    // Stable node ids: sort bases by coordinate key.
    std::vector<std::size_t> order(groupoid.nodes().size());
    for (std::size_t i = 0; i < order.size(); ++i)
        order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return groupoid.nodes()[a].key() < groupoid.nodes()[b].key();
    });
    std::vector<std::size_t> rank_of(order.size());
    for (std::size_t i = 0; i < order.size(); ++i)
        rank_of[order[i]] = i;

    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> edges;
    for (const GroupoidEdge& e : groupoid.edges()) {
        std::size_t a = rank_of[e.from], b = rank_of[e.to];
        edges.emplace(std::min(a, b), std::max(a, b), e.pivot);
    }

    std::ostringstream out;
    out << "graph exchange {\n";
    for (std::size_t i = 0; i < order.size(); ++i)
        out << "  n" << i << " [label=\"" << render_basis(groupoid.nodes()[order[i]])
            << "\"];\n";
    for (const auto& [a, b, pivot] : edges)
        out << "  n" << a << " -- n" << b << " [label=\"" << (pivot + 1) << "\"];\n";
    out << "}\n";
    return out.str();
}

int exit_code_for(OutcomeKind kind)
{
    switch (kind) {
    case OutcomeKind::Finite: return 0;
    case OutcomeKind::NotArithmetic: return 2;
    case OutcomeKind::CapExceeded: return 3;
    case OutcomeKind::CertifiedInfinite: return 4;
    }
    return 1;
}

namespace {

json outcome_to_json(const GenerationOutcome& outcome)
{
    json j{{"kind", to_string(kind_of(outcome))}};
    if (const auto* na = std::get_if<NotArithmetic>(&outcome)) {
        j["witness_basis"] = basis_to_json(na->witness);
        j["witness_pair"] = {na->pivot + 1, na->other + 1};
    } else if (const auto* ci = std::get_if<CertifiedInfinite>(&outcome)) {
        if (ci->product_representable)
            j["period_product"] = ci->period_product;
        j["window_begin"] = ci->window_begin;
        j["window_length"] = ci->window_cartan.size();
        if (ci->window_cartan.size() <= 64)
            j["window_cartan"] = ci->window_cartan;
        j["via_semigroup"] = ci->via_semigroup;
    } else if (const auto* ce = std::get_if<CapExceeded>(&outcome)) {
        j["visited"] = ce->visited;
    }
    return j;
}

std::string describe_outcome(const GenerationOutcome& outcome)
{
    switch (kind_of(outcome)) {
    case OutcomeKind::Finite: {
        const auto& f = std::get<FiniteOutcome>(outcome);
        return "finite (" + std::to_string(f.groupoid.nodes().size()) + " bases, " +
               std::to_string(f.root_system.positive().size()) + " positive roots)";
    }
    case OutcomeKind::NotArithmetic: {
        const auto& na = std::get<NotArithmetic>(outcome);
        return "not arithmetic: no Cartan integer for pair (" +
               std::to_string(na.pivot + 1) + "," + std::to_string(na.other + 1) +
               ") at basis " + render_basis(na.witness);
    }
    case OutcomeKind::CertifiedInfinite: {
        const auto& ci = std::get<CertifiedInfinite>(outcome);
        std::string how = ci.via_semigroup ? "identity-free semigroup generators"
                                           : "period product of infinite order";
        return "certified infinite (" + how + ")";
    }
    case OutcomeKind::CapExceeded: {
        const auto& ce = std::get<CapExceeded>(outcome);
        return "inconclusive: node cap exceeded after " + std::to_string(ce.visited) +
               " bases";
    }
    }
    return "unknown";
}

} // namespace

RunResult run_classify(const ProblemSpec& spec, const RunOptions& options)
{
    RunResult result;
    BraidingMatrix q = to_matrix(spec);
    std::size_t cap = spec.cap.value_or(options.cap);

    GenerationOutcome outcome = decide(q, cap);
    OutcomeKind kind = kind_of(outcome);
    result.exit_code = exit_code_for(kind);

    std::ostringstream text;
    text << "outcome: " << describe_outcome(outcome) << "\n";
    result.json["outcome"] = outcome_to_json(outcome);

    if (q.rank() == 2) {
        auto match = classify_rank2(q);
        if (match) {
            text << "row: " << match->row << " (variant " << match->variant << ", tree "
                 << match->tree << (match->transposed ? ", transposed basis" : "")
                 << ")\n";
            result.json["row"] = {{"id", match->row},
                                  {"variant", match->variant},
                                  {"transposed", match->transposed},
                                  {"tree", std::string(match->tree)}};
        } else {
            text << "row: no match\n";
            result.json["row"] = nullptr;
        }
    }

    if (const auto* finite = std::get_if<FiniteOutcome>(&outcome)) {
        const auto& system = finite->root_system;
        text << "positive roots (" << system.positive().size() << "):";
        json roots = json::array();
        for (const auto& r : system.positive()) {
            text << " " << render_vector(r);
            roots.push_back(vector_to_json(r));
        }
        text << "\n";
        result.json["roots"] = {{"positive", roots},
                                {"count", system.positive().size()}};

        DimensionVerdict dim = nichols_dimension(q, system);
        if (dim.finite) {
            text << "dimension: " << dim.value.str() << " =";
            json factors = json::array();
            for (const auto& f : dim.factors) {
                text << " " << f.height;
                factors.push_back({{"root", vector_to_json(f.root)},
                                   {"height", f.height}});
            }
            text << " (heights over positive roots)\n";
            result.json["dimension"] = {{"kind", "finite"},
                                        {"value", dim.value.str()},
                                        {"factors", factors}};
        } else {
            text << "dimension: infinite (unbounded generator at "
                 << render_vector(dim.witness) << ")\n";
            result.json["dimension"] = {{"kind", "infinite"},
                                        {"witness", vector_to_json(dim.witness)}};
        }

        std::set<TwistClass> orbit = weyl_orbit(q, cap);
        text << "orbit: " << orbit.size() << " twist class(es)\n";
        json orbit_json = json::array();
        for (const auto& t : orbit)
            orbit_json.push_back(twist_class_to_json(t));
        result.json["orbit"] = orbit_json;

        if (!options.dot_path.empty())
            result.json["dot"] = exchange_graph_dot(finite->groupoid);
    }

    result.text = text.str();
    return result;
}

RunResult run_groupoid(const ProblemSpec& spec, const RunOptions& options)
{
    RunResult result;
    BraidingMatrix q = to_matrix(spec);
    std::size_t cap = spec.cap.value_or(options.cap);

    GenerationOutcome outcome = decide(q, cap);
    result.exit_code = exit_code_for(kind_of(outcome));
    result.json["outcome"] = outcome_to_json(outcome);

    std::ostringstream text;
    text << "outcome: " << describe_outcome(outcome) << "\n";
    if (const auto* finite = std::get_if<FiniteOutcome>(&outcome)) {
        const WeylGroupoid& w = finite->groupoid;
        json nodes = json::array();
        for (std::size_t i = 0; i < w.nodes().size(); ++i) {
            text << "node " << i << ": " << render_basis(w.nodes()[i]) << "\n";
            nodes.push_back(basis_to_json(w.nodes()[i]));
        }
        json edges = json::array();
        for (const auto& e : w.edges()) {
            text << "edge: " << e.from << " -" << (e.pivot + 1) << "- " << e.to << "\n";
            edges.push_back({e.from, e.pivot + 1, e.to});
        }
        result.json["nodes"] = nodes;
        result.json["edges"] = edges;
        if (!options.dot_path.empty())
            result.json["dot"] = exchange_graph_dot(w);
    }
    result.text = text.str();
    return result;
}

RunResult run_equiv(const ProblemSpec& a, const ProblemSpec& b, const RunOptions& options)
{
    RunResult result;
    BraidingMatrix qa = to_matrix(a);
    BraidingMatrix qb = to_matrix(b);
    std::size_t cap = options.cap;

    bool equivalent = false;
    if (options.mode == "twist") {
        equivalent = twist_equivalent(qa, qb);
    } else if (options.mode == "weyl") {
        // Both sides must have a finite groupoid before orbits make sense.
        for (const auto& [which, q] :
             {std::pair<const char*, const BraidingMatrix&>{"first", qa},
              {"second", qb}}) {
            GenerationOutcome outcome = decide(q, cap);
            OutcomeKind kind = kind_of(outcome);
            if (kind != OutcomeKind::Finite) {
                result.exit_code = exit_code_for(kind);
                result.text = std::string("not decidable: ") + which +
                              " input is " + to_string(kind) + "\n";
                result.json = {{"mode", options.mode},
                               {"equivalent", nullptr},
                               {"reason", to_string(kind)},
                               {"which", which}};
                return result;
            }
        }
        equivalent = weyl_equivalent(qa, qb, cap);
    } else {
        throw std::invalid_argument("equiv: mode must be 'twist' or 'weyl'");
    }

    result.exit_code = 0;
    result.text = std::string(options.mode) + " equivalent: " +
                  (equivalent ? "yes" : "no") + "\n";
    result.json = {{"mode", options.mode}, {"equivalent", equivalent}};
    return result;
}

RunResult run_table(const RunOptions& options)
{
    RunResult result;
    std::ostringstream text;
    json rows = json::array();
    bool all_ok = true;

    std::map<int, std::vector<const RowInstance*>> by_row;
    std::vector<RowInstance> instances = standard_instances();
    for (const auto& inst : instances)
        by_row[inst.row].push_back(&inst);

    for (const auto& [row_id, members] : by_row) {
        bool finite_ok = true;
        bool match_ok = true;
        bool equiv_ok = true;
        std::size_t checked_pairs = 0;

        for (const RowInstance* inst : members) {
            GenerationOutcome outcome = decide(inst->matrix, options.cap);
            if (kind_of(outcome) != OutcomeKind::Finite)
                finite_ok = false;
            auto match = classify_rank2(inst->matrix);
            if (!match || match->row != row_id)
                match_ok = false;
        }

        // Variants of one row over the same ambient group must land in one
        // Weyl equivalence class.
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j) {
                const BraidingMatrix& qi = members[i]->matrix;
                const BraidingMatrix& qj = members[j]->matrix;
                if (qi.modulus() != qj.modulus() ||
                    qi.free_rank() != qj.free_rank())
                    continue;
                ++checked_pairs;
                if (!weyl_equivalent(qi, qj, options.cap))
                    equiv_ok = false;
            }

        bool ok = finite_ok && match_ok && equiv_ok;
        all_ok = all_ok && ok;
        text << "row " << row_id << ": " << members.size() << " instance(s), "
             << (finite_ok ? "finite ok" : "FINITE FAILED") << ", "
             << (match_ok ? "match ok" : "MATCH FAILED") << ", " << checked_pairs
             << " pair(s) " << (equiv_ok ? "equivalent" : "NOT EQUIVALENT") << "\n";
        rows.push_back({{"row", row_id},
                        {"instances", members.size()},
                        {"finite_ok", finite_ok},
                        {"match_ok", match_ok},
                        {"equivalence_pairs", checked_pairs},
                        {"equiv_ok", equiv_ok}});
    }

    text << (all_ok ? "table: all rows verified\n" : "table: FAILURES\n");
    result.text = text.str();
    result.json = {{"rows", rows}, {"ok", all_ok}};
    result.exit_code = all_ok ? 0 : 1;
    return result;
}

} // namespace arsys
