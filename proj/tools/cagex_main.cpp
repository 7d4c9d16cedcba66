#include "cagex/bounds.hpp"
#include "cagex/catalog.hpp"
#include "cagex/cheeger.hpp"
#include "cagex/coverage.hpp"
#include "cagex/errors.hpp"
#include "cagex/graph_io.hpp"
#include "cagex/moore.hpp"
#include "cagex/report.hpp"
#include "cagex/spectral.hpp"
#include "cagex/subset_scan.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

namespace {

using cagex::json;

struct GlobalOptions {
    bool json_only = false;
    std::uint64_t seed = 0;
    int exact_cap = 26;
    double tol = 1e-10;
    bool timings = false;
    std::string output;
};

// Inputs are file paths, or "catalog:<name>" for built-in graphs.
cagex::Graph load_input(const std::string& spec, const std::string& format) {
    if (spec.rfind("catalog:", 0) == 0) return cagex::catalog_graph(spec.substr(8));
    if (format == "adj") return cagex::load_graph(spec, cagex::GraphFormat::adjacency_text);
    if (format == "g6") return cagex::load_graph(spec, cagex::GraphFormat::graph6);
    return cagex::load_graph(spec);
}

std::string input_name(const std::string& spec) {
    if (spec.rfind("catalog:", 0) == 0) return spec.substr(8);
    const auto slash = spec.find_last_of('/');
    return slash == std::string::npos ? spec : spec.substr(slash + 1);
}

void emit(const json& doc, const GlobalOptions& go, const std::function<void()>& human) {
    if (go.json_only)
        std::cout << doc.dump(2) << '\n';
    else
        human();
    if (!go.output.empty()) {
        std::ofstream out(go.output);
        if (!out) throw cagex::parse_error("cannot write to " + go.output);
        out << doc.dump(2) << '\n';
    }
}

cagex::Rational parse_rational(const std::string& text) {
    try {
        return cagex::Rational(text);
    } catch (const std::exception&) {
        throw cagex::parse_error("cannot read '" + text + "' as a fraction p/q");
    }
}

cagex::BigInt parse_bigint(const std::string& text) {
    try {
        return cagex::BigInt(text);
    } catch (const std::exception&) {
        throw cagex::parse_error("cannot read '" + text + "' as an integer");
    }
}

// ---- moore-bound ----------------------------------------------------------

void run_moore_bound(const GlobalOptions& go, int k, int g, int diameter, int table_kmax,
                     int table_gmax) {
    json doc;
    if (table_kmax > 0) {
        doc["table"] = json::array();
        for (int kk = 3; kk <= table_kmax; ++kk)
            for (int gg = 3; gg <= table_gmax; ++gg)
                doc["table"].push_back(json{{"k", kk},
                                            {"g", gg},
                                            {"value", cagex::bigint_json(cagex::moore_cage_bound(kk, gg))}});
        emit(doc, go, [&] {
            std::cout << "k g minimum_order\n";
            for (const auto& row : doc["table"])
                std::cout << row["k"] << ' ' << row["g"] << ' ' << row["value"] << '\n';
        });
        return;
    }
    if (diameter > 0) {
        const cagex::BigInt value = cagex::moore_dd_bound(k, diameter);
        doc = {{"delta", k}, {"diameter", diameter}, {"value", cagex::bigint_json(value)}};
        emit(doc, go, [&] {
            std::cout << "max order at degree " << k << ", diameter " << diameter << ": " << value
                      << '\n';
        });
        return;
    }
    if (g < 3) throw cagex::hypothesis_error("girth must be at least 3, got " + std::to_string(g));
    const cagex::BigInt value = cagex::moore_cage_bound(k, g);
    doc = {{"k", k}, {"g", g}, {"value", cagex::bigint_json(value)}};
    emit(doc, go, [&] {
        std::cout << "min order of a " << k << "-regular graph with girth " << g << ": " << value
                  << '\n';
    });
}

// ---- analyze --------------------------------------------------------------

void run_analyze(const GlobalOptions& go, const std::string& input, const std::string& format,
                 const std::string& name_override, const std::string& c_text) {
    const cagex::Graph g = load_input(input, format);
    cagex::AnalyzeOptions options;
    options.c = parse_bigint(c_text);
    options.exact_cap = go.exact_cap;
    options.seed = go.seed;
    options.tol = go.tol;
    options.include_timings = go.timings;
    const std::string name = name_override.empty() ? input_name(input) : name_override;
    const json doc = cagex::analyze(g, name, options);
    emit(doc, go, [&] {
        std::cout << doc["name"].get<std::string>() << ": " << doc["order"] << " vertices, "
                  << doc["size"] << " edges, " << doc["degree"] << "-regular, girth "
                  << doc["girth"] << '\n';
        std::cout << "moore bound " << doc["moore_bound"] << ", excess " << doc["excess"] << '\n';
        const auto& iso = doc["isoperimetric"];
        std::cout << "h = " << iso["value"]["exact"].get<std::string>() << " ("
                  << iso["value"]["approx"].get<double>() << ", " << iso["method"].get<std::string>()
                  << ", " << iso["subsets_scanned"] << " subsets), witness cut "
                  << iso["witness_boundary"] << '\n';
        const auto& spec = doc["spectral"];
        std::cout << "lambda_second " << spec["lambda_second"].get<double>() << ", lambda_abs "
                  << spec["lambda_abs"].get<double>() << '\n';
        const auto& rama = spec["ramanujan"];
        std::cout << "ramanujan: " << (rama["verdict"].get<bool>() ? "yes" : "no") << " (margin "
                  << rama["margin"].get<double>() << ")\n";
        const auto& sandwich = spec["sandwich"];
        std::cout << "sandwich: " << sandwich["lower_signed"].get<double>()
                  << " <= h = " << sandwich["h"].get<double>()
                  << " <= " << sandwich["upper_signed"].get<double>() << "  ["
                  << (sandwich["pass"].get<bool>() ? "pass" : "FAIL") << "]\n";
        const auto& exp = doc["expansion"];
        if (exp["applicable"].get<bool>()) {
            std::cout << "expansion bound (" << exp["parity"].get<std::string>() << ", s=" << exp["s"]
                      << ", c=" << exp["c"] << "): " << exp["bound"]["exact"].get<std::string>()
                      << " (limit " << exp["limit"]["exact"].get<std::string>() << ", gap "
                      << exp["gap"]["exact"].get<std::string>() << ")  [certified: "
                      << (exp["certified"].get<bool>() ? "yes" : "no") << "]\n";
        } else {
            std::cout << "expansion bound: not applicable (" << exp["reason"].get<std::string>()
                      << ")\n";
        }
        std::cout << "covering counts: " << (doc["covering"]["verified"].get<bool>() ? "verified" : "MISMATCH")
                  << '\n';
        if (doc.contains("timings_ms")) {
            std::cout << "timings (ms):";
            for (const auto& [key, value] : doc["timings_ms"].items())
                std::cout << ' ' << key << '=' << value.get<double>();
            std::cout << '\n';
        }
    });
}

// ---- cheeger ---------------------------------------------------------------

void run_cheeger(const GlobalOptions& go, const std::string& input, const std::string& format,
                 long long samples) {
    const cagex::Graph g = load_input(input, format);
    const cagex::CheegerResult result = samples > 0
                                            ? cagex::cheeger_upper_sample(g, samples, go.seed)
                                            : cagex::cheeger_exact(g, go.exact_cap);
    json doc;
    doc["name"] = input_name(input);
    doc["order"] = g.vertex_count();
    doc["value"] = cagex::rational_json(result.h);
    doc["method"] = result.method == cagex::CheegerMethod::exhaustive ? "exhaustive"
                                                                      : "sampled_upper_bound";
    doc["witness"] = result.argmin_set.to_vector();
    doc["witness_boundary"] = cagex::edge_boundary_size(g, result.argmin_set);
    doc["subsets_scanned"] = result.subsets_scanned;
    if (result.method == cagex::CheegerMethod::sampled_upper_bound) doc["seed"] = go.seed;
    emit(doc, go, [&] {
        std::cout << doc["name"].get<std::string>() << ": h "
                  << (samples > 0 ? "<= " : "= ") << doc["value"]["exact"].get<std::string>()
                  << " (" << doc["value"]["approx"].get<double>() << ", "
                  << doc["method"].get<std::string>() << ")\n";
        std::cout << "witness (cut " << doc["witness_boundary"] << "):";
        for (const auto& v : doc["witness"]) std::cout << ' ' << v;
        std::cout << '\n';
    });
}

// ---- spectral ---------------------------------------------------------------

void run_spectral(const GlobalOptions& go, const std::string& input, const std::string& format) {
    const cagex::Graph g = load_input(input, format);
    const cagex::Spectrum s = cagex::spectrum(g, go.tol);
    json doc;
    doc["name"] = input_name(input);
    doc["order"] = g.vertex_count();
    doc["tolerance"] = s.tolerance;
    doc["eigenvalue_groups"] = json::array();
    for (const auto& [value, count] : cagex::eigenvalue_multiplicities(s))
        doc["eigenvalue_groups"].push_back(json{{"value", value}, {"multiplicity", count}});
    if (g.vertex_count() >= 2) {
        doc["lambda_second"] = s.lambda_second();
        doc["lambda_abs"] = s.lambda_abs();
    }
    if (s.k && *s.k >= 3 && cagex::is_connected(g)) {
        const cagex::RamanujanVerdict rama = cagex::is_ramanujan(g, s);
        doc["ramanujan"] = {{"lambda", rama.lambda},
                            {"threshold", rama.threshold},
                            {"margin", rama.margin},
                            {"verdict", rama.verdict}};
    }
    emit(doc, go, [&] {
        std::cout << doc["name"].get<std::string>() << " eigenvalues (multiplicity):";
        for (const auto& group : doc["eigenvalue_groups"])
            std::cout << ' ' << group["value"].get<double>() << " (x" << group["multiplicity"]
                      << ")";
        std::cout << '\n';
        if (doc.contains("ramanujan"))
            std::cout << "ramanujan: " << (doc["ramanujan"]["verdict"].get<bool>() ? "yes" : "no")
                      << " (lambda " << doc["ramanujan"]["lambda"].get<double>() << ", threshold "
                      << doc["ramanujan"]["threshold"].get<double>() << ")\n";
    });
}

// ---- verify-lemmas ----------------------------------------------------------

struct SweepOutcome {
    unsigned long long subsets_checked = 0;
    bool double_counting_ok = true;
    bool floor_ok = true;
};

// Checks, for each subset S: the sum over roots of the tree overlap equals
// per_root * |S| exactly, and the best root covers at least
// per_root * |S| / denom.
SweepOutcome sweep_subsets(const cagex::Graph& g, const std::vector<cagex::VertexSet>& trees,
                           long long per_root, long long denom, bool exhaustive, long long samples,
                           std::uint64_t seed) {
    SweepOutcome outcome;
    const auto check = [&](const cagex::VertexSet& s) {
        ++outcome.subsets_checked;
        long long sum = 0;
        long long best = 0;
        for (const auto& tree : trees) {
            const long long c = tree.intersection_count(s);
            sum += c;
            if (c > best) best = c;
        }
        if (sum != per_root * s.count()) outcome.double_counting_ok = false;
        if (best * denom < per_root * s.count()) outcome.floor_ok = false;
    };
    if (exhaustive) {
        cagex::scan_subsets(g, [&](long long, const cagex::VertexSet& s) { check(s); });
    } else {
        const int n = g.vertex_count();
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> size_dist(1, n);
        std::vector<int> pool(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) pool[static_cast<std::size_t>(v)] = v;
        for (long long trial = 0; trial < samples; ++trial) {
            const int target = size_dist(rng);
            for (int i = 0; i < target; ++i) {
                std::uniform_int_distribution<int> pick(i, n - 1);
                std::swap(pool[static_cast<std::size_t>(i)],
                          pool[static_cast<std::size_t>(pick(rng))]);
            }
            cagex::VertexSet s(n);
            for (int i = 0; i < target; ++i) s.add(pool[static_cast<std::size_t>(i)]);
            check(s);
        }
    }
    return outcome;
}

void run_verify_lemmas(const GlobalOptions& go, const std::string& input, const std::string& format,
                       bool force_exhaustive, long long samples) {
    const cagex::Graph g = load_input(input, format);
    const auto reg = cagex::is_regular(g);
    if (!reg || *reg < 3)
        throw cagex::hypothesis_error("lemma verification requires a k-regular graph with k >= 3");
    const auto girth_opt = cagex::girth(g);
    if (!girth_opt) throw cagex::hypothesis_error("lemma verification requires a finite girth");
    const int k = *reg;
    const int gg = *girth_opt;
    const bool odd = gg % 2 == 1;
    const int s = odd ? (gg - 1) / 2 : gg / 2;
    const int n = g.vertex_count();
    const bool exhaustive = force_exhaustive || (samples <= 0 && n <= 14);
    const long long effective_samples = samples > 0 ? samples : 10000;
    if (exhaustive && n > 20)
        throw cagex::cap_error("exhaustive subset sweep over " + std::to_string(n) +
                               " vertices is out of range; use --samples");

    json doc;
    doc["name"] = input_name(input);
    doc["order"] = n;
    doc["degree"] = k;
    doc["girth"] = gg;
    doc["parity"] = odd ? "odd" : "even";

    // Per-vertex covering counts, every vertex, every admissible radius.
    doc["counts"] = json::array();
    bool counts_ok = true;
    for (int r = 0; r <= s; ++r) {
        const cagex::BigInt expected =
            odd ? cagex::moore_ball_order(k, r) : cagex::moore_ball_order(k, r) - 1;
        bool match = true;
        for (int v = 0; v < n && match; ++v) {
            const long long count =
                odd ? cagex::count_covering_vertices(g, v, r) : cagex::count_covering_edges(g, v, r);
            match = cagex::BigInt(count) == expected;
        }
        counts_ok = counts_ok && match;
        doc["counts"].push_back(json{
            {"radius", r}, {"expected", cagex::bigint_json(expected)}, {"all_vertices_match", match}});
    }
    doc["counts_ok"] = counts_ok;

    // Double counting and best-root floors over subsets.
    doc["subset_checks"] = json::array();
    doc["subset_mode"] = exhaustive ? "exhaustive" : "sampled";
    if (!exhaustive) {
        doc["samples"] = effective_samples;
        doc["seed"] = go.seed;
    }
    bool sweeps_ok = true;
    for (int depth = odd ? 0 : 1; depth <= s; ++depth) {
        std::vector<cagex::VertexSet> trees;
        long long per_root;
        long long denom;
        if (odd) {
            for (int root = 0; root < n; ++root)
                trees.push_back(cagex::moore_tree_vertex(g, root, depth).vertex_set);
            per_root = cagex::moore_ball_order(k, depth).convert_to<long long>();
            denom = n;
        } else {
            for (const auto& e : g.edges())
                trees.push_back(cagex::moore_tree_edge(g, e, depth).vertex_set);
            per_root = (cagex::moore_ball_order(k, depth) - 1).convert_to<long long>();
            denom = g.edge_count();
        }
        const SweepOutcome outcome =
            sweep_subsets(g, trees, per_root, denom, exhaustive, effective_samples, go.seed);
        sweeps_ok = sweeps_ok && outcome.double_counting_ok && outcome.floor_ok;
        doc["subset_checks"].push_back(json{{"depth", depth},
                                            {"per_root", per_root},
                                            {"subsets_checked", outcome.subsets_checked},
                                            {"double_counting_ok", outcome.double_counting_ok},
                                            {"floor_ok", outcome.floor_ok}});
    }
    doc["subset_checks_ok"] = sweeps_ok;

    // Boundary floor from the girth-parity coverage fraction.
    cagex::BoundaryCheckReport boundary =
        (n <= go.exact_cap && samples <= 0) ? cagex::verify_boundary_bound(g, go.exact_cap)
                                            : cagex::verify_boundary_bound_sampled(
                                                  g, effective_samples, go.seed);
    json bj;
    bj["mode"] = boundary.mode == cagex::CheckMode::exhaustive ? "exhaustive" : "sampled";
    bj["beta"] = cagex::rational_json(boundary.beta);
    bj["subsets_checked"] = boundary.subsets_checked;
    if (boundary.mode == cagex::CheckMode::sampled) bj["seed"] = boundary.seed;
    bj["violations"] = json::array();
    for (const auto& violation : boundary.violations)
        bj["violations"].push_back(json{{"subset", violation.subset.to_vector()},
                                        {"boundary", violation.boundary},
                                        {"floor", cagex::rational_json(violation.floor)}});
    bj["ok"] = boundary.ok();
    doc["boundary"] = bj;
    doc["ok"] = counts_ok && sweeps_ok && boundary.ok();

    emit(doc, go, [&] {
        std::cout << doc["name"].get<std::string>() << ": " << k << "-regular, girth " << gg << " ("
                  << doc["parity"].get<std::string>() << ")\n";
        std::cout << "covering counts: " << (counts_ok ? "exact at every vertex" : "MISMATCH")
                  << '\n';
        for (const auto& row : doc["subset_checks"])
            std::cout << "depth " << row["depth"] << ": double counting "
                      << (row["double_counting_ok"].get<bool>() ? "ok" : "BROKEN") << ", floor "
                      << (row["floor_ok"].get<bool>() ? "ok" : "BROKEN") << " over "
                      << row["subsets_checked"] << " subsets\n";
        std::cout << "boundary floor (beta " << doc["boundary"]["beta"]["exact"].get<std::string>()
                  << "): " << (boundary.ok() ? "no violations" : "VIOLATED") << " over "
                  << doc["boundary"]["subsets_checked"] << " subsets\n";
        std::cout << (doc["ok"].get<bool>() ? "all checks passed" : "CHECKS FAILED") << '\n';
    });
}

// ---- bound ------------------------------------------------------------------

void run_bound(const GlobalOptions& go, int k, int s, const std::string& c_text,
               const std::string& parity_text, const std::string& epsilon_text) {
    const cagex::BigInt c = parse_bigint(c_text);
    const cagex::Parity parity =
        parity_text == "odd" ? cagex::Parity::odd : cagex::Parity::even;
    json doc;
    doc["k"] = k;
    doc["c"] = cagex::bigint_json(c);
    doc["parity"] = parity_text;
    if (s > 0) {
        const cagex::ExpansionBound bound = parity == cagex::Parity::odd
                                                ? cagex::expansion_bound_odd(k, c, s)
                                                : cagex::expansion_bound_even(k, c, s);
        doc["s"] = s;
        doc["value"] = cagex::rational_json(bound.value);
        doc["limit"] = cagex::rational_json(bound.limit);
        doc["gap"] = cagex::rational_json(bound.gap);
    }
    if (!epsilon_text.empty()) {
        const cagex::Rational epsilon = parse_rational(epsilon_text);
        const int depth = cagex::min_depth_for_epsilon(k, c, epsilon, parity);
        doc["epsilon"] = cagex::rational_json(epsilon);
        doc["min_depth"] = depth;
    }
    emit(doc, go, [&] {
        if (doc.contains("value"))
            std::cout << "bound(k=" << k << ", s=" << s << ", c=" << c << ", " << parity_text
                      << ") = " << doc["value"]["exact"].get<std::string>() << " = "
                      << doc["value"]["approx"].get<double>() << " (limit "
                      << doc["limit"]["exact"].get<std::string>() << ", gap "
                      << doc["gap"]["exact"].get<std::string>() << ")\n";
        if (doc.contains("min_depth"))
            std::cout << "smallest depth within " << doc["epsilon"]["exact"].get<std::string>()
                      << " of the limit: s = " << doc["min_depth"] << '\n';
    });
}

// ---- catalog ----------------------------------------------------------------

void run_catalog(const GlobalOptions& go, const std::string& emit_name, const std::string& format) {
    if (!emit_name.empty()) {
        const cagex::Graph g = cagex::catalog_graph(emit_name);
        std::cout << cagex::write_graph(g, format == "g6" ? cagex::GraphFormat::graph6
                                                          : cagex::GraphFormat::adjacency_text);
        return;
    }
    json doc = json::array();
    for (const auto& entry : cagex::catalog())
        doc.push_back(json{{"name", entry.name},
                           {"k", entry.k},
                           {"girth", entry.girth_value},
                           {"order", entry.order},
                           {"moore_bound", cagex::bigint_json(entry.moore_value)},
                           {"excess", cagex::bigint_json(entry.excess_value)}});
    emit(doc, go, [&] {
        std::cout << "name k girth order moore_bound excess\n";
        for (const auto& row : doc)
            std::cout << row["name"].get<std::string>() << ' ' << row["k"] << ' ' << row["girth"]
                      << ' ' << row["order"] << ' ' << row["moore_bound"] << ' ' << row["excess"]
                      << '\n';
    });
}

// ---- double -----------------------------------------------------------------

void run_double(const GlobalOptions& go, const std::string& input, const std::string& format,
                const std::vector<int>& edge, int iterations, const std::string& out_path,
                const std::string& out_format) {
    const cagex::Graph g = load_input(input, format);
    std::vector<cagex::Graph> chain;
    std::vector<cagex::Edge> replaced;
    if (!edge.empty()) {
        if (iterations != 1)
            throw cagex::hypothesis_error("an explicit edge only applies to a single step");
        replaced.push_back({edge[0], edge[1]});
        chain.push_back(g);
        chain.push_back(cagex::double_graph(g, replaced[0]));
    } else {
        chain = cagex::iterate_doubling(g, iterations, &replaced);
    }

    json doc;
    doc["name"] = input_name(input);
    doc["iterations"] = iterations;
    doc["steps"] = json::array();
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        const cagex::Graph& before = chain[i];
        const cagex::Graph& after = chain[i + 1];
        cagex::VertexSet first_copy(after.vertex_count());
        for (int v = 0; v < before.vertex_count(); ++v) first_copy.add(v);
        const long long cut = cagex::edge_boundary_size(after, first_copy);
        json step;
        step["replaced_edge"] = {replaced[i].first, replaced[i].second};
        step["order"] = after.vertex_count();
        step["girth"] = *cagex::girth(after);
        step["copy_cut"] = cut;
        step["h_upper"] = cagex::rational_json(
            cagex::Rational(cut, before.vertex_count()));
        doc["steps"].push_back(step);
    }
    if (!out_path.empty()) {
        std::ofstream out(out_path);
        if (!out) throw cagex::parse_error("cannot write to " + out_path);
        out << cagex::write_graph(chain.back(), out_format == "g6"
                                                    ? cagex::GraphFormat::graph6
                                                    : cagex::GraphFormat::adjacency_text);
    }
    emit(doc, go, [&] {
        std::cout << doc["name"].get<std::string>() << ": " << iterations << " doubling step(s)\n";
        for (const auto& step : doc["steps"])
            std::cout << "order " << step["order"] << ", girth " << step["girth"]
                      << ", replaced (" << step["replaced_edge"][0] << ","
                      << step["replaced_edge"][1] << "), cut between copies " << step["copy_cut"]
                      << ", h <= " << step["h_upper"]["exact"].get<std::string>() << '\n';
    });
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"order bounds, isoperimetric constants, and expansion certificates "
                 "for regular graphs of given girth"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions go;
    app.add_flag("--json-only", go.json_only, "print the JSON document instead of the summary");
    app.add_option("--seed", go.seed, "seed for all sampling");
    app.add_option("--exact-cap", go.exact_cap, "largest order for exhaustive subset scans");
    app.add_option("--tol", go.tol, "eigensolver convergence tolerance");
    app.add_flag("--timings", go.timings, "include wall-clock timings in the JSON document");
    app.add_option("--output", go.output, "also write the JSON document to this file");

    auto* moore_cmd = app.add_subcommand("moore-bound", "minimum order for degree and girth");
    int mb_k = 0, mb_g = 0, mb_diameter = 0;
    std::vector<int> mb_table;
    moore_cmd->add_option("k", mb_k, "degree");
    moore_cmd->add_option("g", mb_g, "girth");
    moore_cmd->add_option("--diameter", mb_diameter, "use the degree/diameter form instead");
    moore_cmd->add_option("--table", mb_table, "emit the full table up to k g")->expected(2);
    moore_cmd->callback([&] {
        if (mb_table.empty() && mb_k == 0)
            throw cagex::parse_error("moore-bound needs k and g, or --table");
        run_moore_bound(go, mb_k, mb_g, mb_diameter, mb_table.empty() ? 0 : mb_table[0],
                        mb_table.empty() ? 0 : mb_table[1]);
    });

    auto* analyze_cmd = app.add_subcommand("analyze", "full report for one graph");
    std::string an_input, an_format = "auto", an_name, an_c = "0";
    analyze_cmd->add_option("input", an_input, "graph file or catalog:<name>")->required();
    analyze_cmd->add_option("--format", an_format, "adj, g6, or auto")
        ->check(CLI::IsMember({"adj", "g6", "auto"}));
    analyze_cmd->add_option("--name", an_name, "name to use in the report");
    analyze_cmd->add_option("--c", an_c, "order slack above the minimum");
    analyze_cmd->callback([&] { run_analyze(go, an_input, an_format, an_name, an_c); });

    auto* cheeger_cmd = app.add_subcommand("cheeger", "isoperimetric constant");
    std::string ch_input, ch_format = "auto";
    long long ch_samples = 0;
    cheeger_cmd->add_option("input", ch_input, "graph file or catalog:<name>")->required();
    cheeger_cmd->add_option("--format", ch_format, "adj, g6, or auto")
        ->check(CLI::IsMember({"adj", "g6", "auto"}));
    cheeger_cmd->add_option("--samples", ch_samples, "sample instead of enumerating");
    cheeger_cmd->callback([&] { run_cheeger(go, ch_input, ch_format, ch_samples); });

    auto* spectral_cmd = app.add_subcommand("spectral", "adjacency eigenvalues");
    std::string sp_input, sp_format = "auto";
    spectral_cmd->add_option("input", sp_input, "graph file or catalog:<name>")->required();
    spectral_cmd->add_option("--format", sp_format, "adj, g6, or auto")
        ->check(CLI::IsMember({"adj", "g6", "auto"}));
    spectral_cmd->callback([&] { run_spectral(go, sp_input, sp_format); });

    auto* verify_cmd = app.add_subcommand("verify-lemmas", "covering counts, floors, boundary bound");
    std::string vl_input, vl_format = "auto";
    bool vl_exhaustive = false;
    long long vl_samples = 0;
    verify_cmd->add_option("input", vl_input, "graph file or catalog:<name>")->required();
    verify_cmd->add_option("--format", vl_format, "adj, g6, or auto")
        ->check(CLI::IsMember({"adj", "g6", "auto"}));
    verify_cmd->add_flag("--exhaustive", vl_exhaustive, "sweep every subset (small graphs)");
    verify_cmd->add_option("--samples", vl_samples, "random subsets per check");
    verify_cmd->callback(
        [&] { run_verify_lemmas(go, vl_input, vl_format, vl_exhaustive, vl_samples); });

    auto* bound_cmd = app.add_subcommand("bound", "expansion bound values and depths");
    int bd_k = 0, bd_s = 0;
    std::string bd_c = "0", bd_parity, bd_epsilon;
    bound_cmd->add_option("--k", bd_k, "degree")->required();
    bound_cmd->add_option("--s", bd_s, "depth parameter");
    bound_cmd->add_option("--c", bd_c, "order slack");
    bound_cmd->add_option("--parity", bd_parity, "odd or even")
        ->required()
        ->check(CLI::IsMember({"odd", "even"}));
    bound_cmd->add_option("--epsilon", bd_epsilon, "distance to the limit, as p/q");
    bound_cmd->callback([&] {
        if (bd_s <= 0 && bd_epsilon.empty())
            throw cagex::parse_error("bound needs --s or --epsilon");
        run_bound(go, bd_k, bd_s, bd_c, bd_parity, bd_epsilon);
    });

    auto* catalog_cmd = app.add_subcommand("catalog", "built-in graphs");
    std::string ct_emit, ct_format = "adj";
    catalog_cmd->add_option("--emit", ct_emit, "write one catalog graph to stdout");
    catalog_cmd->add_option("--format", ct_format, "adj or g6")
        ->check(CLI::IsMember({"adj", "g6"}));
    catalog_cmd->callback([&] { run_catalog(go, ct_emit, ct_format); });

    auto* double_cmd = app.add_subcommand("double", "two-copy edge replacement");
    std::string db_input, db_format = "auto", db_out, db_out_format = "adj";
    std::vector<int> db_edge;
    int db_iterations = 1;
    double_cmd->add_option("input", db_input, "graph file or catalog:<name>")->required();
    double_cmd->add_option("--format", db_format, "adj, g6, or auto")
        ->check(CLI::IsMember({"adj", "g6", "auto"}));
    double_cmd->add_option("--edge", db_edge, "edge to replace, as two ids")->expected(2);
    double_cmd->add_option("--iterations", db_iterations, "number of doubling steps");
    double_cmd->add_option("--out", db_out, "write the final graph to this file");
    double_cmd->add_option("--out-format", db_out_format, "adj or g6")
        ->check(CLI::IsMember({"adj", "g6"}));
    double_cmd->callback(
        [&] { run_double(go, db_input, db_format, db_edge, db_iterations, db_out, db_out_format); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const cagex::parse_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const cagex::hypothesis_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const cagex::cap_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 5;
    }
    return 0;
}
