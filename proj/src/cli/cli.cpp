#include "meg/cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <sstream>

#include "meg/classes.hpp"
#include "meg/error.hpp"
#include "meg/io.hpp"
#include "meg/monitoring.hpp"
#include "meg/random.hpp"
#include "meg/solver.hpp"
#include "meg/structure.hpp"

namespace meg::cli {

namespace {

using json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct Streams {
    std::istream& in;
    std::ostream& out;
    std::ostream& err;
};

Graph load_graph(const std::string& path, std::istream& in) {
    if (path == "-") return read_graph(in);
    std::ifstream file(path);
    if (!file) throw InvalidInput("cannot open " + path);
    return read_graph(file);
}

std::vector<long long> parse_list(const std::string& text, char separator, const char* what) {
    std::vector<long long> values;
    if (text.empty()) return values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, separator)) {
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(item, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != item.size()) throw InvalidInput(std::string("malformed ") + what + ": " + text);
        values.push_back(value);
    }
    return values;
}

VertexSet parse_set(const Graph& g, const std::string& text) {
    VertexSet s(g.vertex_count());
    for (long long v : parse_list(text, ',', "vertex list")) {
        if (v < 0 || v >= g.vertex_count()) throw InvalidInput("vertex " + std::to_string(v) + " is not in the graph");
        s.insert(static_cast<Vertex>(v));
    }
    return s;
}

Edge parse_edge(const std::string& text) {
    char separator = text.find('-') != std::string::npos ? '-' : ',';
    auto ends = parse_list(text, separator, "edge");
    if (ends.size() != 2) throw InvalidInput("an edge is written u-v, got " + text);
    return Edge(static_cast<Vertex>(ends[0]), static_cast<Vertex>(ends[1]));
}

json edge_json(Edge e) { return json::array({e.u, e.v}); }
json pair_json(VertexPair p) { return json::array({p.x, p.y}); }
json set_json(const VertexSet& s) { return s.to_vector(); }
json distance_json(Distance d) { return d.is_infinite() ? json("INFINITE") : json(d.hops()); }

json input_summary(const Graph& g) {
    return {{"n", g.vertex_count()},
            {"m", g.edge_count()},
            {"fes", feedback_edge_number(g)},
            {"leaf_count", leaves(g).size()}};
}

/// Headline number printed in --quiet mode, and the process exit code.
struct Outcome {
    json result;
    long long headline = 0;
    int exit_code = kOk;
};

int emit(const Streams& io, const std::string& command, const Graph& g, Clock::time_point start,
         const Outcome& outcome, bool quiet) {
    if (quiet) {
        io.out << outcome.headline << '\n';
    } else {
        double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        json doc = {{"command", command}, {"input", input_summary(g)}, {"result", outcome.result}, {"wall_time_ms", ms}};
        io.out << doc.dump(2) << '\n';
    }
    return outcome.exit_code;
}

Outcome verify(const Graph& g, const std::string& set_text, int max_witnesses) {
    VertexSet s = parse_set(g, set_text);
    WitnessReport report = witness_report(g, s, max_witnesses);
    json uncovered = json::array();
    for (Edge e : report.uncovered) uncovered.push_back(edge_json(e));
    json witnesses = json::array();
    for (const auto& entry : report.per_edge) {
        json pairs = json::array();
        for (auto p : entry.pairs) pairs.push_back(pair_json(p));
        witnesses.push_back({{"edge", edge_json(entry.edge)}, {"pairs", pairs}});
    }
    Outcome o;
    o.result = {{"set", set_json(s)},
                {"is_meg", report.all_covered()},
                {"uncovered", uncovered},
                {"max_witnesses", max_witnesses},
                {"witnesses", witnesses}};
    o.headline = static_cast<long long>(report.uncovered.size());
    o.exit_code = report.all_covered() ? kOk : kNegative;
    return o;
}

Outcome solve(const Graph& g, bool all, int limit, int cap) {
    SolverOptions options;
    options.max_vertices = cap;
    SolveResult r = minimum_meg(g, options);
    Outcome o;
    o.result = {{"meg_number", r.meg_number},
                {"optimal_set", set_json(r.optimal_set)},
                {"forced", set_json(r.forced)},
                {"nodes_explored", r.nodes_explored}};
    if (all) {
        if (limit < 1) throw InvalidInput("--limit must be at least 1");
        json sets = json::array();
        for (const auto& s : all_minimum_megs(g, static_cast<std::size_t>(limit), options)) sets.push_back(set_json(s));
        o.result["all_optimal"] = sets;
        o.result["limit"] = limit;
    }
    o.headline = r.meg_number;
    return o;
}

Outcome construct(const Graph& g, const std::string& method) {
    Outcome o;
    if (method == "fes") {
        FesConstruction c = fes_meg_construction(g);
        o.result = {{"method", "fes"},
                    {"meg_set", set_json(c.meg_set)},
                    {"size", c.meg_set.size()},
                    {"budget", c.budget},
                    {"k", c.k},
                    {"leaf_count", c.leaf_count},
                    {"verified", is_meg_set(g, c.meg_set)}};
        o.headline = c.meg_set.size();
    } else {
        ClassResult c = meg_by_class(g);
        o.result = {{"method", "class"},
                    {"theorem", std::string(to_string(c.theorem))},
                    {"meg_number", c.meg_number},
                    {"witness", set_json(c.witness)},
                    {"verified", is_meg_set(g, c.witness)}};
        o.headline = c.meg_number;
    }
    return o;
}

Outcome simulate(const Graph& g, const std::string& set_text, const std::string& edge_text) {
    VertexSet s = parse_set(g, set_text);
    Edge e = parse_edge(edge_text);
    g.require_edge(e);
    DetectionReport report = simulate_failure(g, s, e);
    json changes = json::array();
    for (const auto& c : report.changes) {
        changes.push_back({{"pair", pair_json(c.pair)}, {"before", distance_json(c.before)}, {"after", distance_json(c.after)}});
    }
    Outcome o;
    o.result = {{"set", set_json(s)}, {"failed_edge", edge_json(e)}, {"detected", report.detected()}, {"changes", changes}};
    o.headline = static_cast<long long>(report.changes.size());
    o.exit_code = report.detected() ? kOk : kNegative;
    return o;
}

Outcome invariants(const Graph& g, int cap) {
    const int k = feedback_edge_number(g);
    const int leaf_count = static_cast<int>(leaves(g).size());
    int bound = 0;
    std::string rule;
    if (k == 0) {
        bound = leaf_count;
        rule = "leaves";
    } else if (k == 1) {
        bound = leaf_count + 4;
        rule = "fes1";
    } else {
        bound = 9 * k + leaf_count - 8;
        rule = "fes";
    }
    Outcome o;
    o.result = {{"n", g.vertex_count()},
                {"m", g.edge_count()},
                {"fes", k},
                {"leaf_count", leaf_count},
                {"forced_count", g.edge_count() == 0 ? 0 : forced_vertices(g).size()},
                {"upper_bound", bound},
                {"bound_rule", rule}};
    if (g.edge_count() > 0) o.result["construction_size"] = fes_meg_construction(g).meg_set.size();
    o.headline = bound;
    if (g.vertex_count() <= cap) {
        SolverOptions options;
        options.max_vertices = cap;
        int exact = minimum_meg(g, options).meg_number;
        o.result["exact_meg"] = exact;
        o.headline = exact;
    } else {
        o.result["exact_meg"] = nullptr;
    }
    return o;
}

std::vector<int> to_ints(const std::vector<long long>& values) {
    std::vector<int> out;
    for (long long v : values) {
        if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) {
            throw InvalidInput("parameter out of range");
        }
        out.push_back(static_cast<int>(v));
    }
    return out;
}

Graph generate(const std::string& family, const std::vector<int>& p, std::uint64_t seed) {
    auto need = [&](std::size_t count) {
        if (p.size() != count) {
            throw InvalidInput(family + " takes " + std::to_string(count) + " parameter(s), got " +
                               std::to_string(p.size()));
        }
    };
    if (family == "path") {
        need(1);
        return gen_path(p[0]);
    }
    if (family == "cycle") {
        need(1);
        return gen_cycle(p[0]);
    }
    if (family == "complete") {
        need(1);
        return gen_complete(p[0]);
    }
    if (family == "star") {
        need(1);
        return gen_star(p[0]);
    }
    if (family == "multipartite") return gen_multipartite(p);
    if (family == "hypercube") {
        need(1);
        return gen_hypercube(p[0]);
    }
    if (family == "grid") {
        need(2);
        return gen_grid(p[0], p[1]);
    }
    if (family == "tree") {
        need(1);
        return random_tree(p[0], seed);
    }
    if (family == "unicyclic") {
        need(2);
        return random_unicyclic(p[0], p[1], seed);
    }
    if (family == "connected") {
        need(2);
        return random_connected(p[0], p[1], seed);
    }
    if (family == "tightness") {
        need(2);
        return gen_tightness_family(p[0], p[1]);
    }
    throw InvalidInput("unknown family " + family);
}

bool is_random_family(const std::string& family) {
    return family == "tree" || family == "unicyclic" || family == "connected";
}

int report_error(const Streams& io, const std::string& message, int code) {
    io.err << "error: " << message << '\n';
    return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    Streams io{in, out, err};
    CLI::App app{"Monitoring edge-geodetic sets: verify, solve, construct, simulate, generate"};
    app.name("megset");
    app.require_subcommand(1);

    std::string file;
    std::string set_text;
    std::string edge_text;
    std::string method = "fes";
    int max_witnesses = 3;
    int limit = 100;
    int cap = SolverOptions{}.max_vertices;
    bool all = false;
    bool quiet = false;
    std::string family;
    std::vector<long long> params;
    std::uint64_t seed = 1;

    auto add_file = [&](CLI::App* sub) {
        sub->add_option("file", file, "graph file, or - for standard input")->required();
        sub->add_flag("-q,--quiet", quiet, "print only the headline number");
    };

    auto* verify_cmd = app.add_subcommand("verify", "check whether a vertex set is an MEG-set");
    add_file(verify_cmd);
    verify_cmd->add_option("-s,--set", set_text, "comma-separated vertices")->required();
    verify_cmd->add_option("--max-witnesses", max_witnesses, "monitoring pairs reported per edge")->capture_default_str();

    auto* solve_cmd = app.add_subcommand("solve", "compute a minimum MEG-set");
    add_file(solve_cmd);
    solve_cmd->add_flag("--all", all, "enumerate all minimum MEG-sets");
    solve_cmd->add_option("--limit", limit, "maximum number of sets with --all")->capture_default_str();
    solve_cmd->add_option("--cap", cap, "largest vertex count the exact solver accepts")->capture_default_str();

    auto* construct_cmd = app.add_subcommand("construct", "build an MEG-set from structure");
    add_file(construct_cmd);
    construct_cmd->add_option("-m,--method", method, "fes or class")
        ->check(CLI::IsMember({"fes", "class"}))
        ->capture_default_str();

    auto* simulate_cmd = app.add_subcommand("simulate", "fail one edge and report the probe pairs that notice");
    add_file(simulate_cmd);
    simulate_cmd->add_option("-s,--set", set_text, "comma-separated probe vertices")->required();
    simulate_cmd->add_option("-f,--fail", edge_text, "failed edge as u-v")->required();

    auto* generate_cmd = app.add_subcommand("generate", "write a graph file for a named family");
    generate_cmd->add_option("family", family,
                             "path|cycle|complete|star|multipartite|hypercube|grid|tree|unicyclic|connected|tightness")
        ->required();
    generate_cmd->add_option("params", params, "family parameters");
    generate_cmd->add_option("--seed", seed, "seed for random families")->capture_default_str();

    auto* invariants_cmd = app.add_subcommand("invariants", "report fes, leaves, bounds and the exact MEG number");
    add_file(invariants_cmd);
    invariants_cmd->add_option("--cap", cap, "largest vertex count for the exact solve")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    const auto start = Clock::now();
    try {
        if (generate_cmd->parsed()) {
            Graph g = generate(family, to_ints(params), seed);
            std::string line = "family " + family;
            for (long long p : params) line += " " + std::to_string(p);
            if (is_random_family(family)) line += " seed " + std::to_string(seed);
            write_graph(out, g, {line});
            return kOk;
        }

        Graph g = load_graph(file, in);
        require_connected(g);
        if (verify_cmd->parsed()) return emit(io, "verify", g, start, verify(g, set_text, max_witnesses), quiet);
        if (solve_cmd->parsed()) return emit(io, "solve", g, start, solve(g, all, limit, cap), quiet);
        if (construct_cmd->parsed()) return emit(io, "construct", g, start, construct(g, method), quiet);
        if (simulate_cmd->parsed()) return emit(io, "simulate", g, start, simulate(g, set_text, edge_text), quiet);
        if (invariants_cmd->parsed()) return emit(io, "invariants", g, start, invariants(g, cap), quiet);
    } catch (const DisconnectedGraph& e) {
        return report_error(io, e.what(), kDisconnected);
    } catch (const CapExceeded& e) {
        return report_error(io, e.what(), kCapExceeded);
    } catch (const UnrecognizedClass& e) {
        return report_error(io, e.what(), kUnrecognizedClass);
    } catch (const InvalidInput& e) {
        return report_error(io, e.what(), kInputError);
    } catch (const Error& e) {
        return report_error(io, e.what(), kInputError);
    }
    return kInputError;
}

}  // namespace meg::cli
