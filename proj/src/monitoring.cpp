#include "meg/monitoring.hpp"

#include <algorithm>

#include "meg/error.hpp"

namespace meg {

namespace {

void require_universe(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.vertex_count()) {
        throw InvalidInput("vertex set universe " + std::to_string(s.universe()) + " does not match graph order " +
                           std::to_string(g.vertex_count()));
    }
}

/// Per-call context: BFS rows from every member of the probe set.
class ProbeScan {
public:
    ProbeScan(const Graph& g, const VertexSet& s) : g_(g), members_(s.to_vector()) {
        rows_.reserve(members_.size());
        for (Vertex x : members_) rows_.push_back(distances_from(g, x));
    }

    /// Monitoring pairs for e in lexicographic order, stopping after cap pairs.
    std::vector<VertexPair> witnesses(Edge e, std::size_t cap) const {
        std::vector<VertexPair> found;
        if (cap == 0) return found;
        for (std::size_t i = 0; i < members_.size(); ++i) {
            const auto& dx = rows_[i];
            // Only pairs with e on at least one geodesic can be affected.
            bool candidate = false;
            for (std::size_t j = i + 1; j < members_.size() && !candidate; ++j) {
                candidate = on_some_geodesic(dx, rows_[j], e, members_[j]);
            }
            if (!candidate) continue;
            auto without = distances_from(g_, members_[i], e);
            for (std::size_t j = i + 1; j < members_.size(); ++j) {
                Vertex y = members_[j];
                if (without[y] > dx[y]) {
                    found.push_back({members_[i], y});
                    if (found.size() >= cap) return found;
                }
            }
        }
        return found;
    }

private:
    static bool on_some_geodesic(const std::vector<Distance>& dx, const std::vector<Distance>& dy, Edge e, Vertex y) {
        Distance total = dx[y];
        if (total.is_infinite()) return false;
        return dx[e.u] + Distance(1) + dy[e.v] == total || dx[e.v] + Distance(1) + dy[e.u] == total;
    }

    const Graph& g_;
    std::vector<Vertex> members_;
    std::vector<std::vector<Distance>> rows_;
};

}  // namespace

bool pair_monitors_edge(const Graph& g, Vertex x, Vertex y, Edge e) {
    g.require_vertex(x);
    g.require_vertex(y);
    if (x == y) throw InvalidInput("a monitoring pair needs two distinct vertices");
    g.require_edge(e);
    require_connected(g);
    return distance_without_edge(g, e, x, y) > distance(g, x, y);
}

std::vector<Edge> monitored_edges(const Graph& g, const VertexSet& s) {
    require_universe(g, s);
    require_connected(g);
    ProbeScan scan(g, s);
    std::vector<Edge> out;
    for (const Edge& e : g.edges()) {
        if (!scan.witnesses(e, 1).empty()) out.push_back(e);
    }
    return out;
}

bool is_meg_set(const Graph& g, const VertexSet& s) {
    require_universe(g, s);
    require_connected(g);
    ProbeScan scan(g, s);
    return std::all_of(g.edges().begin(), g.edges().end(),
                       [&](const Edge& e) { return !scan.witnesses(e, 1).empty(); });
}

WitnessReport witness_report(const Graph& g, const VertexSet& s, int max_witnesses_per_edge) {
    require_universe(g, s);
    require_connected(g);
    if (max_witnesses_per_edge < 1) throw InvalidInput("witness cap must be at least 1");
    ProbeScan scan(g, s);
    WitnessReport report;
    report.per_edge.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
        auto pairs = scan.witnesses(e, static_cast<std::size_t>(max_witnesses_per_edge));
        if (pairs.empty()) report.uncovered.push_back(e);
        report.per_edge.push_back({e, std::move(pairs)});
    }
    return report;
}

DetectionReport simulate_failure(const Graph& g, const VertexSet& s, Edge e) {
    require_universe(g, s);
    g.require_edge(e);
    require_connected(g);
    DetectionReport report{e, {}};
    auto members = s.to_vector();
    for (std::size_t i = 0; i < members.size(); ++i) {
        auto before = distances_from(g, members[i]);
        auto after = distances_from(g, members[i], e);
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            Vertex y = members[j];
            if (after[y] > before[y]) report.changes.push_back({{members[i], y}, before[y], after[y]});
        }
    }
    return report;
}

}  // namespace meg
