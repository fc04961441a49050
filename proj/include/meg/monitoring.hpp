#pragma once

#include <vector>

#include "meg/graph.hpp"
#include "meg/vertex_set.hpp"

namespace meg {

struct VertexPair {
    Vertex x = 0;
    Vertex y = 0;
    friend auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

struct EdgeWitnesses {
    Edge edge;
    std::vector<VertexPair> pairs;  // lexicographic, capped
};

struct WitnessReport {
    std::vector<EdgeWitnesses> per_edge;  // in graph edge order
    std::vector<Edge> uncovered;

    bool all_covered() const { return uncovered.empty(); }
};

struct ProbeChange {
    VertexPair pair;
    Distance before;
    Distance after;
};

struct DetectionReport {
    Edge failed;
    std::vector<ProbeChange> changes;  // pairs whose distance strictly increased

    bool detected() const { return !changes.empty(); }
};

/// True iff e lies on every geodesic between x and y, i.e. removing e
/// strictly increases d(x, y) (disconnection counts as an increase).
bool pair_monitors_edge(const Graph& g, Vertex x, Vertex y, Edge e);

/// Edges monitored by some pair of s, in graph edge order.
std::vector<Edge> monitored_edges(const Graph& g, const VertexSet& s);

bool is_meg_set(const Graph& g, const VertexSet& s);

WitnessReport witness_report(const Graph& g, const VertexSet& s, int max_witnesses_per_edge);

DetectionReport simulate_failure(const Graph& g, const VertexSet& s, Edge e);

}  // namespace meg
