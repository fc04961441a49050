#pragma once

#include <optional>
#include <vector>

#include "meg/graph.hpp"
#include "meg/vertex_set.hpp"

namespace meg {

struct HangingTree {
    /// Vertex shared with the base graph; empty when the whole graph is a tree.
    std::optional<Vertex> root;
    /// Sorted, root included.
    std::vector<Vertex> vertices;
};

/// Ids in paths, cycles and trees refer to the input graph.
struct CoreDecomposition {
    /// Base graph (2-core) relabeled; base.to_parent maps back. Empty for trees.
    InducedSubgraph base;
    std::vector<HangingTree> hanging_trees;  // one per root, ordered by root
    /// Vertices of degree >= 3 in the base graph.
    VertexSet core_vertices;
    /// Each runs from one core vertex to a different one; interior has base degree 2.
    std::vector<std::vector<Vertex>> proper_core_paths;
    /// Each starts at its core vertex, which is not repeated at the end. A base
    /// graph that is a bare cycle is reported as one cycle starting at its smallest vertex.
    std::vector<std::vector<Vertex>> core_cycles;
};

struct FesConstruction {
    VertexSet meg_set;
    int k = 0;
    int leaf_count = 0;
    int budget = 0;
};

/// m - n + 1. Throws DisconnectedGraph.
int feedback_edge_number(const Graph& g);

/// Strips degree-1 vertices repeatedly; fills base and hanging_trees only.
CoreDecomposition base_graph(const Graph& g);

/// Full decomposition. Requires feedback edge number >= 1.
CoreDecomposition core_decomposition(const Graph& g);

/// Leaves, base core vertices, the middle vertex or vertices of every proper
/// core path of length >= 2, and two or three evenly spaced vertices of
/// every core cycle. The result is verified and checked against the
/// 9k + |L| - 8 budget (|L| + 4 when k = 1, |L| when k = 0); a violation throws.
FesConstruction fes_meg_construction(const Graph& g);

/// Exhaustive: n minus the smallest connected dominating set (n >= 3).
/// Throws CapExceeded above max_vertices.
int max_leaf_number(const Graph& g, int max_vertices = 12);

/// k four-cycles sharing vertex 0, plus `leaves` pendant vertices on vertex 0.
Graph gen_tightness_family(int k, int leaves);

}  // namespace meg
