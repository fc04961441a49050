#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "meg/graph.hpp"
#include "meg/vertex_set.hpp"

namespace meg {

enum class GraphClass { Tree, Cycle, Unicyclic, Complete, Multipartite, Hypercube, Grid };

std::string_view to_string(GraphClass c);

struct ClassResult {
    int meg_number = 0;
    VertexSet witness;
    GraphClass theorem = GraphClass::Tree;
};

// Generators. Vertex numbering is canonical: cycle i ~ (i+1) mod n, star
// center 0, multipartite part by part, hypercube by bit label, grid (i, j) -> i*cols + j.
Graph gen_path(int n);
Graph gen_cycle(int n);
Graph gen_complete(int n);
Graph gen_star(int leaves);
Graph gen_multipartite(std::span<const int> parts);
Graph gen_hypercube(int dimension);
Graph gen_grid(int rows, int cols);

ClassResult meg_tree(const Graph& g);
ClassResult meg_cycle(int n);
ClassResult meg_complete(int n);
ClassResult meg_multipartite(std::span<const int> parts);
ClassResult meg_hypercube(int dimension);
ClassResult meg_grid(int rows, int cols);

struct UnicyclicProfile {
    int cycle_length = 0;
    int leaf_count = 0;
    /// Cycle vertices in cyclic order, starting at the smallest core vertex
    /// (or the smallest cycle vertex when the cycle carries no trees).
    std::vector<Vertex> cycle;
    /// Cycle vertices of degree >= 3.
    VertexSet core_on_cycle;
    /// Some run of consecutive degree-2 cycle vertices spans at least
    /// floor(k/2) edges.
    bool long_arc = false;
};

UnicyclicProfile unicyclic_profile(const Graph& g);

/// Exact MEG number of a unicyclic graph with a verified witness: the leaves
/// plus, on the cycle, enough vertices that consecutive probe positions
/// (core vertices and chosen vertices) are fewer than k/2 edges apart.
ClassResult meg_unicyclic(const Graph& g);

/// The published case split: l + k - |V+| for k <= 4; for k >= 5, 3, l + 2
/// or l + p by |V+| = 0, 1, > 1. Disagrees with meg_unicyclic on some graphs
/// with two or more core vertices on a cycle of length >= 5.
int unicyclic_stated_value(const UnicyclicProfile& profile);

/// Recognizes tree, cycle, complete, unicyclic, complete multipartite,
/// hypercube (canonical labels) and grid (canonical labels), in that order.
/// Throws UnrecognizedClass otherwise.
ClassResult meg_by_class(const Graph& g);

}  // namespace meg
