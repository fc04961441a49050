#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "meg/graph.hpp"
#include "meg/vertex_set.hpp"

namespace meg {

struct SolverOptions {
    /// Graphs with more vertices are rejected with CapExceeded. Hard limit 64.
    int max_vertices = 24;
    /// Seed every candidate with the forced vertices (simplicial and twin).
    /// Disabling gives a plain layered subset search.
    bool seed_with_forced = true;
};

struct SolveResult {
    int meg_number = 0;
    VertexSet optimal_set;
    VertexSet forced;
    std::uint64_t nodes_explored = 0;
};

/// Simplicial vertices together with twins of degree >= 1. Every MEG-set
/// contains them. Requires a connected graph with at least one edge.
VertexSet forced_vertices(const Graph& g);

/// Minimum MEG-set; ties go to the lexicographically smallest set.
/// A graph with a single vertex has MEG number 0.
SolveResult minimum_meg(const Graph& g, const SolverOptions& options = {});

/// All minimum MEG-sets in lexicographic order, at most limit of them.
std::vector<VertexSet> all_minimum_megs(const Graph& g, std::size_t limit, const SolverOptions& options = {});

/// Vertex sets C_i + {v} for the components C_i of g - v, ordered by smallest member of C_i.
std::vector<std::vector<Vertex>> cut_vertex_pieces(const Graph& g, Vertex v);

/// Union of per-piece MEG-sets minus the cut vertex. component_sets[i] is over
/// g's vertex ids and must be an MEG-set of the i-th piece from cut_vertex_pieces.
VertexSet compose_via_cut_vertex(const Graph& g, Vertex v, std::span<const VertexSet> component_sets);

}  // namespace meg
