#pragma once

#include <cstdint>

#include "meg/graph.hpp"
#include "meg/vertex_set.hpp"

namespace meg {

// Verifiers for the weaker covering notions an MEG-set also satisfies.
// All of them require a connected graph.

/// Every vertex lies on a geodesic between two members of s.
bool is_geodetic_set(const Graph& g, const VertexSet& s);

/// Every edge lies on a geodesic between two members of s.
bool is_edge_geodetic_set(const Graph& g, const VertexSet& s);

struct StrongGeodeticOptions {
    /// Limit on the product, over pairs of s, of the number of distinct
    /// useful geodesic choices (see is_strong_edge_geodetic_set).
    std::uint64_t max_combinations = 1'000'000;
};

/// One geodesic per pair of s can be chosen so that together they cover
/// every edge. Exact backtracking. Before searching, edges lying on every
/// geodesic of some pair are taken as covered, each pair's choices are
/// reduced to the distinct sets of remaining edges they add, and choices
/// contained in another choice are dropped; this leaves the answer
/// unchanged. Throws CapExceeded when the product of the reduced choice
/// counts is above the cap.
bool is_strong_edge_geodetic_set(const Graph& g, const VertexSet& s, const StrongGeodeticOptions& options = {});

/// For every edge some x in s and some vertex y of g monitor it.
bool is_dem_set(const Graph& g, const VertexSet& s);

}  // namespace meg
