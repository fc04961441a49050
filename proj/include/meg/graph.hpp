#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "meg/vertex_set.hpp"

namespace meg {

/// Undirected edge, normalized so that u < v.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    Edge() = default;
    Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Hop distance with a distinguished infinite value. Addition saturates.
class Distance {
public:
    constexpr Distance() = default;
    constexpr explicit Distance(std::uint32_t hops) : hops_(hops < kInfinite ? hops : kInfinite) {}

    static constexpr Distance infinite() { return Distance(kInfinite); }

    constexpr bool is_infinite() const { return hops_ == kInfinite; }
    constexpr bool is_finite() const { return hops_ != kInfinite; }
    /// Only meaningful for finite distances.
    constexpr std::uint32_t hops() const { return hops_; }

    friend constexpr Distance operator+(Distance a, Distance b) {
        if (a.is_infinite() || b.is_infinite()) return infinite();
        std::uint64_t sum = std::uint64_t{a.hops_} + b.hops_;
        return sum >= kInfinite ? infinite() : Distance(static_cast<std::uint32_t>(sum));
    }

    friend constexpr auto operator<=>(Distance, Distance) = default;

    std::string to_string() const { return is_infinite() ? "INFINITE" : std::to_string(hops_); }

private:
    static constexpr std::uint32_t kInfinite = std::numeric_limits<std::uint32_t>::max();
    std::uint32_t hops_ = 0;
};

/// Immutable simple undirected graph on vertices 0..n-1.
/// Edges are stored sorted; adjacency lists are sorted.
class Graph {
public:
    Graph() = default;

    /// Validates and normalizes. With strict=false duplicate edges are merged
    /// instead of rejected. Throws InvalidInput.
    static Graph build(int n, std::span<const std::pair<Vertex, Vertex>> edges, bool strict = true);
    static Graph build(int n, std::initializer_list<std::pair<Vertex, Vertex>> edges, bool strict = true) {
        return build(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()), strict);
    }

    int vertex_count() const { return static_cast<int>(adjacency_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adjacency_[v].size()); }

    bool is_vertex(Vertex v) const { return v >= 0 && v < vertex_count(); }
    bool has_edge(Vertex a, Vertex b) const;
    /// Position of the edge in edges(), if present.
    std::optional<int> edge_index(Edge e) const;

    /// Throws InvalidInput for ids outside [0, n).
    void require_vertex(Vertex v) const;
    void require_edge(Edge e) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
};

inline Graph build_graph(int n, std::span<const std::pair<Vertex, Vertex>> edges, bool strict = true) {
    return Graph::build(n, edges, strict);
}

class DistanceMatrix {
public:
    DistanceMatrix() = default;
    explicit DistanceMatrix(int n) : n_(n), table_(static_cast<std::size_t>(n) * n, Distance::infinite()) {}

    int size() const { return n_; }
    Distance at(Vertex u, Vertex v) const { return table_[index(u, v)]; }
    void set(Vertex u, Vertex v, Distance d) { table_[index(u, v)] = d; }
    std::span<const Distance> row(Vertex u) const {
        return std::span<const Distance>(table_).subspan(static_cast<std::size_t>(u) * n_, n_);
    }

private:
    std::size_t index(Vertex u, Vertex v) const { return static_cast<std::size_t>(u) * n_ + v; }

    int n_ = 0;
    std::vector<Distance> table_;
};

/// Single-source BFS. When skip is given, that edge is treated as absent.
std::vector<Distance> distances_from(const Graph& g, Vertex source, std::optional<Edge> skip = std::nullopt);

Distance distance(const Graph& g, Vertex u, Vertex v);
DistanceMatrix distance_matrix(const Graph& g);

/// Number of geodesics between u and v, 0 when disconnected. Throws
/// CountOverflow rather than wrapping.
std::uint64_t count_shortest_paths(const Graph& g, Vertex u, Vertex v);

/// Distance between u and v in g - e. Throws InvalidInput if e is not an edge of g.
Distance distance_without_edge(const Graph& g, Edge e, Vertex u, Vertex v);

bool is_connected(const Graph& g);
/// Throws DisconnectedGraph unless g is connected.
void require_connected(const Graph& g);

struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_parent;  // local id -> id in the parent graph
};

/// Subgraph induced by the given vertices, relabeled 0..k-1 in ascending parent order.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Connected components of g - v, each sorted, ordered by smallest member.
std::vector<std::vector<Vertex>> components_without(const Graph& g, Vertex v);

std::vector<Vertex> leaves(const Graph& g);

/// Vertices whose open neighborhood is a clique (leaves and isolated vertices included).
VertexSet simplicial_vertices(const Graph& g);

/// Vertices of degree >= 1 having an open twin (N(u) = N(v)) or a closed twin (N[u] = N[v]).
VertexSet twin_vertices(const Graph& g);

/// Articulation vertices. Throws DisconnectedGraph.
VertexSet cut_vertices(const Graph& g);

}  // namespace meg
