#include "meg/graph.hpp"

#include <algorithm>
#include <deque>

#include "meg/error.hpp"

namespace meg {

Graph Graph::build(int n, std::span<const std::pair<Vertex, Vertex>> edges, bool strict) {
    if (n < 0) throw InvalidInput("vertex count must be nonnegative");
    Graph g;
    g.adjacency_.resize(n);
    g.edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a < 0 || a >= n || b < 0 || b >= n) {
            throw InvalidInput("edge (" + std::to_string(a) + "," + std::to_string(b) + ") has an endpoint outside 0.." +
                               std::to_string(n - 1));
        }
        if (a == b) throw InvalidInput("self-loop at vertex " + std::to_string(a));
        g.edges_.emplace_back(a, b);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
    if (dup != g.edges_.end()) {
        if (strict) {
            throw InvalidInput("duplicate edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ")");
        }
        g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
    }
    for (const Edge& e : g.edges_) {
        g.adjacency_[e.u].push_back(e.v);
        g.adjacency_[e.v].push_back(e.u);
    }
    for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
    return g;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    if (!is_vertex(a) || !is_vertex(b) || a == b) return false;
    const auto& list = adjacency_[a];
    return std::binary_search(list.begin(), list.end(), b);
}

std::optional<int> Graph::edge_index(Edge e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e) return std::nullopt;
    return static_cast<int>(it - edges_.begin());
}

void Graph::require_vertex(Vertex v) const {
    if (!is_vertex(v)) {
        throw InvalidInput("vertex " + std::to_string(v) + " outside 0.." + std::to_string(vertex_count() - 1));
    }
}

void Graph::require_edge(Edge e) const {
    if (!has_edge(e.u, e.v)) {
        throw InvalidInput("(" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not an edge of the graph");
    }
}

std::vector<Distance> distances_from(const Graph& g, Vertex source, std::optional<Edge> skip) {
    g.require_vertex(source);
    std::vector<Distance> dist(g.vertex_count(), Distance::infinite());
    std::deque<Vertex> queue{source};
    dist[source] = Distance(0);
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex w : g.neighbors(u)) {
            if (skip && Edge(u, w) == *skip) continue;
            if (dist[w].is_infinite()) {
                dist[w] = dist[u] + Distance(1);
                queue.push_back(w);
            }
        }
    }
    return dist;
}

Distance distance(const Graph& g, Vertex u, Vertex v) {
    g.require_vertex(v);
    return distances_from(g, u)[v];
}

DistanceMatrix distance_matrix(const Graph& g) {
    DistanceMatrix table(g.vertex_count());
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        auto row = distances_from(g, s);
        for (Vertex t = 0; t < g.vertex_count(); ++t) table.set(s, t, row[t]);
    }
    return table;
}

std::uint64_t count_shortest_paths(const Graph& g, Vertex u, Vertex v) {
    g.require_vertex(u);
    g.require_vertex(v);
    if (u == v) throw InvalidInput("count_shortest_paths needs distinct endpoints");
    auto dist = distances_from(g, u);
    if (dist[v].is_infinite()) return 0;

    // Process vertices in BFS layer order; each count is the sum over DAG predecessors.
    std::vector<Vertex> order(g.vertex_count());
    for (Vertex w = 0; w < g.vertex_count(); ++w) order[w] = w;
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return dist[a] < dist[b]; });

    std::vector<std::uint64_t> paths(g.vertex_count(), 0);
    paths[u] = 1;
    for (Vertex w : order) {
        if (dist[w].is_infinite() || dist[w] >= dist[v]) break;
        for (Vertex x : g.neighbors(w)) {
            if (dist[x] == dist[w] + Distance(1)) {
                if (__builtin_add_overflow(paths[x], paths[w], &paths[x])) {
                    throw CountOverflow("geodesic count exceeds 64 bits");
                }
            }
        }
    }
    return paths[v];
}

Distance distance_without_edge(const Graph& g, Edge e, Vertex u, Vertex v) {
    g.require_edge(e);
    g.require_vertex(v);
    return distances_from(g, u, e)[v];
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    auto dist = distances_from(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](Distance d) { return d.is_infinite(); });
}

void require_connected(const Graph& g) {
    if (!is_connected(g)) throw DisconnectedGraph();
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    InducedSubgraph out;
    out.to_parent.assign(vertices.begin(), vertices.end());
    std::sort(out.to_parent.begin(), out.to_parent.end());
    out.to_parent.erase(std::unique(out.to_parent.begin(), out.to_parent.end()), out.to_parent.end());

    std::vector<int> local(g.vertex_count(), -1);
    for (std::size_t i = 0; i < out.to_parent.size(); ++i) {
        g.require_vertex(out.to_parent[i]);
        local[out.to_parent[i]] = static_cast<int>(i);
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (const Edge& e : g.edges()) {
        if (local[e.u] >= 0 && local[e.v] >= 0) edges.emplace_back(local[e.u], local[e.v]);
    }
    out.graph = Graph::build(static_cast<int>(out.to_parent.size()), edges);
    return out;
}

std::vector<std::vector<Vertex>> components_without(const Graph& g, Vertex v) {
    g.require_vertex(v);
    std::vector<int> label(g.vertex_count(), -1);
    label[v] = -2;
    std::vector<std::vector<Vertex>> comps;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (label[s] != -1) continue;
        int id = static_cast<int>(comps.size());
        comps.emplace_back();
        std::vector<Vertex> stack{s};
        label[s] = id;
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            comps[id].push_back(u);
            for (Vertex w : g.neighbors(u)) {
                if (label[w] == -1) {
                    label[w] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comps[id].begin(), comps[id].end());
    }
    return comps;
}

std::vector<Vertex> leaves(const Graph& g) {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 1) out.push_back(v);
    }
    return out;
}

VertexSet simplicial_vertices(const Graph& g) {
    VertexSet out(g.vertex_count());
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        auto nb = g.neighbors(v);
        bool clique = true;
        for (std::size_t i = 0; i < nb.size() && clique; ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (!g.has_edge(nb[i], nb[j])) {
                    clique = false;
                    break;
                }
            }
        }
        if (clique) out.insert(v);
    }
    return out;
}

namespace {

std::vector<Vertex> closed_neighborhood(const Graph& g, Vertex v) {
    std::vector<Vertex> out(g.neighbors(v).begin(), g.neighbors(v).end());
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

}  // namespace

VertexSet twin_vertices(const Graph& g) {
    const int n = g.vertex_count();
    VertexSet out(n);
    std::vector<std::vector<Vertex>> closed(n);
    for (Vertex v = 0; v < n; ++v) closed[v] = closed_neighborhood(g, v);
    for (Vertex u = 0; u < n; ++u) {
        if (g.degree(u) == 0) continue;
        for (Vertex v = u + 1; v < n; ++v) {
            if (g.degree(v) != g.degree(u)) continue;
            auto nu = g.neighbors(u);
            auto nv = g.neighbors(v);
            bool open = std::equal(nu.begin(), nu.end(), nv.begin(), nv.end());
            if (open || closed[u] == closed[v]) {
                out.insert(u);
                out.insert(v);
            }
        }
    }
    return out;
}

VertexSet cut_vertices(const Graph& g) {
    require_connected(g);
    const int n = g.vertex_count();
    VertexSet out(n);
    if (n < 3) return out;

    // Iterative low-link DFS from vertex 0.
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    std::vector<std::size_t> next(n, 0);
    int timer = 0;
    int root_children = 0;
    std::vector<Vertex> stack{0};
    disc[0] = low[0] = timer++;
    while (!stack.empty()) {
        Vertex u = stack.back();
        auto nb = g.neighbors(u);
        if (next[u] < nb.size()) {
            Vertex w = nb[next[u]++];
            if (disc[w] == -1) {
                parent[w] = u;
                disc[w] = low[w] = timer++;
                if (u == 0) ++root_children;
                stack.push_back(w);
            } else if (w != parent[u]) {
                low[u] = std::min(low[u], disc[w]);
            }
            continue;
        }
        stack.pop_back();
        Vertex p = parent[u];
        if (p >= 0) {
            low[p] = std::min(low[p], low[u]);
            if (p != 0 && low[u] >= disc[p]) out.insert(p);
        }
    }
    if (root_children > 1) out.insert(0);
    return out;
}

}  // namespace meg
