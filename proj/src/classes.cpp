#include "meg/classes.hpp"

#include <algorithm>
#include <bit>
#include <optional>

#include "meg/error.hpp"

namespace meg {

std::string_view to_string(GraphClass c) {
    switch (c) {
        case GraphClass::Tree: return "TREE";
        case GraphClass::Cycle: return "CYCLE";
        case GraphClass::Unicyclic: return "UNICYCLIC";
        case GraphClass::Complete: return "COMPLETE";
        case GraphClass::Multipartite: return "MULTIPARTITE";
        case GraphClass::Hypercube: return "HYPERCUBE";
        case GraphClass::Grid: return "GRID";
    }
    return "UNKNOWN";
}

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

void require_at_least(int value, int minimum, const char* what) {
    if (value < minimum) {
        throw InvalidInput(std::string(what) + " must be at least " + std::to_string(minimum) + ", got " +
                           std::to_string(value));
    }
}

bool is_tree(const Graph& g) {
    return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

ClassResult whole_vertex_set(int n, GraphClass tag) { return {n, VertexSet::all(n), tag}; }

}  // namespace

Graph gen_path(int n) {
    require_at_least(n, 1, "path order");
    EdgeList edges;
    for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::build(n, edges);
}

Graph gen_cycle(int n) {
    require_at_least(n, 3, "cycle order");
    EdgeList edges;
    for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::build(n, edges);
}

Graph gen_complete(int n) {
    require_at_least(n, 1, "complete graph order");
    EdgeList edges;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::build(n, edges);
}

Graph gen_star(int leaves) {
    require_at_least(leaves, 1, "star leaf count");
    EdgeList edges;
    for (Vertex i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph::build(leaves + 1, edges);
}

Graph gen_multipartite(std::span<const int> parts) {
    require_at_least(static_cast<int>(parts.size()), 2, "number of parts");
    std::vector<int> part_of;
    for (std::size_t p = 0; p < parts.size(); ++p) {
        require_at_least(parts[p], 1, "part size");
        part_of.insert(part_of.end(), parts[p], static_cast<int>(p));
    }
    const int n = static_cast<int>(part_of.size());
    EdgeList edges;
    for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
            if (part_of[i] != part_of[j]) edges.emplace_back(i, j);
    return Graph::build(n, edges);
}

Graph gen_hypercube(int dimension) {
    require_at_least(dimension, 1, "hypercube dimension");
    if (dimension > 20) throw InvalidInput("hypercube dimension above 20 is not supported");
    const int n = 1 << dimension;
    EdgeList edges;
    for (Vertex v = 0; v < n; ++v)
        for (int bit = 0; bit < dimension; ++bit) {
            Vertex w = v ^ (1 << bit);
            if (v < w) edges.emplace_back(v, w);
        }
    return Graph::build(n, edges);
}

Graph gen_grid(int rows, int cols) {
    require_at_least(rows, 1, "grid rows");
    require_at_least(cols, 1, "grid columns");
    EdgeList edges;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            Vertex v = i * cols + j;
            if (j + 1 < cols) edges.emplace_back(v, v + 1);
            if (i + 1 < rows) edges.emplace_back(v, v + cols);
        }
    return Graph::build(rows * cols, edges);
}

ClassResult meg_tree(const Graph& g) {
    if (g.edge_count() == 0 || !is_tree(g)) throw InvalidInput("graph is not a tree with at least one edge");
    auto leaf_list = leaves(g);
    return {static_cast<int>(leaf_list.size()), VertexSet::of(g.vertex_count(), leaf_list), GraphClass::Tree};
}

ClassResult meg_cycle(int n) {
    require_at_least(n, 3, "cycle order");
    if (n == 4) return whole_vertex_set(4, GraphClass::Cycle);
    return {3, VertexSet(n, {0, n / 3, 2 * n / 3}), GraphClass::Cycle};
}

ClassResult meg_complete(int n) {
    require_at_least(n, 2, "complete graph order");
    return whole_vertex_set(n, GraphClass::Complete);
}

ClassResult meg_multipartite(std::span<const int> parts) {
    Graph g = gen_multipartite(parts);
    const int n = g.vertex_count();
    if (parts.size() == 2 && n == 2) return meg_complete(2);
    if (parts.size() == 2 && (parts[0] == 1 || parts[1] == 1)) {
        VertexSet witness = VertexSet::all(n);
        witness.erase(parts[0] == 1 ? 0 : n - 1);
        return {n - 1, witness, GraphClass::Multipartite};
    }
    return whole_vertex_set(n, GraphClass::Multipartite);
}

ClassResult meg_hypercube(int dimension) {
    require_at_least(dimension, 2, "hypercube dimension");
    if (dimension > 20) throw InvalidInput("hypercube dimension above 20 is not supported");
    return whole_vertex_set(1 << dimension, GraphClass::Hypercube);
}

ClassResult meg_grid(int rows, int cols) {
    require_at_least(rows, 1, "grid rows");
    require_at_least(cols, 1, "grid columns");
    if (rows < 2 || cols < 2) return meg_tree(gen_grid(rows, cols));
    VertexSet boundary(rows * cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            if (i == 0 || j == 0 || i == rows - 1 || j == cols - 1) boundary.insert(i * cols + j);
    return {2 * (rows + cols - 2), boundary, GraphClass::Grid};
}

UnicyclicProfile unicyclic_profile(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3 || g.edge_count() != n || !is_connected(g)) throw InvalidInput("graph is not unicyclic");

    std::vector<int> degree(n);
    std::vector<char> removed(n, 0);
    std::vector<Vertex> stack;
    for (Vertex v = 0; v < n; ++v) {
        degree[v] = g.degree(v);
        if (degree[v] == 1) stack.push_back(v);
    }
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        removed[v] = 1;
        for (Vertex w : g.neighbors(v)) {
            if (!removed[w] && --degree[w] == 1) stack.push_back(w);
        }
    }

    UnicyclicProfile profile;
    profile.leaf_count = static_cast<int>(leaves(g).size());
    profile.core_on_cycle = VertexSet(n);
    Vertex start = -1;
    for (Vertex v = 0; v < n; ++v) {
        if (removed[v]) continue;
        if (start < 0) start = v;
        if (g.degree(v) >= 3) profile.core_on_cycle.insert(v);
    }
    if (!profile.core_on_cycle.empty()) start = profile.core_on_cycle.to_vector().front();

    // Walk the cycle, stepping first to the smaller remaining neighbor.
    Vertex prev = -1;
    Vertex cur = start;
    do {
        profile.cycle.push_back(cur);
        Vertex next = -1;
        for (Vertex w : g.neighbors(cur)) {
            if (!removed[w] && w != prev) {
                next = w;
                break;
            }
        }
        prev = cur;
        cur = next;
    } while (cur != start);
    profile.cycle_length = static_cast<int>(profile.cycle.size());

    const int k = profile.cycle_length;
    if (profile.core_on_cycle.empty()) {
        profile.long_arc = k - 1 >= k / 2;
    } else {
        int run = 0;
        int longest = 0;
        // Start right after a core vertex so that runs do not wrap.
        for (int i = 1; i <= k; ++i) {
            Vertex v = profile.cycle[i % k];
            run = profile.core_on_cycle.contains(v) ? 0 : run + 1;
            longest = std::max(longest, run);
        }
        profile.long_arc = longest >= 1 && longest - 1 >= k / 2;
    }
    return profile;
}

ClassResult meg_unicyclic(const Graph& g) {
    UnicyclicProfile profile = unicyclic_profile(g);
    const int k = profile.cycle_length;
    const auto& cycle = profile.cycle;
    VertexSet witness = VertexSet::of(g.vertex_count(), leaves(g));

    // Longest allowed gap between consecutive probe positions on the cycle:
    // a pair of positions monitors the arc between them only if that arc is
    // strictly shorter than the other one.
    const int max_gap = (k + 1) / 2 - 1;

    if (profile.core_on_cycle.empty()) {
        ClassResult bare = meg_cycle(k);
        bare.witness.for_each([&](Vertex i) { witness.insert(cycle[i]); });
    } else {
        std::vector<int> positions;
        for (int i = 0; i < k; ++i) {
            if (profile.core_on_cycle.contains(cycle[i])) positions.push_back(i);
        }
        for (std::size_t p = 0; p < positions.size(); ++p) {
            int from = positions[p];
            int gap = p + 1 < positions.size() ? positions[p + 1] - from : k - from + positions[0];
            int splits = (gap + max_gap - 1) / max_gap - 1;
            for (int j = 1; j <= splits; ++j) witness.insert(cycle[(from + gap * j / (splits + 1)) % k]);
        }
    }
    return {witness.size(), witness, GraphClass::Unicyclic};
}

int unicyclic_stated_value(const UnicyclicProfile& profile) {
    const int k = profile.cycle_length;
    const int l = profile.leaf_count;
    const int core = profile.core_on_cycle.size();
    if (k <= 4) return l + k - core;
    if (core == 0) return 3;
    if (core == 1) return l + 2;
    return l + (profile.long_arc ? 1 : 0);
}

namespace {

/// Non-adjacency is an equivalence relation with at least two classes.
std::optional<std::vector<int>> multipartite_parts(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> part(n, -1);
    std::vector<int> sizes;
    for (Vertex v = 0; v < n; ++v) {
        if (part[v] >= 0) continue;
        int id = static_cast<int>(sizes.size());
        sizes.push_back(0);
        for (Vertex w = v; w < n; ++w) {
            if (w == v || !g.has_edge(v, w)) {
                if (part[w] >= 0) return std::nullopt;
                part[w] = id;
                ++sizes[id];
            }
        }
    }
    if (sizes.size() < 2) return std::nullopt;
    long long expected = 0;
    for (Vertex v = 0; v < n; ++v) expected += n - sizes[part[v]];
    if (expected / 2 != g.edge_count()) return std::nullopt;
    for (const Edge& e : g.edges()) {
        if (part[e.u] == part[e.v]) return std::nullopt;
    }
    return sizes;
}

}  // namespace

ClassResult meg_by_class(const Graph& g) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    if (m == 0 || !is_connected(g)) throw UnrecognizedClass("no class result applies to this graph");
    if (is_tree(g)) return meg_tree(g);
    bool two_regular = true;
    for (Vertex v = 0; v < n; ++v) two_regular = two_regular && g.degree(v) == 2;
    if (m == n && two_regular) {
        ClassResult bare = meg_cycle(n);
        auto cycle = unicyclic_profile(g).cycle;
        VertexSet witness(n);
        bare.witness.for_each([&](Vertex i) { witness.insert(cycle[i]); });
        return {bare.meg_number, witness, GraphClass::Cycle};
    }
    if (static_cast<long long>(m) * 2 == static_cast<long long>(n) * (n - 1)) return meg_complete(n);
    if (m == n) return meg_unicyclic(g);
    if (auto parts = multipartite_parts(g)) {
        ClassResult r = meg_multipartite(*parts);
        return {r.meg_number, VertexSet::all(n), GraphClass::Multipartite};
    }
    if (n >= 4 && std::has_single_bit(static_cast<unsigned>(n))) {
        int dimension = std::countr_zero(static_cast<unsigned>(n));
        if (dimension <= 20 && g == gen_hypercube(dimension)) return meg_hypercube(dimension);
    }
    for (int rows = 2; rows * 2 <= n; ++rows) {
        if (n % rows == 0 && n / rows >= 2 && g == gen_grid(rows, n / rows)) return meg_grid(rows, n / rows);
    }
    throw UnrecognizedClass("graph matches none of the recognized classes");
}

}  // namespace meg
