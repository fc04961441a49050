#include "meg/structure.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "meg/classes.hpp"
#include "meg/error.hpp"
#include "meg/monitoring.hpp"

namespace meg {

int feedback_edge_number(const Graph& g) {
    require_connected(g);
    if (g.vertex_count() == 0) return 0;
    return g.edge_count() - g.vertex_count() + 1;
}

CoreDecomposition base_graph(const Graph& g) {
    require_connected(g);
    const int n = g.vertex_count();

    std::vector<int> degree(n);
    std::vector<char> stripped(n, 0);
    std::vector<Vertex> stack;
    for (Vertex v = 0; v < n; ++v) {
        degree[v] = g.degree(v);
        if (degree[v] <= 1) stack.push_back(v);
    }
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        if (stripped[v]) continue;
        stripped[v] = 1;
        for (Vertex w : g.neighbors(v)) {
            if (!stripped[w] && --degree[w] == 1) stack.push_back(w);
        }
    }

    CoreDecomposition out;
    out.core_vertices = VertexSet(n);
    std::vector<Vertex> kept;
    for (Vertex v = 0; v < n; ++v) {
        if (!stripped[v]) kept.push_back(v);
    }
    out.base = induced_subgraph(g, kept);

    if (kept.empty()) {
        if (n > 0) {
            HangingTree whole;
            for (Vertex v = 0; v < n; ++v) whole.vertices.push_back(v);
            out.hanging_trees.push_back(std::move(whole));
        }
        return out;
    }

    // Each component of the stripped vertices touches exactly one base vertex.
    std::map<Vertex, std::vector<Vertex>> by_root;
    std::vector<char> seen(n, 0);
    for (Vertex s = 0; s < n; ++s) {
        if (!stripped[s] || seen[s]) continue;
        std::vector<Vertex> members;
        Vertex root = -1;
        std::vector<Vertex> todo{s};
        seen[s] = 1;
        while (!todo.empty()) {
            Vertex u = todo.back();
            todo.pop_back();
            members.push_back(u);
            for (Vertex w : g.neighbors(u)) {
                if (!stripped[w]) {
                    root = w;
                } else if (!seen[w]) {
                    seen[w] = 1;
                    todo.push_back(w);
                }
            }
        }
        auto& tree = by_root[root];
        tree.insert(tree.end(), members.begin(), members.end());
    }
    for (auto& [root, members] : by_root) {
        members.push_back(root);
        std::sort(members.begin(), members.end());
        out.hanging_trees.push_back({root, std::move(members)});
    }
    return out;
}

CoreDecomposition core_decomposition(const Graph& g) {
    if (feedback_edge_number(g) < 1) throw InvalidInput("core decomposition needs at least one cycle");
    CoreDecomposition out = base_graph(g);
    const Graph& base = out.base.graph;
    const auto& parent = out.base.to_parent;
    const int b = base.vertex_count();

    std::vector<Vertex> core_local;
    for (Vertex v = 0; v < b; ++v) {
        if (base.degree(v) >= 3) {
            core_local.push_back(v);
            out.core_vertices.insert(parent[v]);
        }
    }

    auto to_parent = [&](const std::vector<Vertex>& local) {
        std::vector<Vertex> mapped;
        mapped.reserve(local.size());
        for (Vertex v : local) mapped.push_back(parent[v]);
        return mapped;
    };

    if (core_local.empty()) {
        // The base graph is a single cycle.
        std::vector<Vertex> cycle{0};
        Vertex prev = -1;
        Vertex cur = 0;
        while (true) {
            auto nb = base.neighbors(cur);
            Vertex next = nb[0] != prev ? nb[0] : nb[1];
            if (next == 0) break;
            cycle.push_back(next);
            prev = cur;
            cur = next;
        }
        out.core_cycles.push_back(to_parent(cycle));
        return out;
    }

    std::vector<char> used(base.edge_count(), 0);
    for (Vertex c : core_local) {
        for (Vertex first : base.neighbors(c)) {
            int ei = *base.edge_index(Edge(c, first));
            if (used[ei]) continue;
            used[ei] = 1;
            std::vector<Vertex> walk{c, first};
            Vertex prev = c;
            Vertex cur = first;
            while (base.degree(cur) == 2) {
                auto nb = base.neighbors(cur);
                Vertex next = nb[0] != prev ? nb[0] : nb[1];
                used[*base.edge_index(Edge(cur, next))] = 1;
                walk.push_back(next);
                prev = cur;
                cur = next;
            }
            if (cur == c) {
                walk.pop_back();
                out.core_cycles.push_back(to_parent(walk));
            } else {
                out.proper_core_paths.push_back(to_parent(walk));
            }
        }
    }
    return out;
}

namespace {

constexpr int kMaxLeafHardLimit = 24;

/// Offsets on a cycle of the given length (offset 0 is already a probe) such
/// that consecutive probes are fewer than length/2 edges apart.
std::vector<int> cycle_offsets(int length) {
    std::vector<int> marks{0, length / 3, 2 * length / 3};
    marks.erase(std::unique(marks.begin(), marks.end()), marks.end());
    for (std::size_t i = 0; i < marks.size(); ++i) {
        int from = marks[i];
        int to = i + 1 < marks.size() ? marks[i + 1] : length;
        if (2 * (to - from) >= length) {
            marks.insert(marks.begin() + static_cast<long>(i) + 1, from + (to - from) / 2);
            break;
        }
    }
    return {marks.begin() + 1, marks.end()};
}

}  // namespace

FesConstruction fes_meg_construction(const Graph& g) {
    require_connected(g);
    if (g.edge_count() == 0) throw InvalidInput("construction needs at least one edge");
    const int n = g.vertex_count();

    FesConstruction out;
    out.k = feedback_edge_number(g);
    auto leaf_list = leaves(g);
    out.leaf_count = static_cast<int>(leaf_list.size());
    out.meg_set = VertexSet::of(n, leaf_list);

    if (out.k == 0) {
        out.budget = out.leaf_count;
    } else if (out.k == 1) {
        out.budget = out.leaf_count + 4;
        // The base graph is the unique cycle, walked from its smallest attachment point.
        auto profile = unicyclic_profile(g);
        ClassResult bare = meg_cycle(profile.cycle_length);
        bare.witness.for_each([&](Vertex i) { out.meg_set.insert(profile.cycle[i]); });
    } else {
        out.budget = 9 * out.k - 8 + out.leaf_count;
        CoreDecomposition dec = core_decomposition(g);
        out.meg_set |= dec.core_vertices;
        for (const auto& path : dec.proper_core_paths) {
            const int length = static_cast<int>(path.size()) - 1;
            if (length < 2) continue;
            if (length % 2 == 0) {
                out.meg_set.insert(path[length / 2]);
            } else {
                out.meg_set.insert(path[(length - 1) / 2]);
                out.meg_set.insert(path[(length + 1) / 2]);
            }
        }
        for (const auto& cycle : dec.core_cycles) {
            for (int offset : cycle_offsets(static_cast<int>(cycle.size()))) out.meg_set.insert(cycle[offset]);
        }
    }

    if (out.meg_set.size() > out.budget) {
        throw Error("construction uses " + std::to_string(out.meg_set.size()) + " vertices, above its budget of " +
                    std::to_string(out.budget));
    }
    if (!is_meg_set(g, out.meg_set)) throw Error("construction failed to monitor every edge");
    return out;
}

int max_leaf_number(const Graph& g, int max_vertices) {
    require_connected(g);
    const int n = g.vertex_count();
    if (n > max_vertices || n > kMaxLeafHardLimit) {
        throw CapExceeded("max leaf number search is capped at " + std::to_string(std::min(max_vertices, kMaxLeafHardLimit)) +
                          " vertices");
    }
    if (n <= 1) return 0;
    if (n == 2) return 2;

    std::vector<std::uint32_t> closed(n);
    for (Vertex v = 0; v < n; ++v) {
        closed[v] = 1U << v;
        for (Vertex w : g.neighbors(v)) closed[v] |= 1U << w;
    }
    const std::uint32_t everything = (1U << n) - 1;

    auto connected_dominating = [&](std::uint32_t set) {
        std::uint32_t dominated = 0;
        for (std::uint32_t bits = set; bits; bits &= bits - 1) dominated |= closed[std::countr_zero(bits)];
        if (dominated != everything) return false;
        std::uint32_t reached = set & -set;
        while (true) {
            std::uint32_t grow = reached;
            for (std::uint32_t bits = reached; bits; bits &= bits - 1) grow |= closed[std::countr_zero(bits)] & set;
            if (grow == reached) break;
            reached = grow;
        }
        return reached == set;
    };

    // Non-leaf vertices of a spanning tree form a connected dominating set
    // and vice versa, so the best tree leaves out the smallest such set.
    int best = n;
    for (std::uint32_t set = 1; set <= everything; ++set) {
        int size = std::popcount(set);
        if (size < best && connected_dominating(set)) best = size;
        if (set == everything) break;
    }
    return n - best;
}

Graph gen_tightness_family(int k, int leaves) {
    if (k < 2) throw InvalidInput("tightness family needs k >= 2");
    if (leaves < 0) throw InvalidInput("leaf count must be nonnegative");
    std::vector<std::pair<Vertex, Vertex>> edges;
    Vertex next = 1;
    for (int i = 0; i < k; ++i) {
        Vertex a = next, b = next + 1, c = next + 2;
        next += 3;
        edges.insert(edges.end(), {{0, a}, {a, b}, {b, c}, {c, 0}});
    }
    for (int i = 0; i < leaves; ++i) edges.emplace_back(0, next++);
    return Graph::build(next, edges);
}

}  // namespace meg
