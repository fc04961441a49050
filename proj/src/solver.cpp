#include "meg/solver.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <functional>

#include "meg/error.hpp"
#include "meg/monitoring.hpp"

namespace meg {

namespace {

constexpr int kHardVertexLimit = 64;

/// partners(e, x) is the mask of y such that (x, y) monitors edge e.
class MonitorTable {
public:
    explicit MonitorTable(const Graph& g) : n_(g.vertex_count()), m_(g.edge_count()) {
        masks_.assign(static_cast<std::size_t>(n_) * m_, 0);
        auto dist = distance_matrix(g);
        for (int ei = 0; ei < m_; ++ei) {
            const Edge e = g.edges()[ei];
            for (Vertex x = 0; x < n_; ++x) {
                auto without = distances_from(g, x, e);
                std::uint64_t mask = 0;
                for (Vertex y = 0; y < n_; ++y) {
                    if (y != x && without[y] > dist.at(x, y)) mask |= std::uint64_t{1} << y;
                }
                masks_[static_cast<std::size_t>(ei) * n_ + x] = mask;
            }
        }
    }

    int edge_count() const { return m_; }

    bool edge_covered(int ei, std::uint64_t set) const {
        const std::uint64_t* row = &masks_[static_cast<std::size_t>(ei) * n_];
        for (std::uint64_t bits = set; bits != 0; bits &= bits - 1) {
            if (row[std::countr_zero(bits)] & set) return true;
        }
        return false;
    }

    bool covers_all(std::uint64_t set) const {
        for (int ei = 0; ei < m_; ++ei) {
            if (!edge_covered(ei, set)) return false;
        }
        return true;
    }

private:
    int n_;
    int m_;
    std::vector<std::uint64_t> masks_;
};

/// Enumerates, in lexicographic order, the sets forced + k free vertices
/// that monitor every edge. Branches whose still-available vertices cannot
/// cover some edge are cut.
class LayeredSearch {
public:
    using Visitor = std::function<bool(std::uint64_t)>;  // return false to stop

    LayeredSearch(const MonitorTable& table, int n, std::uint64_t forced) : table_(table), forced_(forced) {
        for (Vertex v = 0; v < n; ++v) {
            if (!(forced >> v & 1U)) free_.push_back(v);
        }
        suffix_.assign(free_.size() + 1, 0);
        for (std::size_t i = free_.size(); i-- > 0;) suffix_[i] = suffix_[i + 1] | (std::uint64_t{1} << free_[i]);
    }

    int free_count() const { return static_cast<int>(free_.size()); }
    std::uint64_t nodes() const { return nodes_; }

    /// Returns false if the visitor asked to stop.
    bool run(int extra, const Visitor& visit) { return descend(0, forced_, extra, visit); }

private:
    bool descend(std::size_t idx, std::uint64_t chosen, int need, const Visitor& visit) {
        ++nodes_;
        if (need == 0) {
            if (table_.covers_all(chosen)) return visit(chosen);
            return true;
        }
        if (free_.size() - idx < static_cast<std::size_t>(need)) return true;
        if (!table_.covers_all(chosen | suffix_[idx])) return true;
        for (std::size_t i = idx; i + need <= free_.size(); ++i) {
            if (!descend(i + 1, chosen | (std::uint64_t{1} << free_[i]), need - 1, visit)) return false;
        }
        return true;
    }

    const MonitorTable& table_;
    std::uint64_t forced_;
    std::vector<Vertex> free_;
    std::vector<std::uint64_t> suffix_;
    std::uint64_t nodes_ = 0;
};

void check_solvable(const Graph& g, const SolverOptions& options) {
    int cap = std::min(options.max_vertices, kHardVertexLimit);
    if (g.vertex_count() > cap) {
        throw CapExceeded("graph has " + std::to_string(g.vertex_count()) + " vertices; solver cap is " +
                          std::to_string(cap));
    }
    require_connected(g);
}

}  // namespace

VertexSet forced_vertices(const Graph& g) {
    require_connected(g);
    if (g.edge_count() == 0) throw InvalidInput("forced vertices are undefined for a graph without edges");
    return simplicial_vertices(g) | twin_vertices(g);
}

SolveResult minimum_meg(const Graph& g, const SolverOptions& options) {
    check_solvable(g, options);
    const int n = g.vertex_count();
    SolveResult result{0, VertexSet(n), VertexSet(n), 0};
    if (g.edge_count() == 0) return result;

    result.forced = forced_vertices(g);
    std::uint64_t seed = options.seed_with_forced ? result.forced.to_mask() : 0;
    MonitorTable table(g);
    LayeredSearch search(table, n, seed);
    const int base = std::popcount(seed);
    for (int extra = 0; extra <= search.free_count(); ++extra) {
        std::uint64_t found = 0;
        bool hit = false;
        search.run(extra, [&](std::uint64_t set) {
            found = set;
            hit = true;
            return false;
        });
        if (hit) {
            result.meg_number = base + extra;
            result.optimal_set = VertexSet::from_mask(n, found);
            break;
        }
    }
    result.nodes_explored = search.nodes();
    assert(is_meg_set(g, result.optimal_set));
    return result;
}

std::vector<VertexSet> all_minimum_megs(const Graph& g, std::size_t limit, const SolverOptions& options) {
    check_solvable(g, options);
    const int n = g.vertex_count();
    if (limit == 0) return {};
    if (g.edge_count() == 0) return {VertexSet(n)};

    std::uint64_t seed = options.seed_with_forced ? forced_vertices(g).to_mask() : 0;
    MonitorTable table(g);
    LayeredSearch search(table, n, seed);
    std::vector<VertexSet> out;
    for (int extra = 0; extra <= search.free_count() && out.empty(); ++extra) {
        search.run(extra, [&](std::uint64_t set) {
            out.push_back(VertexSet::from_mask(n, set));
            return out.size() < limit;
        });
    }
    return out;
}

std::vector<std::vector<Vertex>> cut_vertex_pieces(const Graph& g, Vertex v) {
    g.require_vertex(v);
    if (!cut_vertices(g).contains(v)) throw InvalidInput("vertex " + std::to_string(v) + " is not a cut vertex");
    auto pieces = components_without(g, v);
    for (auto& piece : pieces) piece.insert(std::lower_bound(piece.begin(), piece.end(), v), v);
    return pieces;
}

VertexSet compose_via_cut_vertex(const Graph& g, Vertex v, std::span<const VertexSet> component_sets) {
    auto pieces = cut_vertex_pieces(g, v);
    if (component_sets.size() != pieces.size()) {
        throw InvalidInput("expected " + std::to_string(pieces.size()) + " component sets, got " +
                           std::to_string(component_sets.size()));
    }
    VertexSet out(g.vertex_count());
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const VertexSet& s = component_sets[i];
        if (s.universe() != g.vertex_count()) throw InvalidInput("component set universe does not match the graph");
        if (!s.is_subset_of(VertexSet::of(g.vertex_count(), pieces[i]))) {
            throw InvalidInput("component set " + std::to_string(i) + " leaves its piece");
        }
        auto sub = induced_subgraph(g, pieces[i]);
        VertexSet local(sub.graph.vertex_count());
        for (std::size_t j = 0; j < sub.to_parent.size(); ++j) {
            if (s.contains(sub.to_parent[j])) local.insert(static_cast<Vertex>(j));
        }
        if (!is_meg_set(sub.graph, local)) {
            throw InvalidInput("component set " + std::to_string(i) + " is not an MEG-set of its piece");
        }
        out |= s;
    }
    out.erase(v);
    assert(is_meg_set(g, out));
    return out;
}

}  // namespace meg
