#include "meg/hierarchy.hpp"

#include <algorithm>

#include "meg/error.hpp"

namespace meg {

namespace {

void check_inputs(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.vertex_count()) throw InvalidInput("vertex set universe does not match graph order");
    require_connected(g);
}

std::vector<std::vector<Distance>> rows_for(const Graph& g, const std::vector<Vertex>& members) {
    std::vector<std::vector<Distance>> rows;
    rows.reserve(members.size());
    for (Vertex x : members) rows.push_back(distances_from(g, x));
    return rows;
}

/// Fixed-width edge bitset.
class EdgeBits {
public:
    explicit EdgeBits(int m = 0) : words_((m + 63) / 64, 0) {}

    void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    EdgeBits& operator|=(const EdgeBits& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    EdgeBits& operator&=(const EdgeBits& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    EdgeBits without(const EdgeBits& o) const {
        EdgeBits r = *this;
        for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
        return r;
    }
    bool subset_of(const EdgeBits& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }
    bool none() const {
        return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
    }
    friend bool operator==(const EdgeBits&, const EdgeBits&) = default;
    friend bool operator<(const EdgeBits& a, const EdgeBits& b) { return a.words_ < b.words_; }

private:
    std::vector<std::uint64_t> words_;
};

/// All x-y geodesics as edge sets, walking the layered shortest-path DAG.
std::vector<EdgeBits> geodesics(const Graph& g, Vertex x, Vertex y, const std::vector<Distance>& dx,
                                const std::vector<Distance>& dy, std::uint64_t cap) {
    std::vector<EdgeBits> out;
    const Distance total = dx[y];
    EdgeBits current(g.edge_count());
    std::vector<std::pair<Vertex, EdgeBits>> stack{{x, current}};
    while (!stack.empty()) {
        auto [u, used] = std::move(stack.back());
        stack.pop_back();
        if (u == y) {
            out.push_back(std::move(used));
            if (out.size() > cap) throw CapExceeded("too many geodesics between a pair of the set");
            continue;
        }
        for (Vertex w : g.neighbors(u)) {
            if (dx[w] == dx[u] + Distance(1) && dx[w] + dy[w] == total) {
                EdgeBits next = used;
                next.set(*g.edge_index(Edge(u, w)));
                stack.emplace_back(w, std::move(next));
            }
        }
    }
    return out;
}

class StrongSearch {
public:
    StrongSearch(std::vector<std::vector<EdgeBits>> choices, EdgeBits covered, EdgeBits target)
        : choices_(std::move(choices)), covered_(std::move(covered)), target_(std::move(target)) {
        reachable_.assign(choices_.size() + 1, EdgeBits(0));
        reachable_.back() = covered_;
        for (std::size_t i = choices_.size(); i-- > 0;) {
            reachable_[i] = reachable_[i + 1];
            for (const auto& c : choices_[i]) reachable_[i] |= c;
        }
    }

    bool run() { return descend(0, covered_); }

private:
    bool descend(std::size_t idx, const EdgeBits& covered) {
        if (target_.subset_of(covered)) return true;
        if (idx == choices_.size()) return false;
        EdgeBits best = covered;
        best |= reachable_[idx];
        if (!target_.subset_of(best)) return false;
        for (const auto& c : choices_[idx]) {
            EdgeBits next = covered;
            next |= c;
            if (descend(idx + 1, next)) return true;
        }
        return false;
    }

    std::vector<std::vector<EdgeBits>> choices_;
    EdgeBits covered_;
    EdgeBits target_;
    std::vector<EdgeBits> reachable_;
};

}  // namespace

bool is_geodetic_set(const Graph& g, const VertexSet& s) {
    check_inputs(g, s);
    const int n = g.vertex_count();
    if (n <= 1) return s.size() == n;
    auto members = s.to_vector();
    auto rows = rows_for(g, members);
    for (Vertex v = 0; v < n; ++v) {
        bool covered = false;
        for (std::size_t i = 0; i < members.size() && !covered; ++i) {
            for (std::size_t j = i + 1; j < members.size() && !covered; ++j) {
                covered = rows[i][v] + rows[j][v] == rows[i][members[j]];
            }
        }
        if (!covered) return false;
    }
    return true;
}

bool is_edge_geodetic_set(const Graph& g, const VertexSet& s) {
    check_inputs(g, s);
    auto members = s.to_vector();
    auto rows = rows_for(g, members);
    for (const Edge& e : g.edges()) {
        bool covered = false;
        for (std::size_t i = 0; i < members.size() && !covered; ++i) {
            for (std::size_t j = i + 1; j < members.size() && !covered; ++j) {
                const auto& dx = rows[i];
                const auto& dy = rows[j];
                Distance total = dx[members[j]];
                covered = dx[e.u] + Distance(1) + dy[e.v] == total || dx[e.v] + Distance(1) + dy[e.u] == total;
            }
        }
        if (!covered) return false;
    }
    return true;
}

bool is_strong_edge_geodetic_set(const Graph& g, const VertexSet& s, const StrongGeodeticOptions& options) {
    check_inputs(g, s);
    const int m = g.edge_count();
    auto members = s.to_vector();
    auto rows = rows_for(g, members);

    EdgeBits target(m);
    for (int i = 0; i < m; ++i) target.set(i);

    std::vector<std::vector<EdgeBits>> raw;
    EdgeBits forced(m);
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
            auto paths = geodesics(g, members[i], members[j], rows[i], rows[j], options.max_combinations);
            EdgeBits common = paths.front();
            for (const auto& p : paths) common &= p;
            forced |= common;
            raw.push_back(std::move(paths));
        }
    }

    std::vector<std::vector<EdgeBits>> choices;
    long double product = 1;
    for (auto& paths : raw) {
        std::vector<EdgeBits> useful;
        for (const auto& p : paths) useful.push_back(p.without(forced));
        std::sort(useful.begin(), useful.end());
        useful.erase(std::unique(useful.begin(), useful.end()), useful.end());
        std::vector<EdgeBits> maximal;
        for (std::size_t a = 0; a < useful.size(); ++a) {
            bool dominated = false;
            for (std::size_t b = 0; b < useful.size() && !dominated; ++b) {
                dominated = a != b && useful[a].subset_of(useful[b]);
            }
            if (!dominated) maximal.push_back(useful[a]);
        }
        if (maximal.size() == 1 && maximal.front().none()) continue;
        product *= static_cast<long double>(maximal.size());
        if (product > static_cast<long double>(options.max_combinations)) {
            throw CapExceeded("strong edge-geodetic search exceeds " + std::to_string(options.max_combinations) +
                              " combinations");
        }
        choices.push_back(std::move(maximal));
    }
    return StrongSearch(std::move(choices), forced, target).run();
}

bool is_dem_set(const Graph& g, const VertexSet& s) {
    check_inputs(g, s);
    auto members = s.to_vector();
    auto rows = rows_for(g, members);
    for (const Edge& e : g.edges()) {
        bool monitored = false;
        for (std::size_t i = 0; i < members.size() && !monitored; ++i) {
            const auto& before = rows[i];
            if (before[e.u] == before[e.v]) continue;
            auto after = distances_from(g, members[i], e);
            for (Vertex y = 0; y < g.vertex_count() && !monitored; ++y) monitored = after[y] > before[y];
        }
        if (!monitored) return false;
    }
    return true;
}

}  // namespace meg
