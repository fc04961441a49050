#include "meg/random.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>

#include "meg/error.hpp"

namespace meg {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw InvalidInput("empty sampling range");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t draw;
    do {
        draw = engine_();
    } while (draw >= limit);
    return draw % bound;
}

namespace {

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

EdgeList pruefer_tree(int n, Rng& rng) {
    EdgeList edges;
    if (n <= 1) return edges;
    if (n == 2) return {{0, 1}};
    std::vector<int> code(n - 2);
    for (auto& c : code) c = rng.below(n);

    std::vector<int> degree(n, 1);
    for (int c : code) ++degree[c];
    std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.push(v);
    for (int c : code) {
        int leaf = leaves.top();
        leaves.pop();
        edges.emplace_back(leaf, c);
        if (--degree[c] == 1) leaves.push(c);
    }
    int a = leaves.top();
    leaves.pop();
    edges.emplace_back(a, leaves.top());
    return edges;
}

}  // namespace

Graph random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw InvalidInput("tree order must be at least 1");
    Rng rng(seed);
    return Graph::build(n, pruefer_tree(n, rng));
}

Graph random_unicyclic(int n, int k, std::uint64_t seed) {
    if (k < 3 || k > n) throw InvalidInput("unicyclic graph needs 3 <= k <= n");
    Rng rng(seed);
    std::vector<Vertex> label(n);
    std::iota(label.begin(), label.end(), 0);
    rng.shuffle(label.begin(), label.end());

    EdgeList edges;
    for (int i = 0; i < k; ++i) edges.emplace_back(label[i], label[(i + 1) % k]);
    for (int v = k; v < n; ++v) edges.emplace_back(label[v], label[rng.below(v)]);
    return Graph::build(n, edges);
}

Graph random_connected(int n, int m, std::uint64_t seed) {
    if (n < 1) throw InvalidInput("graph order must be at least 1");
    const long long max_edges = static_cast<long long>(n) * (n - 1) / 2;
    if (m < n - 1 || m > max_edges) {
        throw InvalidInput("edge count must lie in [" + std::to_string(n - 1) + ", " + std::to_string(max_edges) + "]");
    }
    Rng rng(seed);
    Rng tree_stream = rng.split();
    EdgeList edges = pruefer_tree(n, tree_stream);

    std::vector<char> present(static_cast<std::size_t>(n) * n, 0);
    for (auto [a, b] : edges) present[static_cast<std::size_t>(a) * n + b] = present[static_cast<std::size_t>(b) * n + a] = 1;
    EdgeList absent;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (!present[static_cast<std::size_t>(a) * n + b]) absent.emplace_back(a, b);
    rng.shuffle(absent.begin(), absent.end());
    edges.insert(edges.end(), absent.begin(), absent.begin() + (m - (n - 1)));
    return Graph::build(n, edges);
}

}  // namespace meg
