#pragma once

#include <cstdint>
#include <random>

#include "meg/graph.hpp"

namespace meg {

/// Deterministic stream: std::mt19937_64 is fully specified by the standard,
/// and bounded draws use our own rejection sampling rather than the
/// implementation-defined std::uniform_int_distribution.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound);
    int below(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

    /// Independent child stream.
    Rng split() { return Rng(engine_() ^ 0x9e3779b97f4a7c15ULL); }

    template <typename It>
    void shuffle(It first, It last) {
        for (auto i = last - first; i > 1; --i) std::swap(first[i - 1], first[below(static_cast<std::uint64_t>(i))]);
    }

private:
    std::mt19937_64 engine_;
};

/// Uniform labeled tree via Pruefer sequence decoding.
Graph random_tree(int n, std::uint64_t seed);

/// Cycle of length k with a random forest hanging off it, randomly relabeled.
Graph random_unicyclic(int n, int k, std::uint64_t seed);

/// Random spanning tree plus m - (n - 1) distinct random extra edges.
Graph random_connected(int n, int m, std::uint64_t seed);

}  // namespace meg
