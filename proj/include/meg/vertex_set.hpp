#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace meg {

using Vertex = int;

/// Subset of 0..universe-1 backed by a word bitset.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : universe_(universe), words_(word_count(universe), 0) {}
    VertexSet(int universe, std::initializer_list<Vertex> members);

    /// Throws InvalidInput for members outside the universe.
    static VertexSet of(int universe, std::span<const Vertex> members);
    static VertexSet all(int universe);
    /// Universe must be at most 64.
    static VertexSet from_mask(int universe, std::uint64_t mask);

    int universe() const { return universe_; }
    int size() const;
    bool empty() const { return size() == 0; }

    bool contains(Vertex v) const {
        return v >= 0 && v < universe_ && (words_[v >> 6] >> (v & 63) & 1U);
    }
    void insert(Vertex v);
    void erase(Vertex v);

    bool is_subset_of(const VertexSet& other) const;
    VertexSet& operator|=(const VertexSet& other);
    VertexSet& operator-=(const VertexSet& other);
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    /// Ascending member list.
    std::vector<Vertex> to_vector() const;
    std::uint64_t to_mask() const;

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            for (std::uint64_t bits = words_[w]; bits != 0; bits &= bits - 1) {
                f(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
            }
        }
    }

    /// Lexicographic order on the sorted member lists.
    static bool lex_less(const VertexSet& a, const VertexSet& b);

    std::string to_string() const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    static std::size_t word_count(int universe) { return universe <= 0 ? 0 : (universe + 63) / 64; }
    void require_same_universe(const VertexSet& other) const;

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace meg
