#include "meg/vertex_set.hpp"

#include <algorithm>

#include "meg/error.hpp"

namespace meg {

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
}

VertexSet VertexSet::of(int universe, std::span<const Vertex> members) {
    VertexSet s(universe);
    for (Vertex v : members) s.insert(v);
    return s;
}

VertexSet VertexSet::all(int universe) {
    VertexSet s(universe);
    for (Vertex v = 0; v < universe; ++v) s.insert(v);
    return s;
}

VertexSet VertexSet::from_mask(int universe, std::uint64_t mask) {
    if (universe > 64) throw InvalidInput("bitmask sets support at most 64 vertices");
    if (universe < 64 && (mask >> universe) != 0) throw InvalidInput("bitmask has bits outside the universe");
    VertexSet s(universe);
    if (universe > 0) s.words_[0] = mask;
    return s;
}

int VertexSet::size() const {
    int total = 0;
    for (auto w : words_) total += std::popcount(w);
    return total;
}

void VertexSet::insert(Vertex v) {
    if (v < 0 || v >= universe_) {
        throw InvalidInput("vertex " + std::to_string(v) + " outside 0.." + std::to_string(universe_ - 1));
    }
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
    if (v < 0 || v >= universe_) return;
    words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
}

void VertexSet::require_same_universe(const VertexSet& other) const {
    if (universe_ != other.universe_) throw InvalidInput("vertex sets over different universes");
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    require_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & ~other.words_[i]) != 0) return false;
    }
    return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    require_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
    require_same_universe(other);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
    return *this;
}

std::vector<Vertex> VertexSet::to_vector() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

std::uint64_t VertexSet::to_mask() const {
    if (universe_ > 64) throw InvalidInput("bitmask sets support at most 64 vertices");
    return words_.empty() ? 0 : words_[0];
}

bool VertexSet::lex_less(const VertexSet& a, const VertexSet& b) {
    auto va = a.to_vector();
    auto vb = b.to_vector();
    return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

std::string VertexSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for_each([&](Vertex v) {
        if (!first) out += ",";
        out += std::to_string(v);
        first = false;
    });
    return out + "}";
}

}  // namespace meg
