#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "errors.hpp"

namespace flowerkit {

/// Subset of a ground set [n] = {1, ..., n}, n <= 128, stored as a two-word bitmask.
/// Vertex v occupies bit (v-1). The numeric value of the mask induces the canonical
/// (colex) order used everywhere a deterministic edge order is promised.
class VertexSet {
public:
    static constexpr int max_ground = 128;

    VertexSet() : words_{0, 0}, n_(0) {}

    explicit VertexSet(int n) : words_{0, 0}, n_(n) {
        if (n < 0 || n > max_ground) fail(errc::ground_set_too_large, "ground set size must be in [0, 128]");
    }

    static VertexSet of(int n, std::initializer_list<int> vertices) {
        VertexSet s(n);
        for (int v : vertices) s.add(v);
        return s;
    }

    static VertexSet from_vertices(int n, std::span<const int> vertices) {
        VertexSet s(n);
        for (int v : vertices) s.add(v);
        return s;
    }

    /// The whole ground set [n].
    static VertexSet full(int n) {
        VertexSet s(n);
        for (int w = 0; w < 2; ++w) {
            int lo = w * 64, hi = lo + 64;
            int bits = std::min(n, hi) - lo;
            if (bits > 0) s.words_[w] = (bits == 64) ? ~uint64_t{0} : ((uint64_t{1} << bits) - 1);
        }
        return s;
    }

    int ground_size() const noexcept { return n_; }

    bool contains(int v) const noexcept {
        if (v < 1 || v > n_) return false;
        return (words_[(v - 1) >> 6] >> ((v - 1) & 63)) & 1;
    }

    VertexSet& add(int v) {
        check_vertex(v);
        words_[(v - 1) >> 6] |= uint64_t{1} << ((v - 1) & 63);
        return *this;
    }

    VertexSet& remove(int v) {
        check_vertex(v);
        words_[(v - 1) >> 6] &= ~(uint64_t{1} << ((v - 1) & 63));
        return *this;
    }

    VertexSet with(int v) const {
        VertexSet s = *this;
        s.add(v);
        return s;
    }

    VertexSet without(int v) const {
        VertexSet s = *this;
        s.remove(v);
        return s;
    }

    int count() const noexcept { return std::popcount(words_[0]) + std::popcount(words_[1]); }
    bool empty() const noexcept { return words_[0] == 0 && words_[1] == 0; }

    bool intersects(const VertexSet& o) const noexcept {
        return (words_[0] & o.words_[0]) || (words_[1] & o.words_[1]);
    }

    bool subset_of(const VertexSet& o) const noexcept {
        return (words_[0] & ~o.words_[0]) == 0 && (words_[1] & ~o.words_[1]) == 0;
    }

    bool proper_subset_of(const VertexSet& o) const noexcept { return subset_of(o) && *this != o; }

    VertexSet operator&(const VertexSet& o) const { return binop(o, [](uint64_t a, uint64_t b) { return a & b; }); }
    VertexSet operator|(const VertexSet& o) const { return binop(o, [](uint64_t a, uint64_t b) { return a | b; }); }
    /// Set difference.
    VertexSet operator-(const VertexSet& o) const { return binop(o, [](uint64_t a, uint64_t b) { return a & ~b; }); }

    VertexSet& operator&=(const VertexSet& o) { return *this = *this & o; }
    VertexSet& operator|=(const VertexSet& o) { return *this = *this | o; }
    VertexSet& operator-=(const VertexSet& o) { return *this = *this - o; }

    bool operator==(const VertexSet& o) const noexcept {
        return n_ == o.n_ && words_[0] == o.words_[0] && words_[1] == o.words_[1];
    }

    /// Numeric 128-bit mask order; total and label-sensitive, not isomorphism-invariant.
    std::strong_ordering operator<=>(const VertexSet& o) const noexcept {
        if (auto c = words_[1] <=> o.words_[1]; c != 0) return c;
        if (auto c = words_[0] <=> o.words_[0]; c != 0) return c;
        return n_ <=> o.n_;
    }

    /// Smallest vertex, or 0 when empty.
    int first_vertex() const noexcept {
        if (words_[0]) return std::countr_zero(words_[0]) + 1;
        if (words_[1]) return std::countr_zero(words_[1]) + 65;
        return 0;
    }

    template <class Fn> void for_each_vertex(Fn&& fn) const {
        for (int w = 0; w < 2; ++w)
            for (uint64_t bits = words_[w]; bits;) {
                int b = std::countr_zero(bits);
                bits &= bits - 1;
                fn(w * 64 + b + 1);
            }
    }

    std::vector<int> vertices() const {
        std::vector<int> out;
        out.reserve(static_cast<size_t>(count()));
        for_each_vertex([&](int v) { out.push_back(v); });
        return out;
    }

    uint64_t word(int i) const noexcept { return words_[i]; }

    uint64_t hash() const noexcept {
        uint64_t h = 1469598103934665603ull;
        auto mix = [&](uint64_t x) {
            h ^= x;
            h *= 1099511628211ull;
        };
        mix(words_[0]);
        mix(words_[1]);
        mix(static_cast<uint64_t>(n_));
        return h;
    }

private:
    template <class Op> VertexSet binop(const VertexSet& o, Op op) const {
        VertexSet s(std::max(n_, o.n_));
        s.words_[0] = op(words_[0], o.words_[0]);
        s.words_[1] = op(words_[1], o.words_[1]);
        return s;
    }

    void check_vertex(int v) const {
        if (v < 1 || v > n_) fail(errc::bad_params, "vertex " + std::to_string(v) + " outside ground set [" + std::to_string(n_) + "]");
    }

    std::array<uint64_t, 2> words_;
    int n_;
};

struct VertexSetHash {
    size_t operator()(const VertexSet& s) const noexcept { return static_cast<size_t>(s.hash()); }
};

} // namespace flowerkit
