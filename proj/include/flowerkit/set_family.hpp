#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "vertex_set.hpp"

namespace flowerkit {

/// Finite family of subsets of [n]. `r > 0` marks an r-uniform family, `r == 0` a
/// mixed-size one. Edges are stored strictly increasing in mask (colex) order, with no
/// duplicates; values are immutable once built, which is what makes parallel evaluation
/// and byte-identical reports safe.
class SetFamily {
public:
    SetFamily() : n_(0), r_(0) {}
    SetFamily(int n, int r) : n_(n), r_(r) { validate_header(n, r); }

    /// Sorts, rejects duplicates and wrong-size edges. The only way to obtain a family.
    static SetFamily from_edges(int n, int r, std::vector<VertexSet> edges) {
        SetFamily f(n, r);
        for (auto& e : edges) {
            if (e.ground_size() != n) fail(errc::bad_params, "edge ground set mismatch");
            if (r > 0 && e.count() != r) fail(errc::bad_params, "edge size differs from uniformity r");
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            fail(errc::bad_params, "duplicate edge");
        f.edges_ = std::move(edges);
        return f;
    }

    int n() const noexcept { return n_; }
    int r() const noexcept { return r_; }
    bool uniform() const noexcept { return r_ > 0; }
    size_t size() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return edges_.empty(); }
    const std::vector<VertexSet>& edges() const noexcept { return edges_; }
    const VertexSet& edge(size_t i) const { return edges_[i]; }

    bool contains(const VertexSet& e) const {
        return std::binary_search(edges_.begin(), edges_.end(), e);
    }

    /// Union of all edges.
    VertexSet spanned() const {
        VertexSet s(n_);
        for (const auto& e : edges_) s |= e;
        return s;
    }

    bool operator==(const SetFamily& o) const = default;

    /// Text format: header "n r", then one line per edge with 1-based vertices in
    /// increasing order; edge lines in canonical (mask) order.
    std::string to_text() const {
        std::ostringstream out;
        out << n_ << ' ' << r_ << '\n';
        for (const auto& e : edges_) {
            bool first = true;
            e.for_each_vertex([&](int v) {
                if (!first) out << ' ';
                out << v;
                first = false;
            });
            out << '\n';
        }
        return out.str();
    }

    static SetFamily from_text(const std::string& text) {
        std::istringstream in(text);
        std::string line;
        int line_no = 0;
        auto next_line = [&]() -> std::optional<std::string> {
            while (std::getline(in, line)) {
                ++line_no;
                if (line.find_first_not_of(" \t\r") != std::string::npos) return line;
            }
            return std::nullopt;
        };
        auto header = next_line();
        if (!header) throw ParseError("empty family file", 1);
        int n = 0, r = 0;
        {
            std::istringstream h(*header);
            std::string extra;
            if (!(h >> n >> r) || (h >> extra)) throw ParseError("header must be 'n r'", line_no);
            if (n < 1 || n > VertexSet::max_ground) throw ParseError("ground set size out of range", line_no);
            if (r < 0 || r > n) throw ParseError("uniformity out of range", line_no);
        }
        std::vector<VertexSet> edges;
        while (auto l = next_line()) {
            std::istringstream es(*l);
            VertexSet e(n);
            int v = 0, prev = 0;
            while (es >> v) {
                if (v < 1 || v > n) throw ParseError("vertex out of range", line_no);
                if (v <= prev) throw ParseError("vertices must be strictly increasing", line_no);
                e.add(v);
                prev = v;
            }
            if (!es.eof()) throw ParseError("bad vertex token", line_no);
            if (r > 0 && e.count() != r) throw ParseError("edge size differs from uniformity r", line_no);
            if (e.empty()) throw ParseError("empty edge line", line_no);
            edges.push_back(e);
        }
        // Edge order in the input is not significant; duplicates are.
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw ParseError("duplicate edge", line_no);
        return from_edges(n, r, std::move(edges));
    }

private:
    static void validate_header(int n, int r) {
        if (n < 0 || n > VertexSet::max_ground) fail(errc::ground_set_too_large, "ground set size must be in [0, 128]");
        if (r < 0 || r > n) fail(errc::bad_params, "uniformity r must satisfy 0 <= r <= n");
    }

    int n_;
    int r_;
    std::vector<VertexSet> edges_;
};

/// Visits every k-subset of `pool` (positions ascending) as a VertexSet over [n].
template <class Fn>
void for_each_combination(int n, std::span<const int> pool, int k, Fn&& visit) {
    int m = static_cast<int>(pool.size());
    if (k < 0 || k > m) return;
    std::vector<int> idx(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
    while (true) {
        VertexSet s(n);
        for (int i : idx) s.add(pool[static_cast<size_t>(i)]);
        visit(s);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<size_t>(i)] == m - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
    }
}

/// All r-subsets of [n] in canonical mask order.
inline std::vector<VertexSet> all_r_subsets(int n, int r) {
    std::vector<int> pool(static_cast<size_t>(n));
    for (int v = 1; v <= n; ++v) pool[static_cast<size_t>(v - 1)] = v;
    std::vector<VertexSet> out;
    for_each_combination(n, pool, r, [&](const VertexSet& s) { out.push_back(s); });
    std::sort(out.begin(), out.end());
    return out;
}

inline bool is_intersecting(const SetFamily& f) {
    const auto& e = f.edges();
    for (size_t i = 0; i < e.size(); ++i)
        for (size_t j = i + 1; j < e.size(); ++j)
            if (!e[i].intersects(e[j])) return false;
    return true;
}

/// Link F(S) = { E \ S : S ⊆ E ∈ F }. Uniformity drops by |S| for uniform input.
inline SetFamily link(const SetFamily& f, const VertexSet& s) {
    std::vector<VertexSet> out;
    for (const auto& e : f.edges())
        if (s.subset_of(e)) out.push_back(e - s);
    int r = f.uniform() ? std::max(0, f.r() - s.count()) : 0;
    return SetFamily::from_edges(f.n(), r, std::move(out));
}

/// Unlink F(S̄) = { E ∈ F : E ∩ S = ∅ }. Uniformity unchanged.
inline SetFamily unlink(const SetFamily& f, const VertexSet& s) {
    std::vector<VertexSet> out;
    for (const auto& e : f.edges())
        if (!e.intersects(s)) out.push_back(e);
    return SetFamily::from_edges(f.n(), f.r(), std::move(out));
}

inline long long degree(const SetFamily& f, int x) {
    if (x < 1 || x > f.n()) fail(errc::bad_params, "degree: vertex outside ground set");
    long long d = 0;
    for (const auto& e : f.edges())
        if (e.contains(x)) ++d;
    return d;
}

struct MaxDegree {
    long long degree = 0;
    int vertex = 0; ///< smallest vertex attaining the maximum; 1 for the empty family
};

/// Maximum vertex degree Δ(F) with the smallest attaining vertex (every vertex of an
/// empty or edge-free ground set has degree 0, so argmax defaults to vertex 1).
inline MaxDegree max_degree(const SetFamily& f) {
    MaxDegree best{0, f.n() >= 1 ? 1 : 0};
    std::vector<long long> deg(static_cast<size_t>(f.n()) + 1, 0);
    for (const auto& e : f.edges()) e.for_each_vertex([&](int v) { ++deg[static_cast<size_t>(v)]; });
    for (int v = 1; v <= f.n(); ++v)
        if (deg[static_cast<size_t>(v)] > best.degree) best = {deg[static_cast<size_t>(v)], v};
    return best;
}

inline bool is_transversal(const VertexSet& t, const SetFamily& f) {
    for (const auto& e : f.edges())
        if (!e.intersects(t)) return false;
    return true;
}

namespace detail {

/// Decision form of the covering problem: is there a transversal of size <= k?
/// Branches on the vertices of a smallest uncovered edge, so depth is bounded by k and
/// fan-out by the smallest edge size.
inline bool tau_at_most(const std::vector<const VertexSet*>& edges, int k, VertexSet* witness, VertexSet chosen) {
    if (edges.empty()) {
        if (witness) *witness = chosen;
        return true;
    }
    if (k <= 0) return false;
    const VertexSet* smallest = edges.front();
    for (const auto* e : edges)
        if (e->count() < smallest->count()) smallest = e;
    bool found = false;
    smallest->for_each_vertex([&](int v) {
        if (found) return;
        std::vector<const VertexSet*> rest;
        rest.reserve(edges.size());
        for (const auto* e : edges)
            if (!e->contains(v)) rest.push_back(e);
        if (tau_at_most(rest, k - 1, witness, chosen.with(v))) found = true;
    });
    return found;
}

} // namespace detail

inline bool tau_at_most(const SetFamily& f, int k) {
    std::vector<const VertexSet*> ptrs;
    ptrs.reserve(f.size());
    for (const auto& e : f.edges()) {
        if (e.empty()) fail(errc::empty_edge, "tau undefined: family contains the empty set");
        ptrs.push_back(&e);
    }
    return detail::tau_at_most(ptrs, k, nullptr, VertexSet(f.n()));
}

struct TransversalWitness {
    int tau = 0;
    VertexSet transversal; ///< a minimum transversal; empty for the empty family
};

/// Exact transversal (covering) number τ(F) with a minimum witness, found by iterative
/// deepening on the branch-and-bound decision procedure. τ(∅) = 0.
inline TransversalWitness tau_witness(const SetFamily& f) {
    std::vector<const VertexSet*> ptrs;
    ptrs.reserve(f.size());
    for (const auto& e : f.edges()) {
        if (e.empty()) fail(errc::empty_edge, "tau undefined: family contains the empty set");
        ptrs.push_back(&e);
    }
    for (int k = 0;; ++k) {
        VertexSet witness(f.n());
        if (detail::tau_at_most(ptrs, k, &witness, VertexSet(f.n()))) return {k, witness};
    }
}

inline int tau(const SetFamily& f) { return tau_witness(f).tau; }

/// No edge contains another (automatic for uniform families).
inline bool is_sperner(const SetFamily& f) {
    const auto& e = f.edges();
    for (size_t i = 0; i < e.size(); ++i)
        for (size_t j = 0; j < e.size(); ++j)
            if (i != j && e[i].subset_of(e[j])) return false;
    return true;
}

/// Every edge of `a` meets every edge of `b`; vacuously true when either is empty.
inline bool cross_intersecting(const SetFamily& a, const SetFamily& b) {
    if (a.n() != b.n()) fail(errc::bad_params, "cross_intersecting: ground sets differ");
    for (const auto& ea : a.edges())
        for (const auto& eb : b.edges())
            if (!ea.intersects(eb)) return false;
    return true;
}

/// Applies the permutation perm (perm[v-1] is the new label of v, a bijection on [n]).
inline SetFamily relabel(const SetFamily& f, const std::vector<int>& perm) {
    int n = f.n();
    if (static_cast<int>(perm.size()) != n) fail(errc::bad_params, "relabel: permutation size differs from n");
    std::vector<bool> hit(static_cast<size_t>(n), false);
    for (int img : perm) {
        if (img < 1 || img > n || hit[static_cast<size_t>(img - 1)])
            fail(errc::bad_params, "relabel: not a permutation of [n]");
        hit[static_cast<size_t>(img - 1)] = true;
    }
    std::vector<VertexSet> edges;
    edges.reserve(f.size());
    for (const auto& e : f.edges()) {
        VertexSet img(n);
        e.for_each_vertex([&](int v) { img.add(perm[static_cast<size_t>(v - 1)]); });
        edges.push_back(img);
    }
    return SetFamily::from_edges(n, f.r(), std::move(edges));
}

/// Drops isolated vertices: relabels the spanned vertices onto [s] in increasing order.
inline SetFamily restrict_to_span(const SetFamily& f) {
    auto span = f.spanned().vertices();
    int s = static_cast<int>(span.size());
    std::vector<int> to_new(static_cast<size_t>(f.n()) + 1, 0);
    for (int i = 0; i < s; ++i) to_new[static_cast<size_t>(span[static_cast<size_t>(i)])] = i + 1;
    std::vector<VertexSet> edges;
    edges.reserve(f.size());
    for (const auto& e : f.edges()) {
        VertexSet img(s);
        e.for_each_vertex([&](int v) { img.add(to_new[static_cast<size_t>(v)]); });
        edges.push_back(img);
    }
    return SetFamily::from_edges(s, f.r(), std::move(edges));
}

} // namespace flowerkit
