#pragma once

#include <map>
#include <string>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"
#include "set_family.hpp"

namespace flowerkit {

namespace detail {

inline bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline SetFamily make_family_dedup(int n, int r, std::vector<VertexSet> edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return SetFamily::from_edges(n, r, std::move(edges));
}

inline std::vector<int> range_pool(int lo, int hi) {
    std::vector<int> pool;
    for (int v = lo; v <= hi; ++v) pool.push_back(v);
    return pool;
}

inline std::vector<int> complement_pool(int n, const VertexSet& excluded) {
    std::vector<int> pool;
    for (int v = 1; v <= n; ++v)
        if (!excluded.contains(v)) pool.push_back(v);
    return pool;
}

} // namespace detail

/// All r-sets through x. |F| = binom(n-1, r-1), d_C = (1-C)·binom(n-1, r-1).
inline SetFamily star(int n, int r, int x = 1) {
    if (r < 1 || r > n || x < 1 || x > n) fail(errc::bad_params, "star requires 1 <= r <= n and x in [n]");
    std::vector<VertexSet> edges;
    auto pool = detail::complement_pool(n, VertexSet(n).add(x));
    for_each_combination(n, pool, r - 1, [&](const VertexSet& s) { edges.push_back(s.with(x)); });
    return SetFamily::from_edges(n, r, std::move(edges));
}

/// Edges through 1 that meet Y = {2, ..., r+1}, plus Y itself.
/// |F| = binom(n-1, r-1) - binom(n-r-1, r-1) + 1 and the diversity is exactly 1.
inline SetFamily hilton_milner(int n, int r) {
    if (r < 2 || n < 2 * r) fail(errc::bad_params, "hilton_milner requires r >= 2 and n >= 2r");
    VertexSet y(n);
    for (int v = 2; v <= r + 1; ++v) y.add(v);
    std::vector<VertexSet> edges{y};
    auto pool = detail::range_pool(2, n);
    for_each_combination(n, pool, r - 1, [&](const VertexSet& s) {
        if (s.intersects(y)) edges.push_back(s.with(1));
    });
    return SetFamily::from_edges(n, r, std::move(edges));
}

/// A_K: r-sets meeting {1,2,3} in exactly two vertices. |F| = 3·binom(n-3, r-2),
/// d_C = (3-2C)·binom(n-3, r-2) whenever the max degree sits inside {1,2,3}
/// (true for n >= 3r/2, in particular on every n >= 2r+1 grid).
inline SetFamily a_k(int n, int r) {
    if (r < 2 || n < r || n < 3) fail(errc::bad_params, "a_k requires 2 <= r <= n and n >= 3");
    std::vector<VertexSet> edges;
    auto outside = detail::range_pool(4, n);
    const int pairs[3][2] = {{1, 2}, {1, 3}, {2, 3}};
    for (auto [a, b] : pairs)
        for_each_combination(n, outside, r - 2, [&](const VertexSet& s) { edges.push_back(s.with(a).with(b)); });
    return SetFamily::from_edges(n, r, std::move(edges));
}

/// A_K together with the r-sets containing all of {1,2,3} (a strict superset for r >= 3).
inline SetFamily a_k_plus(int n, int r) {
    if (r < 2 || n < r || n < 3) fail(errc::bad_params, "a_k_plus requires 2 <= r <= n and n >= 3");
    auto base = a_k(n, r).edges();
    auto outside = detail::range_pool(4, n);
    for_each_combination(n, outside, r - 3, [&](const VertexSet& s) { base.push_back(s.with(1).with(2).with(3)); });
    return detail::make_family_dedup(n, r, std::move(base));
}

/// The seven lines of the projective plane of order 2 on [7], fixed edge list.
inline SetFamily fano() {
    std::vector<VertexSet> lines;
    const int raw[7][3] = {{1, 2, 4}, {1, 3, 7}, {1, 5, 6}, {2, 3, 5}, {2, 6, 7}, {3, 4, 6}, {4, 5, 7}};
    for (auto& l : raw) lines.push_back(VertexSet::of(7, {l[0], l[1], l[2]}));
    return SetFamily::from_edges(7, 3, std::move(lines));
}

/// Mixed family: the seven lines plus the 28 four-subsets of [7] that meet every line
/// (exactly the 4-sets that are not line complements). 35 members.
inline SetFamily fano_plus_blocks() {
    auto f = fano();
    std::vector<VertexSet> edges = f.edges();
    auto pool = detail::range_pool(1, 7);
    for_each_combination(7, pool, 4, [&](const VertexSet& s) {
        for (const auto& line : f.edges())
            if (!s.intersects(line)) return;
        edges.push_back(s);
    });
    return detail::make_family_dedup(7, 0, std::move(edges));
}

/// A_F: r-sets whose trace on [7] is a line. |F| = 7·binom(n-7, r-3),
/// d_C = (7-3C)·binom(n-7, r-3) whenever the max degree sits inside [7]
/// (3·binom(n-7, r-3) >= 7·binom(n-8, r-4), i.e. n >= 7 + 7(r-3)/3).
inline SetFamily a_f(int n, int r) {
    if (r < 3 || n < r || n < 7) fail(errc::bad_params, "a_f requires 3 <= r <= n and n >= 7");
    std::vector<VertexSet> edges;
    auto outside = detail::range_pool(8, n);
    SetFamily plane = fano();
    for (const auto& line : plane.edges()) {
        VertexSet base(n);
        line.for_each_vertex([&](int v) { base.add(v); });
        for_each_combination(n, outside, r - 3, [&](const VertexSet& s) { edges.push_back(s | base); });
    }
    return SetFamily::from_edges(n, r, std::move(edges));
}

/// A_F plus the r-sets whose trace on [7] is one of the 28 blocking 4-sets.
/// |F| = 7·binom(n-7, r-3) + 28·binom(n-7, r-4).
inline SetFamily a_f_plus(int n, int r) {
    if (r < 3 || n < r || n < 7) fail(errc::bad_params, "a_f_plus requires 3 <= r <= n and n >= 7");
    auto edges = a_f(n, r).edges();
    auto outside = detail::range_pool(8, n);
    SetFamily blocks = fano_plus_blocks();
    for (const auto& member : blocks.edges()) {
        if (member.count() != 4) continue;
        VertexSet base(n);
        member.for_each_vertex([&](int v) { base.add(v); });
        for_each_combination(n, outside, r - 4, [&](const VertexSet& s) { edges.push_back(s | base); });
    }
    return detail::make_family_dedup(n, r, std::move(edges));
}

/// Projective plane of prime order p as a (p²+p+1, p+1, 1)-design: points are the
/// one-dimensional subspaces of GF(p)³ (normalized so the first nonzero coordinate
/// is 1, enumerated deterministically), lines are the duals.
inline SetFamily projective_plane(long long p) {
    if (!detail::is_prime(p)) throw Error(errc::not_prime, "projective_plane requires a prime order");
    long long m = p * p + p + 1;
    if (m > VertexSet::max_ground) fail(errc::ground_set_too_large, "projective plane exceeds the 128-vertex ground set");
    int n = static_cast<int>(m);
    struct Vec {
        long long x, y, z;
    };
    std::vector<Vec> reps;
    for (long long y = 0; y < p; ++y)
        for (long long z = 0; z < p; ++z) reps.push_back({1, y, z});
    for (long long z = 0; z < p; ++z) reps.push_back({0, 1, z});
    reps.push_back({0, 0, 1});

    std::vector<VertexSet> lines;
    for (const auto& c : reps) {
        VertexSet line(n);
        for (size_t i = 0; i < reps.size(); ++i) {
            const auto& pt = reps[i];
            if ((c.x * pt.x + c.y * pt.y + c.z * pt.z) % p == 0) line.add(static_cast<int>(i) + 1);
        }
        lines.push_back(line);
    }
    return SetFamily::from_edges(n, static_cast<int>(p) + 1, std::move(lines));
}

/// Lift of the order-p plane: r-sets whose trace on the plane's point set (the lowest
/// p²+p+1 labels) is a line. d_C = (p²+p+1 - C(p+1))·binom(n-p²-p-1, r-p-1) whenever
/// the max degree is attained at a plane point.
inline SetFamily design_family(int n, int r, long long p) {
    if (!detail::is_prime(p)) throw Error(errc::not_prime, "design_family requires a prime order");
    long long m = p * p + p + 1;
    if (p >= r) fail(errc::bad_params, "design_family requires p < r");
    if (n < m || r > n) fail(errc::bad_params, "design_family requires n >= p^2+p+1 and r <= n");
    auto plane = projective_plane(p);
    std::vector<VertexSet> edges;
    auto outside = detail::range_pool(static_cast<int>(m) + 1, n);
    for (const auto& line : plane.edges()) {
        VertexSet base(n);
        line.for_each_vertex([&](int v) { base.add(v); });
        for_each_combination(n, outside, r - static_cast<int>(p) - 1, [&](const VertexSet& s) { edges.push_back(s | base); });
    }
    return SetFamily::from_edges(n, r, std::move(edges));
}

/// r disjoint blocks of size alpha on [alpha·r]; edges are the alpha^r minimal
/// transversals (one vertex per block). The unique tight example for the flower
/// size threshold: no flower of threshold alpha, while any (alpha^r + 1)-edge family
/// has one.
inline SetFamily flower_sharpness(int alpha, int r) {
    if (alpha < 1 || r < 1) fail(errc::bad_params, "flower_sharpness requires alpha >= 1 and r >= 1");
    long long ground = static_cast<long long>(alpha) * r;
    if (ground > VertexSet::max_ground) fail(errc::ground_set_too_large, "flower_sharpness ground set exceeds 128");
    int n = static_cast<int>(ground);
    std::vector<VertexSet> edges;
    std::vector<int> choice(static_cast<size_t>(r), 0);
    while (true) {
        VertexSet e(n);
        for (int b = 0; b < r; ++b) e.add(b * alpha + choice[static_cast<size_t>(b)] + 1);
        edges.push_back(e);
        int i = r - 1;
        while (i >= 0 && choice[static_cast<size_t>(i)] == alpha - 1) {
            choice[static_cast<size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++choice[static_cast<size_t>(i)];
    }
    return SetFamily::from_edges(n, r, std::move(edges));
}

/// Maximum-degree family under a diversity floor: edges through 1 that meet
/// Y = {2, ..., u+1}, together with all edges containing Y.
/// |F| = binom(n-1, r-1) - binom(n-u-1, r-1) + binom(n-u-1, r-u).
inline SetFamily ekr_degree_family(int n, int r, int u) {
    if (u < 3 || u > r || n < r + u + 1) fail(errc::bad_params, "ekr_degree_family requires 3 <= u <= r and n >= r+u+1");
    VertexSet y(n);
    for (int v = 2; v <= u + 1; ++v) y.add(v);
    std::vector<VertexSet> edges;
    auto pool = detail::range_pool(2, n);
    for_each_combination(n, pool, r - 1, [&](const VertexSet& s) {
        if (s.intersects(y)) edges.push_back(s.with(1));
    });
    auto rest = detail::complement_pool(n, y);
    for_each_combination(n, rest, r - u, [&](const VertexSet& s) { edges.push_back(s | y); });
    return detail::make_family_dedup(n, r, std::move(edges));
}

/// CLI-facing construction descriptor.
enum class ConstructionKind {
    star,
    hilton_milner,
    a_k,
    a_k_plus,
    fano,
    a_f,
    a_f_plus,
    projective_plane,
    design_family,
    flower_sharpness,
    ekr_degree_family,
};

struct ConstructionSpec {
    ConstructionKind kind;
    std::map<std::string, long long> params; ///< keys among n, r, x, p, u, alpha
};

inline const std::map<std::string, ConstructionKind>& construction_kinds() {
    static const std::map<std::string, ConstructionKind> kinds = {
        {"star", ConstructionKind::star},
        {"hilton_milner", ConstructionKind::hilton_milner},
        {"a_k", ConstructionKind::a_k},
        {"a_k_plus", ConstructionKind::a_k_plus},
        {"fano", ConstructionKind::fano},
        {"a_f", ConstructionKind::a_f},
        {"a_f_plus", ConstructionKind::a_f_plus},
        {"projective_plane", ConstructionKind::projective_plane},
        {"design_family", ConstructionKind::design_family},
        {"flower_sharpness", ConstructionKind::flower_sharpness},
        {"ekr_degree_family", ConstructionKind::ekr_degree_family},
    };
    return kinds;
}

inline SetFamily build_construction(const ConstructionSpec& spec) {
    auto need = [&](const char* key) {
        auto it = spec.params.find(key);
        if (it == spec.params.end()) fail(errc::bad_params, std::string("missing construction parameter --") + key);
        return it->second;
    };
    auto opt = [&](const char* key, long long fallback) {
        auto it = spec.params.find(key);
        return it == spec.params.end() ? fallback : it->second;
    };
    auto as_int = [](long long v) {
        if (v < INT32_MIN || v > INT32_MAX) fail(errc::bad_params, "parameter out of range");
        return static_cast<int>(v);
    };
    switch (spec.kind) {
    case ConstructionKind::star: return star(as_int(need("n")), as_int(need("r")), as_int(opt("x", 1)));
    case ConstructionKind::hilton_milner: return hilton_milner(as_int(need("n")), as_int(need("r")));
    case ConstructionKind::a_k: return a_k(as_int(need("n")), as_int(need("r")));
    case ConstructionKind::a_k_plus: return a_k_plus(as_int(need("n")), as_int(need("r")));
    case ConstructionKind::fano: return fano();
    case ConstructionKind::a_f: return a_f(as_int(need("n")), as_int(need("r")));
    case ConstructionKind::a_f_plus: return a_f_plus(as_int(need("n")), as_int(need("r")));
    case ConstructionKind::projective_plane: return projective_plane(need("p"));
    case ConstructionKind::design_family: return design_family(as_int(need("n")), as_int(need("r")), need("p"));
    case ConstructionKind::flower_sharpness: return flower_sharpness(as_int(need("alpha")), as_int(need("r")));
    case ConstructionKind::ekr_degree_family: return ekr_degree_family(as_int(need("n")), as_int(need("r")), as_int(need("u")));
    }
    fail(errc::bad_params, "unknown construction kind");
}

} // namespace flowerkit
