#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"
#include "set_family.hpp"

namespace flowerkit {

namespace detail {

inline uint64_t mix64(uint64_t h, uint64_t x) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdull;
    h ^= h >> 33;
    return h;
}

/// Label-invariant vertex signatures: start from (degree, incident edge sizes) and
/// iterate a neighborhood-multiset hash. Collisions only merge classes, which keeps the
/// search correct (just slower), so a fixed 64-bit mix is fine.
inline std::vector<uint64_t> vertex_signatures(const SetFamily& f) {
    int n = f.n();
    std::vector<std::vector<int>> inc(static_cast<size_t>(n) + 1);
    for (size_t i = 0; i < f.size(); ++i)
        f.edge(i).for_each_vertex([&](int v) { inc[static_cast<size_t>(v)].push_back(static_cast<int>(i)); });

    std::vector<uint64_t> sig(static_cast<size_t>(n) + 1, 0);
    for (int v = 1; v <= n; ++v) {
        std::vector<uint64_t> sizes;
        for (int e : inc[static_cast<size_t>(v)]) sizes.push_back(static_cast<uint64_t>(f.edge(static_cast<size_t>(e)).count()));
        std::sort(sizes.begin(), sizes.end());
        uint64_t h = mix64(0x5eed, static_cast<uint64_t>(sizes.size()));
        for (uint64_t s : sizes) h = mix64(h, s);
        sig[static_cast<size_t>(v)] = h;
    }

    auto class_count = [&]() {
        std::vector<uint64_t> s(sig.begin() + 1, sig.end());
        std::sort(s.begin(), s.end());
        return std::unique(s.begin(), s.end()) - s.begin();
    };

    auto classes = class_count();
    for (int round = 0; round < n; ++round) {
        std::vector<uint64_t> next(static_cast<size_t>(n) + 1, 0);
        for (int v = 1; v <= n; ++v) {
            std::vector<uint64_t> batch;
            for (int e : inc[static_cast<size_t>(v)]) {
                std::vector<uint64_t> others;
                f.edge(static_cast<size_t>(e)).for_each_vertex([&](int u) {
                    if (u != v) others.push_back(sig[static_cast<size_t>(u)]);
                });
                std::sort(others.begin(), others.end());
                uint64_t h = mix64(0xed6e, static_cast<uint64_t>(others.size()) + 1);
                for (uint64_t s : others) h = mix64(h, s);
                batch.push_back(h);
            }
            std::sort(batch.begin(), batch.end());
            uint64_t h = sig[static_cast<size_t>(v)];
            for (uint64_t b : batch) h = mix64(h, b);
            next[static_cast<size_t>(v)] = h;
        }
        sig = std::move(next);
        auto c = class_count();
        if (c == classes) break;
        classes = c;
    }
    return sig;
}

} // namespace detail

struct CanonicalLabeling {
    SetFamily family;            ///< canonically relabeled copy
    std::vector<int> relabeling; ///< relabeling[v-1] = image of source vertex v
};

/// Canonical relabeling for n <= 16: the lexicographically smallest sorted edge-mask
/// sequence over all permutations that respect the invariant vertex classes. Families
/// are isomorphic (equal n, r, and related by a vertex relabeling) iff their canonical
/// families are equal. Practical limit is the documented n <= 16; highly symmetric
/// inputs cost about |Aut(F)| leaf walks.
inline CanonicalLabeling canonical_labeling(const SetFamily& f) {
    int n = f.n();
    if (n > 16) fail(errc::ground_set_too_large, "canonical form supports n <= 16");
    size_t m = f.size();

    std::vector<uint32_t> edge_mask(m, 0);
    std::vector<std::vector<int>> inc(static_cast<size_t>(n) + 1);
    std::vector<int> deg(static_cast<size_t>(n) + 1, 0);
    for (size_t i = 0; i < m; ++i) {
        f.edge(i).for_each_vertex([&](int v) {
            edge_mask[i] |= uint32_t{1} << (v - 1);
            inc[static_cast<size_t>(v)].push_back(static_cast<int>(i));
            ++deg[static_cast<size_t>(v)];
        });
    }

    auto sig = detail::vertex_signatures(f);

    // Classes ordered by signature value; each class owns a contiguous block of target
    // labels. Isolated vertices form inert classes that never touch the key.
    std::vector<int> order(static_cast<size_t>(n));
    for (int v = 1; v <= n; ++v) order[static_cast<size_t>(v - 1)] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (sig[static_cast<size_t>(a)] != sig[static_cast<size_t>(b)]) return sig[static_cast<size_t>(a)] < sig[static_cast<size_t>(b)];
        return a < b;
    });
    std::vector<std::vector<int>> class_members;
    for (int v : order) {
        if (class_members.empty() || sig[static_cast<size_t>(class_members.back().front())] != sig[static_cast<size_t>(v)])
            class_members.push_back({});
        class_members.back().push_back(v);
    }
    std::vector<int> class_of_target(static_cast<size_t>(n) + 1, 0);
    {
        int t = 1;
        for (size_t c = 0; c < class_members.size(); ++c)
            for (size_t k = 0; k < class_members[c].size(); ++k) class_of_target[static_cast<size_t>(t++)] = static_cast<int>(c);
    }

    std::vector<int> target_of(static_cast<size_t>(n) + 1, 0); // 0 = unassigned
    std::vector<int> remaining(m);
    for (size_t i = 0; i < m; ++i) remaining[i] = f.edge(i).count();

    std::vector<uint32_t> partial, best_key;
    std::vector<int> best_perm;
    bool have_best = false;

    enum class Cmp { equal, less };

    // Masks completed at level t contain bit t-1 and exceed every earlier mask, so the
    // partial key grows append-only and is always a prefix of its completions.
    auto relabeled = [&](size_t e) {
        uint32_t mask = 0;
        uint32_t src = edge_mask[e];
        while (src) {
            int v = std::countr_zero(src) + 1;
            src &= src - 1;
            mask |= uint32_t{1} << (target_of[static_cast<size_t>(v)] - 1);
        }
        return mask;
    };

    auto dfs = [&](auto&& self, int t, Cmp state) -> bool {
        if (t > n) {
            if (!have_best || state == Cmp::less) {
                best_key = partial;
                best_perm.assign(target_of.begin() + 1, target_of.end());
                have_best = true;
                return true;
            }
            return false;
        }
        const auto& members = class_members[static_cast<size_t>(class_of_target[static_cast<size_t>(t)])];
        bool inert = deg[static_cast<size_t>(members.front())] == 0;
        bool updated_any = false;
        for (int src : members) {
            if (target_of[static_cast<size_t>(src)] != 0) continue;
            target_of[static_cast<size_t>(src)] = t;
            size_t len0 = partial.size();
            for (int e : inc[static_cast<size_t>(src)])
                if (--remaining[static_cast<size_t>(e)] == 0) partial.push_back(relabeled(static_cast<size_t>(e)));
            std::sort(partial.begin() + static_cast<long>(len0), partial.end());

            Cmp child = state;
            bool viable = true;
            if (have_best && child == Cmp::equal) {
                for (size_t i = len0; i < partial.size(); ++i) {
                    if (partial[i] < best_key[i]) {
                        child = Cmp::less;
                        break;
                    }
                    if (partial[i] > best_key[i]) {
                        viable = false;
                        break;
                    }
                }
            }
            if (viable && self(self, t + 1, child)) {
                updated_any = true;
                state = Cmp::equal; // our partial is now a prefix of the new best
            }

            partial.resize(len0);
            for (int e : inc[static_cast<size_t>(src)]) ++remaining[static_cast<size_t>(e)];
            target_of[static_cast<size_t>(src)] = 0;
            if (inert) break; // any member gives the same key; branch once
        }
        return updated_any;
    };
    dfs(dfs, 1, Cmp::equal);

    std::vector<VertexSet> edges;
    edges.reserve(m);
    for (uint32_t mask : best_key) {
        VertexSet e(n);
        while (mask) {
            int v = std::countr_zero(mask) + 1;
            mask &= mask - 1;
            e.add(v);
        }
        edges.push_back(e);
    }
    return {SetFamily::from_edges(n, f.r(), std::move(edges)), std::move(best_perm)};
}

inline SetFamily canonical_family(const SetFamily& f) { return canonical_labeling(f).family; }

/// Canonical byte string: the text serialization of the canonical relabeling.
inline std::string canonical_form(const SetFamily& f) { return canonical_family(f).to_text(); }

inline bool are_isomorphic(const SetFamily& a, const SetFamily& b) {
    if (a.n() != b.n() || a.r() != b.r() || a.size() != b.size()) return false;
    return canonical_family(a) == canonical_family(b);
}

} // namespace flowerkit
