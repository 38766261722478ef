#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "canonical.hpp"
#include "constructions.hpp"
#include "diversity.hpp"
#include "rational.hpp"
#include "set_family.hpp"

namespace flowerkit {

struct SearchResult {
    Rational best_value;
    SetFamily witness;
    uint64_t nodes_explored = 0;
    bool exhaustive = false;
    uint64_t seed = 0;
};

struct ExhaustiveOptions {
    long long max_universe = 60; ///< hard cap 64: one machine word of candidate edges
    bool prune = true;           ///< admissible bound current + remaining − C·Δ(chosen)
    bool isomorph_reject = false; ///< restrict the first three edges to least relabelings
};

namespace detail {

inline int highest_vertex(const VertexSet& s) {
    if (s.word(1)) return 128 - std::countl_zero(s.word(1));
    if (s.word(0)) return 64 - std::countl_zero(s.word(0));
    return 0;
}

/// True when e meets every cell in an initial segment of it. The cells are the orbits
/// of the joint stabilizer of the previously chosen edges, so a candidate that fails
/// has an image under that stabilizer which is numerically smaller; the family being
/// built then has a lexicographically smaller relabeling (edge list compared sorted)
/// that the search visits anyway. Skipping the candidate never loses an isomorphism
/// class, hence never changes the optimal value.
inline bool cellwise_minimal(const VertexSet& e, const std::vector<VertexSet>& cells) {
    for (const auto& cell : cells) {
        VertexSet trace = e & cell;
        if (trace.empty() || trace == cell) continue;
        VertexSet prefix = cell;
        int t = trace.count();
        while (prefix.count() > t) prefix.remove(highest_vertex(prefix));
        if (!(prefix == trace)) return false;
    }
    return true;
}

inline std::vector<VertexSet> refine_cells(const std::vector<VertexSet>& cells, const VertexSet& e) {
    std::vector<VertexSet> out;
    out.reserve(cells.size() * 2);
    for (const auto& cell : cells) {
        VertexSet in = cell & e, rest = cell - e;
        if (!in.empty()) out.push_back(in);
        if (!rest.empty()) out.push_back(rest);
    }
    return out;
}

} // namespace detail

/// Exact maximum of d_C over all intersecting r-uniform families on [n], the empty
/// family included (its value 0 is the baseline, optimal for large C). Branch and bound
/// over the colex edge order; the bound is admissible because the max degree never
/// decreases when edges are added. The witness is the first optimum in search order.
inline SearchResult exhaustive_max_dC(int n, int r, const Rational& C, const ExhaustiveOptions& opts = {}) {
    if (r < 1 || r > n) fail(errc::bad_params, "exhaustive_max_dC requires 1 <= r <= n");
    if (C < 0) fail(errc::bad_params, "exhaustive_max_dC requires C >= 0");
    long long cap = std::min<long long>(opts.max_universe, 64);
    if (binom(n, r) > cap) fail(errc::too_large, "candidate edge universe exceeds the configured limit");
    auto universe = all_r_subsets(n, r);
    int m = static_cast<int>(universe.size());
    std::vector<uint64_t> compat(static_cast<size_t>(m), 0);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (universe[static_cast<size_t>(i)].intersects(universe[static_cast<size_t>(j)])) {
                compat[static_cast<size_t>(i)] |= uint64_t{1} << j;
                compat[static_cast<size_t>(j)] |= uint64_t{1} << i;
            }

    const Int p = numerator(C), q = denominator(C);
    std::vector<int> chosen, best_chosen;
    std::vector<long long> deg(static_cast<size_t>(n) + 1, 0);
    Int best_score = 0; // score = q·|F| − p·Δ(F), a common-denominator integer image of d_C
    uint64_t nodes = 0;

    auto dfs = [&](auto&& self, uint64_t allowed, const std::vector<VertexSet>& cells) -> void {
        for (uint64_t bits = allowed; bits;) {
            int j = std::countr_zero(bits);
            bits &= bits - 1;
            const VertexSet& e = universe[static_cast<size_t>(j)];
            if (opts.isomorph_reject && chosen.size() < 3 && !detail::cellwise_minimal(e, cells)) continue;
            ++nodes;
            chosen.push_back(j);
            e.for_each_vertex([&](int v) { ++deg[static_cast<size_t>(v)]; });
            long long delta = 0;
            for (int v = 1; v <= n; ++v) delta = std::max(delta, deg[static_cast<size_t>(v)]);
            Int score = q * static_cast<long long>(chosen.size()) - p * delta;
            if (score > best_score) {
                best_score = score;
                best_chosen = chosen;
            }
            uint64_t next = (j >= 63) ? 0 : allowed & compat[static_cast<size_t>(j)] & ~((uint64_t{2} << j) - 1);
            if (next) {
                bool descend = true;
                if (opts.prune) {
                    Int bound = q * (static_cast<long long>(chosen.size()) + std::popcount(next)) - p * delta;
                    if (bound <= best_score) descend = false;
                }
                if (descend) {
                    if (opts.isomorph_reject && chosen.size() <= 3)
                        self(self, next, detail::refine_cells(cells, e));
                    else
                        self(self, next, cells);
                }
            }
            e.for_each_vertex([&](int v) { --deg[static_cast<size_t>(v)]; });
            chosen.pop_back();
        }
    };
    std::vector<VertexSet> cells{VertexSet::full(n)};
    dfs(dfs, (m >= 64) ? ~uint64_t{0} : (uint64_t{1} << m) - 1, cells);

    std::vector<VertexSet> witness_edges;
    witness_edges.reserve(best_chosen.size());
    for (int j : best_chosen) witness_edges.push_back(universe[static_cast<size_t>(j)]);
    SetFamily witness = SetFamily::from_edges(n, r, std::move(witness_edges));
    Rational value = weighted_diversity(witness, C); // independent re-verification path
    if (value != Rational(best_score) / Rational(q)) fail(errc::bad_params, "internal: search value mismatch");
    return {value, witness, nodes, true, 0};
}

struct AnnealOptions {
    int iterations = 20000;            ///< moves per chain
    int chains = 4;                    ///< independent restarts
    double initial_temperature = 1.5;
    double cooling = 0.9995;           ///< geometric, applied per move
    bool warm_start = true;            ///< score the applicable constructions as initial states
};

namespace detail {

/// Constructions that fit the instance, used as warm starts and certified lower bounds.
inline std::vector<SetFamily> warm_start_candidates(int n, int r) {
    std::vector<SetFamily> out;
    auto push = [&](auto&& make) {
        try {
            out.push_back(make());
        } catch (const Error&) {
        }
    };
    push([&] { return star(n, r); });
    push([&] { return hilton_milner(n, r); });
    push([&] { return a_k(n, r); });
    push([&] { return a_k_plus(n, r); });
    push([&] { return a_f(n, r); });
    push([&] { return a_f_plus(n, r); });
    push([&] { return ekr_degree_family(n, r, 3); });
    push([&] { return design_family(n, r, 2); });
    push([&] { return design_family(n, r, 3); });
    return out;
}

} // namespace detail

/// Simulated annealing over intersecting families: add / remove / swap moves, where an
/// added edge evicts the members it misses (repair keeps the state intersecting).
/// Deterministic for a fixed seed and build: the engine is the standardized
/// mt19937_64 sampled with raw modulo, and exact arithmetic decides improvement; the
/// only floating point is the acceptance probability. The returned value is a certified
/// lower bound: the witness is re-verified through the diversity code path.
inline SearchResult anneal_max_dC(int n, int r, const Rational& C, const AnnealOptions& opts = {},
                                  uint64_t seed = 1) {
    if (r < 1 || r > n) fail(errc::bad_params, "anneal_max_dC requires 1 <= r <= n");
    if (n > VertexSet::max_ground) fail(errc::ground_set_too_large, "ground set size must be in [0, 128]");
    if (C < 0) fail(errc::bad_params, "anneal_max_dC requires C >= 0");
    const Int p = numerator(C), q = denominator(C);
    const double qd = q.convert_to<double>();

    Int best_score = 0; // empty family baseline
    std::vector<VertexSet> best_edges;
    auto consider = [&](const std::vector<VertexSet>& edges, long long delta) {
        Int score = q * static_cast<long long>(edges.size()) - p * delta;
        if (score > best_score) {
            best_score = score;
            best_edges = edges;
        }
    };
    if (opts.warm_start)
        for (const auto& g : detail::warm_start_candidates(n, r)) consider(g.edges(), max_degree(g).degree);

    uint64_t moves = 0;
    std::vector<int> perm(static_cast<size_t>(n));
    for (int chain = 0; chain < opts.chains; ++chain) {
        std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + static_cast<uint64_t>(chain));
        auto random_edge = [&]() {
            for (int v = 1; v <= n; ++v) perm[static_cast<size_t>(v - 1)] = v;
            VertexSet e(n);
            for (int i = 0; i < r; ++i) {
                int j = i + static_cast<int>(rng() % static_cast<uint64_t>(n - i));
                std::swap(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
                e.add(perm[static_cast<size_t>(i)]);
            }
            return e;
        };

        std::vector<VertexSet> cur;
        std::unordered_set<VertexSet, VertexSetHash> in_cur;
        std::vector<long long> deg(static_cast<size_t>(n) + 1, 0);
        auto insert_edge = [&](const VertexSet& e) {
            cur.push_back(e);
            in_cur.insert(e);
            e.for_each_vertex([&](int v) { ++deg[static_cast<size_t>(v)]; });
        };
        // greedy random seed family; warm starts are already counted via `consider`
        for (int t = 0; t < 4 * n * r; ++t) {
            VertexSet e = random_edge();
            if (in_cur.count(e)) continue;
            bool ok = true;
            for (const auto& f : cur)
                if (!f.intersects(e)) {
                    ok = false;
                    break;
                }
            if (ok) insert_edge(e);
        }
        auto scan_delta = [&](const std::vector<long long>& d) {
            long long m = 0;
            for (int v = 1; v <= n; ++v) m = std::max(m, d[static_cast<size_t>(v)]);
            return m;
        };
        long long cur_delta = scan_delta(deg);
        Int cur_score = q * static_cast<long long>(cur.size()) - p * cur_delta;
        consider(cur, cur_delta);

        double temp = opts.initial_temperature;
        std::vector<long long> trial_deg;
        for (int it = 0; it < opts.iterations; ++it, ++moves, temp *= opts.cooling) {
            int kind = static_cast<int>(rng() % 3);
            std::vector<VertexSet> removals;
            bool have_add = false;
            VertexSet added;
            if (kind == 1 || kind == 2) { // remove / swap start with a victim
                if (!cur.empty()) removals.push_back(cur[static_cast<size_t>(rng() % cur.size())]);
                else if (kind == 1) continue;
            }
            if (kind == 0 || kind == 2) {
                VertexSet e = random_edge();
                if (!in_cur.count(e)) {
                    have_add = true;
                    added = e;
                    for (const auto& f : cur)
                        if (!f.intersects(e) && !(removals.size() && f == removals.front()))
                            removals.push_back(f); // repair: evict everything the new edge misses
                }
            }
            if (!have_add && removals.empty()) continue;

            trial_deg = deg;
            for (const auto& f : removals) f.for_each_vertex([&](int v) { --trial_deg[static_cast<size_t>(v)]; });
            if (have_add) added.for_each_vertex([&](int v) { ++trial_deg[static_cast<size_t>(v)]; });
            long long trial_delta = scan_delta(trial_deg);
            long long trial_size = static_cast<long long>(cur.size()) - static_cast<long long>(removals.size()) +
                                   (have_add ? 1 : 0);
            Int trial_score = q * trial_size - p * trial_delta;

            bool accept = trial_score >= cur_score;
            if (!accept) {
                double gap = (trial_score - cur_score).convert_to<double>() / qd;
                double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
                accept = u < std::exp(gap / std::max(temp, 1e-9));
            }
            if (!accept) continue;
            for (const auto& f : removals) {
                in_cur.erase(f);
                cur.erase(std::find(cur.begin(), cur.end(), f));
            }
            if (have_add) {
                cur.push_back(added);
                in_cur.insert(added);
            }
            deg = trial_deg;
            cur_delta = trial_delta;
            cur_score = trial_score;
            if (cur_score > best_score) consider(cur, cur_delta);
        }
    }

    SetFamily witness = SetFamily::from_edges(n, r, best_edges);
    if (!is_intersecting(witness)) fail(errc::bad_params, "internal: anneal witness not intersecting");
    Rational value = weighted_diversity(witness, C); // independent re-verification path
    if (value != Rational(best_score) / Rational(q)) fail(errc::bad_params, "internal: anneal value mismatch");
    return {value, witness, moves, false, seed};
}

namespace detail {

template <class Fn>
inline void bron_kerbosch(const std::vector<VertexSet>& adj, VertexSet& grown, VertexSet cand, VertexSet done,
                          Fn&& report) {
    if (cand.empty() && done.empty()) {
        report(grown);
        return;
    }
    VertexSet both = cand | done;
    int pivot = 0, best = -1;
    both.for_each_vertex([&](int u) {
        int c = (cand & adj[static_cast<size_t>(u - 1)]).count();
        if (c > best) {
            best = c;
            pivot = u;
        }
    });
    VertexSet branch = cand - adj[static_cast<size_t>(pivot - 1)];
    branch.for_each_vertex([&](int v) {
        grown.add(v);
        bron_kerbosch(adj, grown, cand & adj[static_cast<size_t>(v - 1)], done & adj[static_cast<size_t>(v - 1)],
                      report);
        grown.remove(v);
        cand.remove(v);
        done.add(v);
    });
}

inline bool family_less(const SetFamily& a, const SetFamily& b) {
    return std::lexicographical_compare(a.edges().begin(), a.edges().end(), b.edges().begin(), b.edges().end());
}

/// Maximal intersecting families = maximal cliques of the intersection graph on the
/// r-set universe (up to 128 candidate edges here; the public entry point caps at 64).
inline std::vector<SetFamily> maximal_intersecting_families(int n, int r) {
    if (binom(n, r) > VertexSet::max_ground) fail(errc::too_large, "candidate edge universe exceeds 128");
    auto universe = all_r_subsets(n, r);
    int m = static_cast<int>(universe.size());
    std::vector<VertexSet> adj(static_cast<size_t>(m), VertexSet(m));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (universe[static_cast<size_t>(i)].intersects(universe[static_cast<size_t>(j)])) {
                adj[static_cast<size_t>(i)].add(j + 1);
                adj[static_cast<size_t>(j)].add(i + 1);
            }
    std::vector<SetFamily> out;
    VertexSet grown(m);
    bron_kerbosch(adj, grown, VertexSet::full(m), VertexSet(m), [&](const VertexSet& clique) {
        std::vector<VertexSet> edges;
        edges.reserve(static_cast<size_t>(clique.count()));
        clique.for_each_vertex([&](int idx) { edges.push_back(universe[static_cast<size_t>(idx - 1)]); });
        out.push_back(SetFamily::from_edges(n, r, std::move(edges)));
    });
    std::sort(out.begin(), out.end(), family_less);
    return out;
}

} // namespace detail

/// Every maximal intersecting r-uniform family on [n], each exactly once, in a
/// deterministic order (edge lists compared lexicographically).
inline std::vector<SetFamily> enumerate_maximal_intersecting(int n, int r) {
    if (r < 1 || r > n) fail(errc::bad_params, "enumerate_maximal_intersecting requires 1 <= r <= n");
    if (binom(n, r) > 64) fail(errc::too_large, "maximal-family enumeration is capped at 64 candidate edges");
    return detail::maximal_intersecting_families(n, r);
}

struct EnumerationReport {
    long long count = 0;
    int max_edges = 0;
    int max_span = 0;
    std::vector<std::string> witnesses; ///< canonical forms, isolated vertices dropped
};

/// Size and span extremes of 3-uniform intersecting families with covering number 3,
/// checked on ground sets slightly larger than the claimed 7-vertex span. Checking
/// maximal families suffices: any τ=3 family extends to a maximal intersecting one,
/// which still has τ=3 (every edge is a 3-vertex transversal, and τ never drops under
/// extension), and subfamilies have no larger size or span. Witnesses are the canonical
/// forms of the families attaining max_edges, after dropping isolated vertices.
inline EnumerationReport verify_folklore(int n0) {
    if (n0 < 7 || n0 > 9) fail(errc::bad_params, "verify_folklore requires n0 in {7, 8, 9}");
    auto maximal = detail::maximal_intersecting_families(n0, 3);
    EnumerationReport rep;
    std::vector<const SetFamily*> kept;
    for (const auto& f : maximal) {
        if (tau_at_most(f, 2)) continue; // τ <= 3 is automatic, so this keeps exactly τ = 3
        ++rep.count;
        kept.push_back(&f);
        rep.max_edges = std::max(rep.max_edges, static_cast<int>(f.size()));
        rep.max_span = std::max(rep.max_span, f.spanned().count());
    }
    std::set<std::string> forms;
    for (const SetFamily* f : kept)
        if (static_cast<int>(f->size()) == rep.max_edges) forms.insert(canonical_form(restrict_to_span(*f)));
    rep.witnesses.assign(forms.begin(), forms.end());
    return rep;
}

/// All labeled (v, k, λ)-designs with distinct blocks: every pair of points lies in
/// exactly λ blocks. Backtracking over the colex block order with pair-coverage counts
/// and a suffix-supply bound; output order is deterministic.
inline std::vector<SetFamily> enumerate_designs(int v, int k, int lambda) {
    if (k < 2 || v < k || lambda < 1) fail(errc::bad_params, "enumerate_designs requires 2 <= k <= v, lambda >= 1");
    if (v > 9 || k > 4) fail(errc::too_large, "design enumeration is capped at v <= 9, k <= 4");
    long long lam = lambda;
    // divisibility obstructions: point replication λ(v−1)/(k−1) and block count
    // λ·v(v−1)/(k(k−1)) must be integers
    if ((lam * (v - 1)) % (k - 1) != 0 || (lam * v * (v - 1)) % (static_cast<long long>(k) * (k - 1)) != 0)
        return {};

    auto blocks = all_r_subsets(v, k);
    int m = static_cast<int>(blocks.size());
    int np = v * (v - 1) / 2;
    auto pair_id = [](int a, int b) { return (b - 1) * (b - 2) / 2 + (a - 1); }; // a < b, 1-based
    std::vector<std::vector<int>> block_pairs(static_cast<size_t>(m));
    std::vector<long long> cov(static_cast<size_t>(np), 0), supply(static_cast<size_t>(np), 0);
    for (int i = 0; i < m; ++i) {
        auto vs = blocks[static_cast<size_t>(i)].vertices();
        for (size_t a = 0; a < vs.size(); ++a)
            for (size_t b = a + 1; b < vs.size(); ++b) {
                int pid = pair_id(vs[a], vs[b]);
                block_pairs[static_cast<size_t>(i)].push_back(pid);
                ++supply[static_cast<size_t>(pid)];
            }
    }

    std::vector<SetFamily> out;
    std::vector<int> chosen;
    auto dfs = [&](auto&& self, int i) -> void {
        bool complete = true;
        for (int pp = 0; pp < np; ++pp)
            if (cov[static_cast<size_t>(pp)] != lam) {
                complete = false;
                break;
            }
        if (complete) { // no block can be added without overshooting a pair
            std::vector<VertexSet> edges;
            edges.reserve(chosen.size());
            for (int b : chosen) edges.push_back(blocks[static_cast<size_t>(b)]);
            out.push_back(SetFamily::from_edges(v, k, std::move(edges)));
            return;
        }
        if (i == m) return;
        for (int pp = 0; pp < np; ++pp)
            if (cov[static_cast<size_t>(pp)] + supply[static_cast<size_t>(pp)] < lam) return;
        const auto& pairs = block_pairs[static_cast<size_t>(i)];
        for (int pid : pairs) --supply[static_cast<size_t>(pid)];
        bool can_take = true;
        for (int pid : pairs)
            if (cov[static_cast<size_t>(pid)] >= lam) {
                can_take = false;
                break;
            }
        if (can_take) {
            for (int pid : pairs) ++cov[static_cast<size_t>(pid)];
            chosen.push_back(i);
            self(self, i + 1);
            chosen.pop_back();
            for (int pid : pairs) --cov[static_cast<size_t>(pid)];
        }
        self(self, i + 1);
        for (int pid : pairs) ++supply[static_cast<size_t>(pid)];
    };
    dfs(dfs, 0);
    return out;
}

/// All intersecting 3-uniform families on [7] with τ = 3 spanning all 7 vertices, one
/// canonical representative per isomorphism class, sorted by size then canonical form.
/// Completeness: every such family extends to a maximal intersecting family that still
/// has τ = 3, so scanning subfamilies of those maximal families sees every class.
inline std::vector<SetFamily> catalog_tau3_families() {
    auto maximal = detail::maximal_intersecting_families(7, 3);
    std::unordered_set<std::string> labeled_seen;
    std::set<std::string> forms;
    std::vector<SetFamily> reps;
    for (const auto& mf : maximal) {
        if (tau_at_most(mf, 2)) continue;
        int m = static_cast<int>(mf.size());
        for (uint32_t mask = 1; mask < (uint32_t{1} << m); ++mask) {
            VertexSet span(7);
            std::vector<VertexSet> edges;
            for (uint32_t bits = mask; bits;) {
                int j = std::countr_zero(bits);
                bits &= bits - 1;
                edges.push_back(mf.edge(static_cast<size_t>(j)));
                span |= edges.back();
            }
            if (span.count() != 7) continue;
            SetFamily sub = SetFamily::from_edges(7, 3, std::move(edges));
            if (tau_at_most(sub, 2)) continue;
            if (!labeled_seen.insert(sub.to_text()).second) continue;
            SetFamily rep = canonical_family(sub);
            if (forms.insert(rep.to_text()).second) reps.push_back(std::move(rep));
        }
    }
    std::sort(reps.begin(), reps.end(), [](const SetFamily& a, const SetFamily& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return detail::family_less(a, b);
    });
    return reps;
}

} // namespace flowerkit
