#pragma once

#include <optional>
#include <unordered_set>
#include <vector>

#include "rational.hpp"
#include "set_family.hpp"

namespace flowerkit {

/// A flower with threshold alpha: members S with pairwise intersection ⋂S = core and
/// petals {S_i \ core} needing more than alpha vertices to cover. Petals are nonempty
/// (members properly contain the core).
struct Flower {
    VertexSet core;
    SetFamily members;
    int threshold = 0;
};

/// Structural validity of a Flower value (membership in a host family is checked by
/// callers who know the host).
inline bool flower_valid(const Flower& fl) {
    if (fl.members.empty()) return false;
    VertexSet inter = VertexSet::full(fl.members.n());
    for (const auto& e : fl.members.edges()) inter &= e;
    if (!(inter == fl.core)) return false;
    std::vector<VertexSet> petals;
    for (const auto& e : fl.members.edges()) {
        VertexSet p = e - fl.core;
        if (p.empty()) return false;
        petals.push_back(p);
    }
    auto petal_family = SetFamily::from_edges(fl.members.n(), 0, std::move(petals));
    return !tau_at_most(petal_family, fl.threshold);
}

/// Is Y the core of some flower of threshold alpha inside F? Equivalent test on the
/// full superfamily G = {E ∈ F : Y ⊊ E}: any witness S lies in G, squeezing
/// Y ⊆ ⋂G ⊆ ⋂S = Y, and G's petals extend S's, so τ(G(Y)) >= τ(S(Y)) > alpha; G itself
/// is then a witness. Empty Y is not a valid core here (see find_flower for the
/// whole-family case).
inline bool is_flower_core(const SetFamily& f, const VertexSet& y, int alpha) {
    if (y.empty()) return false;
    VertexSet inter = VertexSet::full(f.n());
    std::vector<VertexSet> petals;
    for (const auto& e : f.edges()) {
        if (!y.proper_subset_of(e)) continue;
        inter &= e;
        petals.push_back(e - y);
    }
    if (petals.empty() || !(inter == y)) return false;
    auto petal_family = SetFamily::from_edges(f.n(), 0, std::move(petals));
    return !tau_at_most(petal_family, alpha);
}

namespace detail {

/// Constructive search mirroring the pigeonhole proof of the flower size threshold:
/// if τ(F) > alpha the whole family is a flower with core ⋂F (necessarily empty, since
/// a nonempty intersection gives a 1-vertex transversal); otherwise the highest-degree
/// vertex x of a minimum transversal covers at least |F|/alpha edges, and a flower in
/// the link lifts by re-attaching x. Whenever |F| > alpha^r this recursion cannot fail.
inline std::optional<Flower> find_flower_recursive(const SetFamily& f, int alpha) {
    if (f.empty()) return std::nullopt;
    auto tw = tau_witness(f);
    if (tw.tau > alpha) {
        VertexSet inter = VertexSet::full(f.n());
        for (const auto& e : f.edges()) inter &= e;
        return Flower{inter, f, alpha};
    }
    if (f.r() <= 1) return std::nullopt; // deeper links would have empty petals
    int x = 0;
    long long best_deg = -1;
    tw.transversal.for_each_vertex([&](int v) {
        long long d = degree(f, v);
        if (d > best_deg) {
            best_deg = d;
            x = v;
        }
    });
    auto sub = find_flower_recursive(link(f, VertexSet(f.n()).add(x)), alpha);
    if (!sub) return std::nullopt;
    std::vector<VertexSet> lifted;
    for (const auto& m : sub->members.edges()) lifted.push_back(m.with(x));
    return Flower{sub->core.with(x), SetFamily::from_edges(f.n(), f.r(), std::move(lifted)), alpha};
}

/// Deduplicated nonempty subsets of edges: every possible flower core is among them,
/// because a core is an intersection of members and sits inside each of them.
template <class Fn>
void for_each_core_candidate(const SetFamily& f, Fn&& visit) {
    std::unordered_set<VertexSet, VertexSetHash> seen;
    for (const auto& e : f.edges()) {
        auto verts = e.vertices();
        int k = static_cast<int>(verts.size());
        for (uint32_t mask = 1; mask < (uint32_t{1} << k); ++mask) {
            VertexSet y(f.n());
            for (int i = 0; i < k; ++i)
                if (mask & (uint32_t{1} << i)) y.add(verts[static_cast<size_t>(i)]);
            if (seen.insert(y).second) visit(y);
        }
    }
}

} // namespace detail

/// Finds a flower of threshold alpha in F, or proves there is none. The constructive
/// recursion is tried first and always succeeds when |F| > alpha^r; if it fails, an
/// exhaustive core check settles existence, so nullopt means "no flower at all".
/// Pre: F uniform, r >= 1, alpha >= 1.
inline std::optional<Flower> find_flower(const SetFamily& f, int alpha) {
    if (!f.uniform()) fail(errc::bad_params, "find_flower requires a uniform family");
    if (alpha < 1) fail(errc::bad_params, "find_flower requires alpha >= 1");
    if (auto fl = detail::find_flower_recursive(f, alpha)) return fl;
    std::optional<Flower> found;
    detail::for_each_core_candidate(f, [&](const VertexSet& y) {
        if (found || !is_flower_core(f, y, alpha)) return;
        std::vector<VertexSet> members;
        for (const auto& e : f.edges())
            if (y.proper_subset_of(e)) members.push_back(e);
        found = Flower{y, SetFamily::from_edges(f.n(), f.r(), std::move(members)), alpha};
    });
    return found;
}

struct FlowerBaseMember {
    enum class Origin { edge, core };
    VertexSet set;
    Origin origin;
};

/// The flower base at threshold alpha: inclusion-minimal elements of F ∪ {cores of
/// flowers of threshold alpha}, each tagged with where it came from (sets that are both
/// get the edge tag). Members are in canonical mask order.
struct FlowerBase {
    int alpha = 0;
    std::vector<FlowerBaseMember> members;

    std::vector<VertexSet> sets() const {
        std::vector<VertexSet> out;
        out.reserve(members.size());
        for (const auto& m : members) out.push_back(m.set);
        return out;
    }

    /// Members as a mixed family (for tau / Sperner / intersection checks).
    SetFamily as_family(int n) const { return SetFamily::from_edges(n, 0, sets()); }
};

/// Pre: alpha >= τ(F) (ThresholdTooSmall otherwise). Cores are found by testing every
/// deduplicated nonempty subset of every edge with is_flower_core.
inline FlowerBase flower_base(const SetFamily& f, int alpha) {
    if (alpha < tau(f)) throw Error(errc::threshold_too_small, "flower base requires alpha >= tau(F)");
    std::vector<VertexSet> cores;
    detail::for_each_core_candidate(f, [&](const VertexSet& y) {
        if (is_flower_core(f, y, alpha)) cores.push_back(y);
    });

    std::vector<FlowerBaseMember> pool;
    for (const auto& e : f.edges()) pool.push_back({e, FlowerBaseMember::Origin::edge});
    for (const auto& y : cores)
        if (!f.contains(y)) pool.push_back({y, FlowerBaseMember::Origin::core});

    FlowerBase base;
    base.alpha = alpha;
    for (const auto& cand : pool) {
        bool minimal = true;
        for (const auto& other : pool)
            if (!(other.set == cand.set) && other.set.proper_subset_of(cand.set)) {
                minimal = false;
                break;
            }
        if (minimal) base.members.push_back(cand);
    }
    std::sort(base.members.begin(), base.members.end(),
              [](const FlowerBaseMember& a, const FlowerBaseMember& b) { return a.set < b.set; });
    return base;
}

struct BaseCardinalityBounds {
    Int bound3; ///< Σ_B binom(n-|B|, r-|B|)
    Int bound5; ///< Σ_{i<k} |B_i|·binom(n-i, r-i) + r^{r+1}·binom(n-k, r-k)
};

/// Size bounds on any family with the given base. Pre: F uniform, 1 <= k <= r.
inline BaseCardinalityBounds base_cardinality_bounds(const SetFamily& f, const FlowerBase& base, int k) {
    if (!f.uniform()) fail(errc::bad_params, "cardinality bounds require a uniform family");
    int n = f.n(), r = f.r();
    if (k < 1 || k > r) fail(errc::bad_params, "cardinality bounds require 1 <= k <= r");
    BaseCardinalityBounds out{0, 0};
    std::vector<long long> layer(static_cast<size_t>(r) + 1, 0);
    for (const auto& m : base.members) {
        int s = m.set.count();
        out.bound3 += binom(n - s, r - s);
        if (s <= r) ++layer[static_cast<size_t>(s)];
    }
    for (int i = 1; i < k; ++i) out.bound5 += Int(layer[static_cast<size_t>(i)]) * binom(n - i, r - i);
    Int r0 = 1;
    for (int i = 0; i <= r; ++i) r0 *= r; // r^{r+1}
    out.bound5 += r0 * binom(n - k, r - k);
    return out;
}

struct InheritanceReport {
    bool sperner = false;          ///< base is an antichain
    bool transversal_members = false; ///< base is intersecting and every member meets every edge of F
    bool tau_preserved = false;    ///< τ(base) == τ(F)
    bool size_bound = false;       ///< |base| <= r·alpha^r
    int tau_family = 0;
    int tau_base = 0;
    long long base_size = 0;
    Int size_limit;
    bool pass = false;
};

/// The four inherited properties of a flower base of an intersecting family built with
/// alpha >= r. Pre: F uniform and intersecting.
inline InheritanceReport inheritance_check(const SetFamily& f, const FlowerBase& base) {
    if (!f.uniform()) fail(errc::bad_params, "inheritance check requires a uniform family");
    if (!is_intersecting(f)) fail(errc::precondition_violated, "inheritance check requires an intersecting family");
    if (base.alpha < f.r()) fail(errc::precondition_violated, "inheritance check requires a base built with alpha >= r");
    InheritanceReport rep;
    auto bf = base.as_family(f.n());
    rep.sperner = is_sperner(bf);
    rep.transversal_members = is_intersecting(bf);
    if (rep.transversal_members)
        for (const auto& m : bf.edges())
            if (!is_transversal(m, f)) {
                rep.transversal_members = false;
                break;
            }
    rep.tau_family = tau(f);
    rep.tau_base = tau(bf);
    rep.tau_preserved = rep.tau_family == rep.tau_base;
    rep.base_size = static_cast<long long>(bf.size());
    Int limit = f.r();
    for (int i = 0; i < f.r(); ++i) limit *= base.alpha; // r·alpha^r
    rep.size_limit = limit;
    rep.size_bound = Int(rep.base_size) <= limit;
    rep.pass = rep.sperner && rep.transversal_members && rep.tau_preserved && rep.size_bound;
    return rep;
}

} // namespace flowerkit
