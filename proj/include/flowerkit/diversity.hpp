#pragma once

#include <optional>
#include <vector>

#include "rational.hpp"
#include "set_family.hpp"

namespace flowerkit {

/// Plain diversity d(F) = |F| - Δ(F).
inline long long diversity(const SetFamily& f) {
    return static_cast<long long>(f.size()) - max_degree(f).degree;
}

struct DiversityReport {
    long long size = 0;
    long long max_degree = 0;
    int argmax = 0; ///< smallest vertex attaining Δ
    Rational C;
    Rational value; ///< |F| - C * Δ(F)
};

/// C-weighted diversity d_C(F) = |F| - C·Δ(F), exact. Pre: C >= 0.
inline DiversityReport weighted_diversity_report(const SetFamily& f, const Rational& C) {
    if (C < 0) fail(errc::bad_params, "weighted diversity requires C >= 0");
    auto md = max_degree(f);
    DiversityReport rep;
    rep.size = static_cast<long long>(f.size());
    rep.max_degree = md.degree;
    rep.argmax = md.vertex;
    rep.C = C;
    rep.value = Rational(rep.size) - C * Rational(md.degree);
    return rep;
}

inline Rational weighted_diversity(const SetFamily& f, const Rational& C) {
    return weighted_diversity_report(f, C).value;
}

/// Edge weighting ρ : F -> (0, 1], aligned with the family's edge order.
class DensityMap {
public:
    DensityMap(SetFamily family, std::vector<Rational> values) : family_(std::move(family)), values_(std::move(values)) {
        if (values_.size() != family_.size()) fail(errc::dimension_mismatch, "density map size differs from family size");
        for (const auto& v : values_)
            if (v <= 0 || v > 1) fail(errc::bad_params, "density values must lie in (0, 1]");
    }

    static DensityMap uniform(SetFamily family, const Rational& value = 1) {
        std::vector<Rational> v(family.size(), value);
        return DensityMap(std::move(family), std::move(v));
    }

    const SetFamily& family() const noexcept { return family_; }
    const std::vector<Rational>& values() const noexcept { return values_; }
    const Rational& value(size_t i) const { return values_[i]; }

private:
    SetFamily family_;
    std::vector<Rational> values_;
};

/// ρ(F) = Σ_E ρ(E).
inline Rational rho_mass(const DensityMap& d) {
    Rational m = 0;
    for (const auto& v : d.values()) m += v;
    return m;
}

inline Rational rho_degree(const DensityMap& d, int x) {
    if (x < 1 || x > d.family().n()) fail(errc::bad_params, "rho_degree: vertex outside ground set");
    Rational deg = 0;
    for (size_t i = 0; i < d.family().size(); ++i)
        if (d.family().edge(i).contains(x)) deg += d.value(i);
    return deg;
}

struct RhoMaxDegree {
    Rational degree;
    int vertex = 0; ///< smallest spanned vertex attaining the max; 0 for the empty family
};

/// Δ_ρ over spanned vertices only (unspanned vertices are not eligible argmaxes).
inline RhoMaxDegree rho_max_degree(const DensityMap& d) {
    RhoMaxDegree best{Rational(0), 0};
    std::vector<Rational> deg(static_cast<size_t>(d.family().n()) + 1, Rational(0));
    for (size_t i = 0; i < d.family().size(); ++i)
        d.family().edge(i).for_each_vertex([&](int v) { deg[static_cast<size_t>(v)] += d.value(i); });
    VertexSet spanned = d.family().spanned();
    spanned.for_each_vertex([&](int v) {
        if (best.vertex == 0 || deg[static_cast<size_t>(v)] > best.degree) best = {deg[static_cast<size_t>(v)], v};
    });
    return best;
}

/// ρ-weighted diversity ρ(F) - C·Δ_ρ(F).
inline Rational rho_diversity(const DensityMap& d, const Rational& C) {
    if (C < 0) fail(errc::bad_params, "rho diversity requires C >= 0");
    return rho_mass(d) - C * rho_max_degree(d).degree;
}

/// Kernel bound: if some vertex covers at least |F'|/C edges of a subfamily F' ⊆ F,
/// then d_C(F) <= |F \ F'|. Returns the truth of that inequality (a theorem, so always
/// true on valid input); preconditions are enforced.
inline bool kernel_bound_check(const SetFamily& f, const SetFamily& sub, const Rational& C) {
    if (C <= 0) fail(errc::precondition_violated, "kernel bound requires C > 0");
    if (sub.n() != f.n()) fail(errc::precondition_violated, "kernel bound: ground sets differ");
    for (const auto& e : sub.edges())
        if (!f.contains(e)) fail(errc::precondition_violated, "kernel bound: F' is not a subfamily of F");
    auto md = max_degree(sub);
    if (Rational(md.degree) * C < Rational(static_cast<long long>(sub.size())))
        fail(errc::precondition_violated, "kernel bound: no vertex of F' has degree >= |F'|/C");
    Rational lhs = weighted_diversity(f, C);
    Rational rhs = Rational(static_cast<long long>(f.size() - sub.size()));
    return lhs <= rhs;
}

/// Δ(F)/|F|, exact. Errors on the empty family.
inline Rational degree_ratio(const SetFamily& f) {
    if (f.empty()) fail(errc::empty_family, "degree ratio undefined for the empty family");
    return Rational(max_degree(f).degree, static_cast<long long>(f.size()));
}

struct TwoOutOfThreeDistance {
    VertexSet triple;  ///< the 3-set T
    Int additions = 0; ///< r-sets with |E ∩ T| = 2 missing from F
};

/// Scans all 3-subsets T of [n] such that every edge meets T in at least two vertices
/// and returns the T minimizing the number of absent "two out of three" edges, i.e.
/// 3·binom(n-3, r-2) minus the count of E ∈ F with |E ∩ T| = 2. Ties break to the
/// smallest T in mask order; returns nullopt when no triple qualifies. Pre: uniform,
/// r >= 3.
inline std::optional<TwoOutOfThreeDistance> distance_to_two_out_of_three(const SetFamily& f) {
    if (!f.uniform() || f.r() < 3) fail(errc::bad_params, "two-out-of-three distance requires uniform r >= 3");
    int n = f.n();
    std::optional<TwoOutOfThreeDistance> best;
    Int complete = 3 * binom(n - 3, f.r() - 2);
    for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
            for (int c = b + 1; c <= n; ++c) {
                VertexSet t = VertexSet::of(n, {a, b, c});
                long long with_two = 0;
                bool valid = true;
                for (const auto& e : f.edges()) {
                    int k = (e & t).count();
                    if (k < 2) {
                        valid = false;
                        break;
                    }
                    if (k == 2) ++with_two;
                }
                if (!valid) continue;
                Int missing = complete - with_two;
                if (!best || missing < best->additions ||
                    (missing == best->additions && t < best->triple))
                    best = TwoOutOfThreeDistance{t, missing};
            }
    return best;
}

} // namespace flowerkit
