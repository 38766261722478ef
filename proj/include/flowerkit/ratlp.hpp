#pragma once

#include <atomic>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "canonical.hpp"
#include "constructions.hpp"
#include "rational.hpp"
#include "search.hpp"
#include "set_family.hpp"

namespace flowerkit {

enum class Relation { le, ge, eq };

struct LpRow {
    std::vector<Rational> coeffs;
    Relation rel = Relation::le;
    Rational rhs;
};

struct VarBounds {
    std::optional<Rational> lower, upper; ///< absent bound = unbounded on that side
};

/// Maximization LP: max objective·x subject to rows and per-variable bounds.
struct LinearProgram {
    int num_vars = 0;
    std::vector<Rational> objective;
    std::vector<LpRow> rows;
    std::vector<VarBounds> bounds; ///< empty = all variables free
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpOutcome {
    LpStatus status = LpStatus::infeasible;
    Rational value;                ///< meaningful when optimal
    std::vector<Rational> solution; ///< one per original variable, when optimal
    std::vector<Rational> dual;     ///< multipliers of the standardized equality rows
    bool duality_verified = false;  ///< exact strong-duality certificate checked
};

namespace detail {

/// Dense exact simplex tableau in equality form Ax = b, x >= 0, maximize c·x.
struct Tableau {
    int rows = 0, cols = 0; // cols excludes the rhs column
    std::vector<std::vector<Rational>> a; // rows × (cols + 1), last column = rhs
    std::vector<int> basis;               // basis[i] = column basic in row i
    std::vector<bool> artificial;         // per column

    void pivot(int pr, int pc) {
        Rational p = a[static_cast<size_t>(pr)][static_cast<size_t>(pc)];
        for (auto& v : a[static_cast<size_t>(pr)]) v /= p;
        for (int i = 0; i < rows; ++i) {
            if (i == pr) continue;
            Rational f = a[static_cast<size_t>(i)][static_cast<size_t>(pc)];
            if (f == 0) continue;
            for (int j = 0; j <= cols; ++j)
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] -=
                    f * a[static_cast<size_t>(pr)][static_cast<size_t>(j)];
        }
        basis[static_cast<size_t>(pr)] = pc;
    }

    /// Bland's rule: entering = smallest column with positive reduced cost, leaving =
    /// smallest-ratio row with ties broken by the smallest basic column. Returns false
    /// when the objective is unbounded.
    bool solve(const std::vector<Rational>& cost, bool allow_artificial_entering) {
        while (true) {
            // reduced costs d_j = c_j − c_B·T_j, recomputed exactly each iteration
            std::vector<Rational> cb(static_cast<size_t>(rows));
            for (int i = 0; i < rows; ++i) cb[static_cast<size_t>(i)] = cost[static_cast<size_t>(basis[static_cast<size_t>(i)])];
            int enter = -1;
            for (int j = 0; j < cols && enter < 0; ++j) {
                if (!allow_artificial_entering && artificial[static_cast<size_t>(j)]) continue;
                Rational d = cost[static_cast<size_t>(j)];
                for (int i = 0; i < rows; ++i) d -= cb[static_cast<size_t>(i)] * a[static_cast<size_t>(i)][static_cast<size_t>(j)];
                if (d > 0) enter = j;
            }
            if (enter < 0) return true;
            int leave = -1;
            Rational best_ratio;
            for (int i = 0; i < rows; ++i) {
                const Rational& piv = a[static_cast<size_t>(i)][static_cast<size_t>(enter)];
                if (piv <= 0) continue;
                Rational ratio = a[static_cast<size_t>(i)][static_cast<size_t>(cols)] / piv;
                if (leave < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && basis[static_cast<size_t>(i)] < basis[static_cast<size_t>(leave)])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave < 0) return false; // unbounded direction
            pivot(leave, enter);
        }
    }
};

} // namespace detail

/// Exact two-phase simplex with Bland's anti-cycling rule. The outcome carries a dual
/// vector for the standardized equality system together with an exact strong-duality
/// check, so optimality does not rest on the pivoting logic alone.
inline LpOutcome simplex_max(const LinearProgram& lp) {
    if (lp.num_vars < 1) fail(errc::bad_params, "LP needs at least one variable");
    if (static_cast<int>(lp.objective.size()) != lp.num_vars)
        fail(errc::dimension_mismatch, "objective length differs from num_vars");
    for (const auto& row : lp.rows)
        if (static_cast<int>(row.coeffs.size()) != lp.num_vars)
            fail(errc::dimension_mismatch, "row length differs from num_vars");
    if (!lp.bounds.empty() && static_cast<int>(lp.bounds.size()) != lp.num_vars)
        fail(errc::dimension_mismatch, "bounds length differs from num_vars");
    if (lp.num_vars + static_cast<int>(lp.rows.size()) > 200)
        fail(errc::too_large, "simplex_max is capped at num_vars + rows <= 200");

    // --- substitute bounds so every structural column is >= 0 ---
    // kind 0: x = shift + x'   (lower bound present)
    // kind 1: x = shift − x'   (only an upper bound; mirrored)
    // kind 2: x = x⁺ − x⁻      (free; column holds x⁺, column+1 holds x⁻)
    struct VarMap {
        int kind;
        int col;
        Rational shift;
    };
    std::vector<VarMap> vmap(static_cast<size_t>(lp.num_vars));
    int ncols = 0;
    std::vector<LpRow> std_rows = lp.rows;
    for (int j = 0; j < lp.num_vars; ++j) {
        VarBounds b = lp.bounds.empty() ? VarBounds{} : lp.bounds[static_cast<size_t>(j)];
        if (b.lower && b.upper && *b.lower > *b.upper) return {LpStatus::infeasible, 0, {}, {}, false};
        if (b.lower) {
            vmap[static_cast<size_t>(j)] = {0, ncols++, *b.lower};
            if (b.upper) {
                LpRow cap;
                cap.coeffs.assign(static_cast<size_t>(lp.num_vars), Rational(0));
                cap.coeffs[static_cast<size_t>(j)] = 1;
                cap.rel = Relation::le;
                cap.rhs = *b.upper;
                std_rows.push_back(std::move(cap));
            }
        } else if (b.upper) {
            vmap[static_cast<size_t>(j)] = {1, ncols++, *b.upper};
        } else {
            vmap[static_cast<size_t>(j)] = {2, ncols, 0};
            ncols += 2;
        }
    }

    int m = static_cast<int>(std_rows.size());
    // standardized columns: structural | slack/surplus | artificial
    int nslack = 0;
    for (const auto& row : std_rows)
        if (row.rel != Relation::eq) ++nslack;
    detail::Tableau t;
    t.rows = m;

    // build row images under the substitution, collect slack count first
    std::vector<std::vector<Rational>> rowimg(static_cast<size_t>(m));
    std::vector<Rational> rhs(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        const LpRow& row = std_rows[static_cast<size_t>(i)];
        std::vector<Rational> img(static_cast<size_t>(ncols), Rational(0));
        Rational b = row.rhs;
        for (int j = 0; j < lp.num_vars; ++j) {
            const Rational& aij = row.coeffs[static_cast<size_t>(j)];
            if (aij == 0) continue;
            const VarMap& vm = vmap[static_cast<size_t>(j)];
            if (vm.kind == 0) {
                img[static_cast<size_t>(vm.col)] += aij;
                b -= aij * vm.shift;
            } else if (vm.kind == 1) {
                img[static_cast<size_t>(vm.col)] -= aij;
                b -= aij * vm.shift;
            } else {
                img[static_cast<size_t>(vm.col)] += aij;
                img[static_cast<size_t>(vm.col) + 1] -= aij;
            }
        }
        rowimg[static_cast<size_t>(i)] = std::move(img);
        rhs[static_cast<size_t>(i)] = b;
    }

    int total = ncols + nslack + m; // artificial slot reserved per row (unused ones stay zero)
    t.cols = total;
    t.artificial.assign(static_cast<size_t>(total), false);
    t.a.assign(static_cast<size_t>(m), std::vector<Rational>(static_cast<size_t>(total) + 1, Rational(0)));
    t.basis.assign(static_cast<size_t>(m), -1);
    std::vector<int> id_col(static_cast<size_t>(m), -1); // the initial identity column of each row
    int sidx = ncols, aidx = ncols + nslack;
    int artificial_count = 0;
    for (int i = 0; i < m; ++i) {
        Relation rel = std_rows[static_cast<size_t>(i)].rel;
        Rational sign = 1;
        if (rhs[static_cast<size_t>(i)] < 0) { // normalize to b >= 0
            sign = -1;
            rel = (rel == Relation::le) ? Relation::ge : (rel == Relation::ge ? Relation::le : Relation::eq);
        }
        auto& arow = t.a[static_cast<size_t>(i)];
        for (int j = 0; j < ncols; ++j) arow[static_cast<size_t>(j)] = sign * rowimg[static_cast<size_t>(i)][static_cast<size_t>(j)];
        arow[static_cast<size_t>(total)] = sign * rhs[static_cast<size_t>(i)];
        if (rel == Relation::le) {
            arow[static_cast<size_t>(sidx)] = 1;
            t.basis[static_cast<size_t>(i)] = sidx;
            id_col[static_cast<size_t>(i)] = sidx;
            ++sidx;
        } else {
            if (rel == Relation::ge) arow[static_cast<size_t>(sidx++)] = -1;
            arow[static_cast<size_t>(aidx)] = 1;
            t.artificial[static_cast<size_t>(aidx)] = true;
            t.basis[static_cast<size_t>(i)] = aidx;
            id_col[static_cast<size_t>(i)] = aidx;
            ++aidx;
            ++artificial_count;
        }
    }

    // phase 1: drive the artificials to zero
    if (artificial_count > 0) {
        std::vector<Rational> cost1(static_cast<size_t>(total), Rational(0));
        for (int j = 0; j < total; ++j)
            if (t.artificial[static_cast<size_t>(j)]) cost1[static_cast<size_t>(j)] = -1;
        t.solve(cost1, true); // bounded above by 0, never unbounded
        Rational art_mass = 0;
        for (int i = 0; i < m; ++i)
            if (t.artificial[static_cast<size_t>(t.basis[static_cast<size_t>(i)])])
                art_mass += t.a[static_cast<size_t>(i)][static_cast<size_t>(total)];
        if (art_mass != 0) return {LpStatus::infeasible, 0, {}, {}, false};
        // pivot basic zero-valued artificials out where possible
        for (int i = 0; i < m; ++i) {
            if (!t.artificial[static_cast<size_t>(t.basis[static_cast<size_t>(i)])]) continue;
            for (int j = 0; j < total; ++j)
                if (!t.artificial[static_cast<size_t>(j)] && t.a[static_cast<size_t>(i)][static_cast<size_t>(j)] != 0) {
                    t.pivot(i, j);
                    break;
                }
        }
    }

    // phase 2
    std::vector<Rational> cost2(static_cast<size_t>(total), Rational(0));
    for (int j = 0; j < lp.num_vars; ++j) {
        const VarMap& vm = vmap[static_cast<size_t>(j)];
        const Rational& c = lp.objective[static_cast<size_t>(j)];
        if (vm.kind == 0) cost2[static_cast<size_t>(vm.col)] += c;
        else if (vm.kind == 1) cost2[static_cast<size_t>(vm.col)] -= c;
        else {
            cost2[static_cast<size_t>(vm.col)] += c;
            cost2[static_cast<size_t>(vm.col) + 1] -= c;
        }
    }
    if (!t.solve(cost2, false)) return {LpStatus::unbounded, 0, {}, {}, false};

    // read the standardized solution and map back to the original variables
    std::vector<Rational> xstd(static_cast<size_t>(total), Rational(0));
    for (int i = 0; i < m; ++i) xstd[static_cast<size_t>(t.basis[static_cast<size_t>(i)])] = t.a[static_cast<size_t>(i)][static_cast<size_t>(total)];
    LpOutcome out;
    out.status = LpStatus::optimal;
    out.solution.assign(static_cast<size_t>(lp.num_vars), Rational(0));
    for (int j = 0; j < lp.num_vars; ++j) {
        const VarMap& vm = vmap[static_cast<size_t>(j)];
        if (vm.kind == 0) out.solution[static_cast<size_t>(j)] = vm.shift + xstd[static_cast<size_t>(vm.col)];
        else if (vm.kind == 1) out.solution[static_cast<size_t>(j)] = vm.shift - xstd[static_cast<size_t>(vm.col)];
        else out.solution[static_cast<size_t>(j)] = xstd[static_cast<size_t>(vm.col)] - xstd[static_cast<size_t>(vm.col) + 1];
    }
    for (int j = 0; j < lp.num_vars; ++j) out.value += lp.objective[static_cast<size_t>(j)] * out.solution[static_cast<size_t>(j)];

    // dual certificate: y_i = −d(identity column of row i); verified from first
    // principles against the standardized system (weak duality for Ax = b, x >= 0:
    // c·x = y·Ax + (c − y·A)·x <= y·b whenever y·A >= c and x >= 0)
    {
        std::vector<Rational> cb(static_cast<size_t>(m));
        for (int i = 0; i < m; ++i) cb[static_cast<size_t>(i)] = cost2[static_cast<size_t>(t.basis[static_cast<size_t>(i)])];
        out.dual.assign(static_cast<size_t>(m), Rational(0));
        for (int i = 0; i < m; ++i) {
            Rational z = 0;
            for (int k = 0; k < m; ++k)
                z += cb[static_cast<size_t>(k)] * t.a[static_cast<size_t>(k)][static_cast<size_t>(id_col[static_cast<size_t>(i)])];
            out.dual[static_cast<size_t>(i)] = z; // cost of the identity column is 0 in phase 2
        }
        bool ok = true;
        // rebuild the standardized columns independently of the tableau
        Rational ydotb = 0;
        for (int i = 0; i < m && ok; ++i) {
            Rational b = rhs[static_cast<size_t>(i)] < 0 ? -rhs[static_cast<size_t>(i)] : rhs[static_cast<size_t>(i)];
            ydotb += out.dual[static_cast<size_t>(i)] * b;
        }
        std::vector<Rational> yA(static_cast<size_t>(ncols), Rational(0));
        for (int i = 0; i < m; ++i) {
            Rational sign = rhs[static_cast<size_t>(i)] < 0 ? Rational(-1) : Rational(1);
            for (int j = 0; j < ncols; ++j)
                yA[static_cast<size_t>(j)] += out.dual[static_cast<size_t>(i)] * sign * rowimg[static_cast<size_t>(i)][static_cast<size_t>(j)];
        }
        for (int j = 0; j < ncols && ok; ++j)
            if (yA[static_cast<size_t>(j)] < cost2[static_cast<size_t>(j)]) ok = false;
        // slack/surplus columns: cost 0, so y·A_j >= 0 is required
        for (int i = 0; i < m && ok; ++i) {
            Relation rel = std_rows[static_cast<size_t>(i)].rel;
            if (rel == Relation::eq) continue;
            Rational sign = rhs[static_cast<size_t>(i)] < 0 ? Rational(-1) : Rational(1);
            Rational coeff = (rel == Relation::le) ? sign : -sign;
            if (out.dual[static_cast<size_t>(i)] * coeff < 0) ok = false;
        }
        Rational value_std = 0;
        for (int j = 0; j < ncols; ++j) value_std += cost2[static_cast<size_t>(j)] * xstd[static_cast<size_t>(j)];
        if (ydotb != value_std) ok = false;
        out.duality_verified = ok;
    }
    return out;
}

/// Plain-text LP format, one directive per line:
///   vars N / objective c1 .. cN / row (<=|>=|=) rhs a1 .. aN / bound j lo hi
/// where lo and hi are rationals or "-" for an absent bound. Lines may repeat `row` and
/// `bound`; everything else appears once.
inline std::string lp_to_text(const LinearProgram& lp) {
    std::ostringstream out;
    out << "vars " << lp.num_vars << '\n';
    out << "objective";
    for (const auto& c : lp.objective) out << ' ' << format_rational(c);
    out << '\n';
    for (const auto& row : lp.rows) {
        out << "row " << (row.rel == Relation::le ? "<=" : row.rel == Relation::ge ? ">=" : "=") << ' '
            << format_rational(row.rhs);
        for (const auto& a : row.coeffs) out << ' ' << format_rational(a);
        out << '\n';
    }
    for (size_t j = 0; j < lp.bounds.size(); ++j) {
        const auto& b = lp.bounds[j];
        if (!b.lower && !b.upper) continue;
        out << "bound " << (j + 1) << ' ' << (b.lower ? format_rational(*b.lower) : "-") << ' '
            << (b.upper ? format_rational(*b.upper) : "-") << '\n';
    }
    return out.str();
}

inline LinearProgram lp_from_text(const std::string& text) {
    LinearProgram lp;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_vars = false, have_obj = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "vars") {
            if (!(ls >> lp.num_vars) || lp.num_vars < 1) throw ParseError("bad vars directive", lineno);
            lp.bounds.assign(static_cast<size_t>(lp.num_vars), VarBounds{});
            have_vars = true;
        } else if (head == "objective") {
            if (!have_vars) throw ParseError("objective before vars", lineno);
            std::string tok;
            while (ls >> tok) lp.objective.push_back(parse_rational(tok));
            if (static_cast<int>(lp.objective.size()) != lp.num_vars)
                throw ParseError("objective length differs from vars", lineno);
            have_obj = true;
        } else if (head == "row") {
            if (!have_vars) throw ParseError("row before vars", lineno);
            std::string rel, tok;
            LpRow row;
            if (!(ls >> rel >> tok)) throw ParseError("bad row directive", lineno);
            if (rel == "<=") row.rel = Relation::le;
            else if (rel == ">=") row.rel = Relation::ge;
            else if (rel == "=") row.rel = Relation::eq;
            else throw ParseError("unknown relation '" + rel + "'", lineno);
            row.rhs = parse_rational(tok);
            while (ls >> tok) row.coeffs.push_back(parse_rational(tok));
            if (static_cast<int>(row.coeffs.size()) != lp.num_vars)
                throw ParseError("row length differs from vars", lineno);
            lp.rows.push_back(std::move(row));
        } else if (head == "bound") {
            if (!have_vars) throw ParseError("bound before vars", lineno);
            int j = 0;
            std::string lo, hi;
            if (!(ls >> j >> lo >> hi) || j < 1 || j > lp.num_vars) throw ParseError("bad bound directive", lineno);
            VarBounds b;
            if (lo != "-") b.lower = parse_rational(lo);
            if (hi != "-") b.upper = parse_rational(hi);
            lp.bounds[static_cast<size_t>(j - 1)] = b;
        } else {
            throw ParseError("unknown directive '" + head + "'", lineno);
        }
    }
    if (!have_vars || !have_obj) throw ParseError("missing vars or objective", lineno);
    return lp;
}

namespace detail {

/// LP skeleton shared by the checked builder and tests that exercise degenerate inputs:
/// variables ρ_e per edge plus t, maximize Σρ_e − C·t with per-vertex ρ-degree ≤ t,
/// 0 ≤ ρ_e ≤ 1, and total mass Σρ_e ≥ 6.
inline LinearProgram baby_lemma_lp_unchecked(const SetFamily& b, const Rational& C) {
    int m = static_cast<int>(b.size());
    LinearProgram lp;
    lp.num_vars = m + 1; // ρ_1..ρ_m, then t
    lp.objective.assign(static_cast<size_t>(m) + 1, Rational(1));
    lp.objective[static_cast<size_t>(m)] = -C;
    lp.bounds.assign(static_cast<size_t>(m) + 1, VarBounds{Rational(0), Rational(1)});
    lp.bounds[static_cast<size_t>(m)] = VarBounds{Rational(0), std::nullopt};
    b.spanned().for_each_vertex([&](int x) {
        LpRow row;
        row.coeffs.assign(static_cast<size_t>(m) + 1, Rational(0));
        for (int e = 0; e < m; ++e)
            if (b.edge(static_cast<size_t>(e)).contains(x)) row.coeffs[static_cast<size_t>(e)] = 1;
        row.coeffs[static_cast<size_t>(m)] = -1;
        row.rel = Relation::le;
        row.rhs = 0;
        lp.rows.push_back(std::move(row));
    });
    LpRow mass;
    mass.coeffs.assign(static_cast<size_t>(m) + 1, Rational(1));
    mass.coeffs[static_cast<size_t>(m)] = 0;
    mass.rel = Relation::ge;
    mass.rhs = 6;
    lp.rows.push_back(std::move(mass));
    return lp;
}

} // namespace detail

/// The weighted-density LP of a 7-vertex covering-number-3 family: maximize
/// ρ(B) − C·Δ_ρ(B) over densities ρ: B → [0,1] with total mass at least 6. The strict
/// open region (mass > 6, values in (0,1]) has the same supremum as this closed one:
/// the objective is continuous and every closed-region point is a limit of open-region
/// points whenever |B| > 6 (scale ρ up slightly), while |B| = 6 forces ρ ≡ 1, where the
/// per-vertex cap makes t ≥ 3 by counting (18 incidences over 7 vertices); both regions
/// then agree at the single point. Modeling Δ_ρ with t ≥ every vertex degree is exact
/// at any optimum since t's objective coefficient −C is negative for C > 0.
inline LinearProgram baby_lemma_lp(const SetFamily& b, const Rational& C) {
    if (!b.uniform() || b.r() != 3) fail(errc::precondition_violated, "baby_lemma_lp requires a 3-uniform family");
    if (!is_intersecting(b)) fail(errc::precondition_violated, "baby_lemma_lp requires an intersecting family");
    if (b.spanned().count() != 7) fail(errc::precondition_violated, "baby_lemma_lp requires a family spanning 7 vertices");
    if (tau(b) != 3) fail(errc::precondition_violated, "baby_lemma_lp requires covering number 3");
    return detail::baby_lemma_lp_unchecked(b, C);
}

struct BabyLemmaFamilyResult {
    SetFamily family; ///< canonical representative
    bool is_fano = false;
    Rational optimum;
    Rational margin; ///< optimum − (6 − 3C)
    bool pass = false;
};

struct BabyLemmaReport {
    Rational C;
    Rational threshold; ///< 6 − 3C
    bool pass = false;
    std::vector<BabyLemmaFamilyResult> families;
};

namespace detail {

inline int worker_count(size_t jobs) {
    if (jobs <= 1) return 1;
    unsigned hw = std::thread::hardware_concurrency();
    long long cap = hw ? static_cast<long long>(hw) : 1;
    if (const char* env = std::getenv("FLOWERKIT_THREADS")) {
        char* end = nullptr;
        long long v = std::strtoll(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) cap = std::min(cap, v);
    }
    return static_cast<int>(std::min<long long>(cap, static_cast<long long>(jobs)));
}

/// Index-sharded parallel map with a deterministic result order regardless of schedule.
template <class Fn>
inline void parallel_for(size_t jobs, Fn&& fn) {
    int workers = worker_count(jobs);
    if (workers <= 1) {
        for (size_t i = 0; i < jobs; ++i) fn(i);
        return;
    }
    std::atomic<size_t> next{0};
    auto run = [&]() {
        for (size_t i = next.fetch_add(1); i < jobs; i = next.fetch_add(1)) fn(i);
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(run);
    for (auto& th : pool) th.join();
}

} // namespace detail

/// Sweeps the τ=3 seven-vertex catalog: the Fano plane must beat the 6 − 3C threshold
/// and every other family must stay at or below it. Families may be solved in parallel
/// (FLOWERKIT_THREADS caps workers); the report order is the catalog order either way.
inline BabyLemmaReport verify_baby_lemma(const Rational& C, const std::vector<SetFamily>* catalog = nullptr) {
    if (C < Rational(3, 2) || C >= Rational(7, 3))
        fail(errc::bad_params, "verify_baby_lemma requires 3/2 <= C < 7/3");
    std::vector<SetFamily> owned;
    if (!catalog) {
        owned = catalog_tau3_families();
        catalog = &owned;
    }
    BabyLemmaReport rep;
    rep.C = C;
    rep.threshold = Rational(6) - Rational(3) * C;
    rep.families.resize(catalog->size());
    const std::string fano_form = canonical_form(fano());
    std::atomic<bool> solver_trouble{false};
    detail::parallel_for(catalog->size(), [&](size_t i) {
        const SetFamily& fam = (*catalog)[i];
        BabyLemmaFamilyResult res;
        res.family = fam;
        res.is_fano = canonical_form(fam) == fano_form;
        LpOutcome sol = simplex_max(baby_lemma_lp(fam, C));
        if (sol.status != LpStatus::optimal || !sol.duality_verified) {
            solver_trouble.store(true);
            res.pass = false;
        } else {
            res.optimum = sol.value;
            res.margin = sol.value - rep.threshold;
            res.pass = res.is_fano ? res.margin > 0 : res.margin <= 0;
        }
        rep.families[i] = std::move(res);
    });
    rep.pass = !solver_trouble.load();
    for (const auto& fr : rep.families) rep.pass = rep.pass && fr.pass;
    return rep;
}

} // namespace flowerkit
