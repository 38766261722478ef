#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <map>
#include <set>

#include "flowerkit/canonical.hpp"
#include "flowerkit/constructions.hpp"
#include "flowerkit/diversity.hpp"
#include "flowerkit/search.hpp"

using namespace flowerkit;

namespace {

bool throws_code(errc expected, const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code() == expected;
    }
    return false;
}

} // namespace

TEST_CASE("exhaustive optimum on pairs over five points") {
    // Intersecting 2-uniform families on [5] are stars and triangles; the extremes
    // below follow by inspecting those shapes.
    auto r0 = exhaustive_max_dC(5, 2, Rational(0));
    CHECK(r0.best_value == Rational(4));
    CHECK(r0.witness.size() == 4); // a full star
    CHECK(max_degree(r0.witness).degree == 4);
    CHECK(r0.exhaustive);

    auto r1 = exhaustive_max_dC(5, 2, Rational(1));
    CHECK(r1.best_value == Rational(1));
    CHECK(r1.witness.size() == 3); // a triangle
    CHECK(max_degree(r1.witness).degree == 2);

    CHECK(exhaustive_max_dC(5, 2, Rational(3, 2)).best_value == Rational(0));
    CHECK(exhaustive_max_dC(5, 2, Rational(2)).best_value == Rational(0));

    for (const auto& res : {r0, r1}) {
        CHECK(is_intersecting(res.witness));
        CHECK(weighted_diversity(res.witness, res.best_value == Rational(4) ? Rational(0) : Rational(1)) ==
              res.best_value);
    }
}

TEST_CASE("exhaustive optimum on triples over seven points") {
    std::map<Rational, Rational> expected{
        {Rational(0), Rational(15)},   // the full star
        {Rational(1), Rational(5)},    // a 10-edge witness with max degree 5
        {Rational(3, 2), Rational(5, 2)}, // the seven-line plane: 7 - (3/2)*3
        {Rational(2), Rational(1)},    // the seven-line plane: 7 - 2*3
    };
    for (const auto& [c, want] : expected) {
        auto res = exhaustive_max_dC(7, 3, c);
        CHECK(res.best_value == want);
        CHECK(is_intersecting(res.witness));
        CHECK(weighted_diversity(res.witness, c) == want);
        CHECK(res.exhaustive);
    }
    auto r1 = exhaustive_max_dC(7, 3, Rational(1));
    CHECK(r1.witness.size() == 10);
    CHECK(max_degree(r1.witness).degree == 5);
}

TEST_CASE("pruning and isomorph rejection do not change the optimum") {
    for (const auto& c : {Rational(1), Rational(3, 2)}) {
        ExhaustiveOptions plain;
        plain.prune = false;
        auto slow = exhaustive_max_dC(7, 3, c, plain);
        auto fast = exhaustive_max_dC(7, 3, c);
        ExhaustiveOptions iso;
        iso.isomorph_reject = true;
        auto iso_res = exhaustive_max_dC(7, 3, c, iso);
        CHECK(slow.best_value == fast.best_value);
        CHECK(iso_res.best_value == fast.best_value);
        CHECK(fast.nodes_explored <= slow.nodes_explored);
        CHECK(iso_res.nodes_explored <= fast.nodes_explored);
    }
}

TEST_CASE("exhaustive search limits") {
    CHECK(throws_code(errc::too_large, [] { exhaustive_max_dC(10, 3, Rational(1)); }));
    ExhaustiveOptions tight;
    tight.max_universe = 30;
    CHECK(throws_code(errc::too_large, [&] { exhaustive_max_dC(7, 3, Rational(1), tight); }));
    CHECK(throws_code(errc::bad_params, [] { exhaustive_max_dC(5, 0, Rational(1)); }));
    CHECK(throws_code(errc::bad_params, [] { exhaustive_max_dC(5, 2, Rational(-1)); }));
}

TEST_CASE("annealing is deterministic and bracketed by known bounds") {
    auto a = anneal_max_dC(7, 3, Rational(1), {}, 1);
    auto b = anneal_max_dC(7, 3, Rational(1), {}, 1);
    CHECK(a.best_value == b.best_value);
    CHECK(a.witness == b.witness);
    CHECK(a.nodes_explored == b.nodes_explored);
    CHECK(a.seed == 1);
    CHECK_FALSE(a.exhaustive);
    CHECK(is_intersecting(a.witness));
    CHECK(weighted_diversity(a.witness, Rational(1)) == a.best_value);

    // warm starts certify at least the exactly-two construction; the exhaustive
    // optimum 5 is an upper bound
    CHECK(a.best_value >= Rational(4));
    CHECK(a.best_value <= Rational(5));
}

TEST_CASE("annealing without warm starts still yields a certified family") {
    AnnealOptions opts;
    opts.warm_start = false;
    opts.iterations = 800;
    opts.chains = 1;
    auto res = anneal_max_dC(5, 2, Rational(1), opts, 7);
    CHECK(res.best_value >= Rational(0));
    CHECK(res.best_value <= Rational(1)); // exhaustive optimum
    CHECK(is_intersecting(res.witness));
    CHECK(res.seed == 7);
    CHECK(throws_code(errc::bad_params, [] { anneal_max_dC(5, 2, Rational(-1)); }));
}

TEST_CASE("maximal intersecting families on five points") {
    auto families = enumerate_maximal_intersecting(5, 2);
    CHECK(families.size() == 15); // 5 stars + 10 triangles
    int stars = 0, triangles = 0;
    auto universe = all_r_subsets(5, 2);
    for (const auto& f : families) {
        CHECK(is_intersecting(f));
        // maximality: every absent edge breaks the intersecting property
        for (const auto& e : universe) {
            if (f.contains(e)) continue;
            bool meets_all = true;
            for (const auto& g : f.edges())
                if (!g.intersects(e)) meets_all = false;
            CHECK_FALSE(meets_all);
        }
        if (f.size() == 4) ++stars;
        if (f.size() == 3) ++triangles;
    }
    CHECK(stars == 5);
    CHECK(triangles == 10);
}

TEST_CASE("maximal intersecting families on seven points") {
    auto families = enumerate_maximal_intersecting(7, 3);
    CHECK(families.size() == 6127);
    // deterministic order: strictly increasing under lexicographic edge comparison
    for (size_t i = 1; i < families.size(); ++i) {
        const auto &a = families[i - 1].edges(), &b = families[i].edges();
        CHECK(std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()));
    }
    CHECK(throws_code(errc::too_large, [] { enumerate_maximal_intersecting(9, 3); }));
}

TEST_CASE("span and size extremes of covering-number-three triple families") {
    auto rep7 = verify_folklore(7);
    CHECK(rep7.count == 3215);
    CHECK(rep7.max_edges == 10);
    CHECK(rep7.max_span == 7);
    CHECK(rep7.witnesses.size() == 7);

    auto rep8 = verify_folklore(8);
    CHECK(rep8.count == 13792);
    CHECK(rep8.max_edges == 10);
    CHECK(rep8.max_span == 7);
    // enlarging the ground set reveals no new extremal shapes
    CHECK(rep8.witnesses == rep7.witnesses);

    CHECK(throws_code(errc::bad_params, [] { verify_folklore(6); }));
    CHECK(throws_code(errc::bad_params, [] { verify_folklore(10); }));
}

TEST_CASE("pair designs on seven points") {
    auto designs = enumerate_designs(7, 3, 1);
    CHECK(designs.size() == 30);
    std::string fano_form = canonical_form(fano());
    for (const auto& d : designs) {
        CHECK(d.size() == 7);
        // independent recheck: every pair lies in exactly one block
        for (int a = 1; a <= 7; ++a)
            for (int b = a + 1; b <= 7; ++b) {
                int cover = 0;
                for (const auto& e : d.edges())
                    if (e.contains(a) && e.contains(b)) ++cover;
                CHECK(cover == 1);
            }
        CHECK(canonical_form(d) == fano_form);
    }
}

TEST_CASE("design enumeration obstructions and limits") {
    CHECK(enumerate_designs(6, 3, 1).empty());  // replication 5/2 not integral
    CHECK(enumerate_designs(8, 3, 1).empty());  // replication 7/2 not integral
    auto k4 = enumerate_designs(4, 2, 1);
    REQUIRE(k4.size() == 1); // every pair must itself be a block
    CHECK(k4[0].size() == 6);
    CHECK(throws_code(errc::too_large, [] { enumerate_designs(10, 3, 1); }));
    CHECK(throws_code(errc::too_large, [] { enumerate_designs(7, 5, 1); }));
    CHECK(throws_code(errc::bad_params, [] { enumerate_designs(7, 1, 1); }));
    CHECK(throws_code(errc::bad_params, [] { enumerate_designs(7, 3, 0); }));
}

TEST_CASE("catalog of seven-vertex covering-number-three families") {
    auto reps = catalog_tau3_families();
    REQUIRE(reps.size() == 6);
    std::vector<size_t> sizes;
    for (const auto& rep : reps) sizes.push_back(rep.size());
    CHECK(sizes == std::vector<size_t>{6, 7, 7, 8, 9, 10});

    std::string fano_form = canonical_form(fano());
    int fano_hits = 0;
    for (const auto& rep : reps) {
        CHECK(rep.n() == 7);
        CHECK(rep.r() == 3);
        CHECK(rep.spanned().count() == 7);
        CHECK(is_intersecting(rep));
        CHECK(tau(rep) == 3);
        CHECK(canonical_form(rep) == rep.to_text()); // stored canonically
        if (rep.to_text() == fano_form) ++fano_hits;
    }
    CHECK(fano_hits == 1);
    for (size_t i = 0; i < reps.size(); ++i)
        for (size_t j = i + 1; j < reps.size(); ++j) CHECK_FALSE(are_isomorphic(reps[i], reps[j]));
}
