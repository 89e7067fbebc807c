#include <doctest.h>

#include "mf/connectivity.hpp"
#include "mf/preclusion.hpp"
#include "mf/zoo.hpp"
#include "testutil.hpp"

using namespace mf;

namespace {

// The three edges induced by the complement of a maximum independent set of
// the Petersen graph; deleting them leaves a bipartite graph whose heavy
// side holds all six X-endpoints.
EdgeSet petersen_bipartite_x() {
    Multigraph pet = zoo::petersen();
    VertexSet q{0, 2, 8, 9};
    return edges_within(pet, set_difference(pet.all_vertices(), q));
}

}  // namespace

TEST_CASE("exact maximum independent set") {
    CHECK(maximum_independent_set(zoo::cycle(6)).size() == 3);
    CHECK(maximum_independent_set(zoo::star(3)) == VertexSet{1, 2, 3});
    CHECK(maximum_independent_set(zoo::petersen()).size() == 4);
    CHECK_THROWS_AS(maximum_independent_set(zoo::petersen(), {}, 8), std::invalid_argument);

    SUBCASE("size agrees with the include/exclude oracle") {
        for (unsigned seed = 0; seed < 30; ++seed) {
            Multigraph g = testutil::random_gnp(11, 0.3, 2300 + seed);
            VertexSet best = maximum_independent_set(g);
            for (int u : best)
                for (int v : best)
                    if (u < v) CHECK(!g.adjacent(u, v));
            CHECK(static_cast<int>(best.size()) == testutil::oracle_max_independent(g));
        }
    }
    SUBCASE("ties prefer overlap, then the lexicographically smallest set") {
        // C6: three maximum sets {0,2,4} and {1,3,5} and rotations
        CHECK(maximum_independent_set(zoo::cycle(6)) == VertexSet{0, 2, 4});
        CHECK(maximum_independent_set(zoo::cycle(6), {1, 3}) == VertexSet{1, 3, 5});
    }
}

TEST_CASE("independent witness search") {
    CHECK(!independent_witness_exact(zoo::cycle(6), {}).has_value());
    auto w = independent_witness_exact(zoo::star(3), {});
    REQUIRE(w.has_value());
    CHECK(w->I == VertexSet{1, 2, 3});
    CHECK(w->complement_induced.empty());
    CHECK(independent_witness_is_valid(zoo::star(3), {}, *w));

    IndependentWitness bad{{0, 1}, {}};
    CHECK(!independent_witness_is_valid(zoo::star(3), {}, bad));
}

TEST_CASE("classify: the matching case") {
    Multigraph pet = zoo::petersen();
    for (int e = 0; e < 15; ++e)
        for (int f = e + 1; f < 15; ++f) {
            PreclusionVerdict v = classify(pet, {e, f}, 3, 0);
            REQUIRE(v.kind() == PreclusionVerdict::Kind::HasMatching);
            CHECK(is_perfect_matching(pet, v.matching()));
            CHECK(set_intersection(v.matching().edges, {e, f}).empty());
        }
}

TEST_CASE("classify: LM route") {
    Multigraph pet = zoo::petersen();
    EdgeSet x;
    for (const auto& a : pet.adj(0)) x.push_back(a.edge);
    PreclusionVerdict v = classify(pet, normalized_set(x), 3, 1);
    REQUIRE(v.kind() == PreclusionVerdict::Kind::LMIsolated);
    CHECK(v.lm_certificate().steps.empty());
    CHECK(v.lm_certificate().isolated == 0);
    CHECK(validate_lm_certificate(pet, v.lm_certificate(), normalized_set(x), 3).valid);
}

TEST_CASE("classify: large independent set route") {
    Multigraph pet = zoo::petersen();
    EdgeSet x = petersen_bipartite_x();
    REQUIRE(x.size() == 3);
    PreclusionVerdict v = classify(pet, x, 3, 1);
    REQUIRE(v.kind() == PreclusionVerdict::Kind::LargeIndependent);
    const IndependentWitness& w = v.witness();
    CHECK(w.I == VertexSet{1, 3, 4, 5, 6, 7});
    CHECK(w.complement_induced.empty());
    CHECK(independent_witness_is_valid(pet, x, w));
    CHECK(verify_moreover_bound(pet, x, w, 1));
}

TEST_CASE("classify: no certificate outside the hypotheses") {
    // C5 + C3: no perfect matching, no LM move, largest independent set is
    // only n/2 - 1
    std::vector<std::pair<int, int>> es{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                        {5, 6}, {6, 7}, {7, 5}};
    Multigraph g(8, es);
    PreclusionVerdict v = classify(g, {}, 3, 0);
    REQUIRE(v.kind() == PreclusionVerdict::Kind::NoCertificate);
    CHECK(v.barrier().deficiency == 2);
    CHECK(!v.warnings.empty());  // not 3-regular
}

TEST_CASE("classify warns about inconsistent parameters") {
    PreclusionVerdict v = classify(zoo::star(3), {}, 3, 0);
    REQUIRE(!v.warnings.empty());
    CHECK(v.warnings[0].find("regular") != std::string::npos);
}

TEST_CASE("edge sets are accepted in any order") {
    Multigraph pet = zoo::petersen();
    EdgeSet sorted = petersen_bipartite_x();
    EdgeSet shuffled(sorted.rbegin(), sorted.rend());
    CHECK(classify(pet, shuffled, 3, 1).kind() ==
          PreclusionVerdict::Kind::LargeIndependent);
    CHECK(check_theorem3(pet, shuffled, 3).kind ==
          Theorem3Verdict::Kind::BipartiteSamePartition);
}

TEST_CASE("moreover bound") {
    Multigraph pet = zoo::petersen();
    EdgeSet x = petersen_bipartite_x();
    auto w = independent_witness_exact(pet, x);
    REQUIRE(w.has_value());
    SUBCASE("k = 1 passes with zero induced edges") {
        CHECK(verify_moreover_bound(pet, x, *w, 1));
    }
    SUBCASE("k = 0 is impossible by construction") {
        CHECK(!verify_moreover_bound(pet, x, *w, 0));
    }
    SUBCASE("invalid witnesses are rejected") {
        IndependentWitness broken = *w;
        broken.I.push_back(broken.I.back() == 9 ? 8 : 9);
        broken.I = normalized_set(broken.I);
        CHECK_THROWS_AS(verify_moreover_bound(pet, x, broken, 1), std::invalid_argument);
    }
}

TEST_CASE("theorem-3 structural verdicts") {
    Multigraph pet = zoo::petersen();
    SUBCASE("edges at a common vertex") {
        EdgeSet x;
        for (const auto& a : pet.adj(3)) x.push_back(a.edge);
        Theorem3Verdict v = check_theorem3(pet, normalized_set(x), 3);
        CHECK(v.kind == Theorem3Verdict::Kind::CommonVertex);
        CHECK(v.common_vertex == 3);
        CHECK(v.precludes());
    }
    SUBCASE("a perfect matching of K33 leaves C6 with crossing edges") {
        Multigraph k33 = zoo::k33();
        EdgeSet x = normalized_set({*k33.edge_between(0, 3), *k33.edge_between(1, 4),
                                    *k33.edge_between(2, 5)});
        Theorem3Verdict v = check_theorem3(k33, x, 3);
        CHECK(v.kind == Theorem3Verdict::Kind::HasMatching);
        CHECK(perfect_matching_avoiding(k33, x).has_value());
    }
    SUBCASE("bipartite same-partition instance") {
        EdgeSet x = petersen_bipartite_x();
        Theorem3Verdict v = check_theorem3(pet, x, 3);
        REQUIRE(v.kind == Theorem3Verdict::Kind::BipartiteSamePartition);
        REQUIRE(v.partition.has_value());
        v.partition->validate(pet);
        // every X endpoint in side1, and g - X properly 2-coloured
        for (int e : x) {
            auto [u, vtx] = pet.endpoints(e);
            CHECK(v.partition->in_side1(u));
            CHECK(v.partition->in_side1(vtx));
        }
        for (int e = 0; e < pet.edge_count(); ++e) {
            if (set_contains(x, e)) continue;
            auto [u, vtx] = pet.endpoints(e);
            CHECK(v.partition->in_side1(u) != v.partition->in_side1(vtx));
        }
        CHECK(!perfect_matching_avoiding(pet, x).has_value());
    }
    SUBCASE("parameter warnings") {
        Theorem3Verdict v = check_theorem3(pet, {0, 1}, 3);
        CHECK(!v.warnings.empty());
    }
}

TEST_CASE("every classify verdict carries a certificate that validates") {
    std::mt19937 rng(31337);
    for (unsigned seed = 0; seed < 25; ++seed) {
        Multigraph g = testutil::random_cubic(10, 2800 + seed);
        EdgeSet x;
        int want = 2 + static_cast<int>(seed % 3);
        while (static_cast<int>(x.size()) < want)
            x = normalized_set(set_union(x, {static_cast<int>(rng() % g.edge_count())}));
        PreclusionVerdict v = classify(g, x, 3, static_cast<int>(x.size()) - 2);
        switch (v.kind()) {
            case PreclusionVerdict::Kind::HasMatching:
                CHECK(is_perfect_matching(g, v.matching()));
                CHECK(set_intersection(v.matching().edges, x).empty());
                break;
            case PreclusionVerdict::Kind::LMIsolated:
                CHECK(validate_lm_certificate(g, v.lm_certificate(), x, 3).valid);
                break;
            case PreclusionVerdict::Kind::LargeIndependent:
                CHECK(independent_witness_is_valid(g, x, v.witness()));
                break;
            case PreclusionVerdict::Kind::NoCertificate:
                CHECK(barrier_is_consistent(delete_edges(g, x).graph, v.barrier()));
                CHECK(v.barrier().deficiency >= 1);
                break;
        }
    }
}

TEST_CASE("under the k=0 hypotheses classify always finds a matching") {
    for (unsigned seed = 0; seed < 10; ++seed) {
        Multigraph g = testutil::random_cubic(10, 2400 + seed);
        if (edge_connectivity(g) < 2) continue;
        std::mt19937 rng(2500 + seed);
        for (int trial = 0; trial < 10; ++trial) {
            int e = static_cast<int>(rng() % g.edge_count());
            int f = static_cast<int>(rng() % g.edge_count());
            if (e == f) continue;
            PreclusionVerdict v = classify(g, normalized_set({e, f}), 3, 0);
            CHECK(v.kind() == PreclusionVerdict::Kind::HasMatching);
        }
    }
}
