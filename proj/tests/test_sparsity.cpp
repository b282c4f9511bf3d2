#include <chromix/solver.hpp>
#include <chromix/sparsity.hpp>
#include <chromix/targets.hpp>
#include <chromix/verify.hpp>

#include <doctest.h>

#include "test_util.hpp"

using namespace chromix;
using testutil::make_ug;
using std::vector;

TEST_CASE("mad on frozen instances")
{
    CHECK((mad(testutil::cycle_ug(5)) == Rational{ 2, 1 }));
    CHECK((mad(make_ug(3, { { 0, 1 }, { 1, 2 } })) == Rational{ 4, 3 }));
    CHECK((mad(make_ug(4, { { 0, 1 }, { 0, 2 }, { 0, 3 } })) == Rational{ 3, 2 }));
    CHECK((mad(make_ug(1, {})) == Rational{ 0, 1 }));
    CHECK((mad(make_ug(6, {})) == Rational{ 0, 1 }));

    auto k4 = make_ug(4, { { 0, 1 }, { 0, 2 }, { 0, 3 }, { 1, 2 }, { 1, 3 }, { 2, 3 } });
    CHECK((mad(k4) == Rational{ 3, 1 }));
    // a K4 with a pendant path is no denser than its core
    auto hairy = make_ug(6, { { 0, 1 }, { 0, 2 }, { 0, 3 }, { 1, 2 }, { 1, 3 }, { 2, 3 }, { 3, 4 }, { 4, 5 } });
    CHECK((mad(hairy) == Rational{ 3, 1 }));

    CHECK_THROWS_AS((void)mad(UndirectedGraph{ 0 }), Error);
}

TEST_CASE("mad equals subset enumeration on random graphs")
{
    testutil::Rng rng{ 71 };
    for (int trial = 0; trial < 60; ++trial) {
        int order = 2 + int(rng.below(10)); // up to 11
        auto g = testutil::random_ug(order, trial % 2 ? 0.3 : 0.6, rng);
        auto fast = mad(g);
        auto slow = testutil::exhaustive_mad(g);
        CHECK(fast == slow);
    }
}

TEST_CASE("mad dominates global density and is monotone under induced subgraphs")
{
    testutil::Rng rng{ 91 };
    for (int trial = 0; trial < 10; ++trial) {
        int order = 4 + int(rng.below(7));
        auto g = testutil::random_ug(order, 0.5, rng);
        auto value = mad(g);
        CHECK((Rational{ 2 * std::int64_t(g.edges().size()), order } <= value));

        vector<int> keep, place(order, -1);
        for (int v = 0; v < order; ++v)
            if (rng.chance(0.6)) {
                place[v] = int(keep.size());
                keep.push_back(v);
            }
        if (keep.empty()) {
            place[0] = 0;
            keep.push_back(0);
        }
        UndirectedGraph sub{ int(keep.size()) };
        for (auto & [u, v] : g.edges())
            if (place[u] >= 0 && place[v] >= 0)
                sub.add_edge(place[u], place[v]);
        CHECK((mad(sub) <= value));
    }
}

TEST_CASE("arboricity on frozen instances")
{
    CHECK((arboricity(make_ug(5, { { 0, 1 }, { 1, 2 }, { 2, 3 }, { 3, 4 } })).r == 1));
    CHECK(arboricity(testutil::cycle_ug(5)).r == 2);
    CHECK((arboricity(make_ug(4, { { 0, 1 }, { 0, 2 }, { 0, 3 }, { 1, 2 }, { 1, 3 }, { 2, 3 } })).r == 2));
    CHECK((arboricity(make_ug(2, {})).r == 0));

    // K5 needs three forests
    UndirectedGraph k5{ 5 };
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v)
            k5.add_edge(u, v);
    auto r = arboricity(k5);
    CHECK(r.r == 3);
    CHECK((forest_decomposition_valid(k5, r.decomposition)));

    // K33: 9 edges over 6 vertices fit into two forests
    UndirectedGraph k33{ 6 };
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v)
            k33.add_edge(u, v);
    CHECK(arboricity(k33).r == 2);
}

TEST_CASE("arboricity matches the nash-williams bound on random graphs")
{
    testutil::Rng rng{ 72 };
    for (int trial = 0; trial < 70; ++trial) {
        int order = trial < 60 ? 2 + int(rng.below(9)) : 11 + trial % 2; // up to 12
        auto g = testutil::random_ug(order, trial % 2 ? 0.35 : 0.7, rng);
        auto result = arboricity(g);
        CHECK(result.r == testutil::nw_arboricity(g));
        CHECK((forest_decomposition_valid(g, result.decomposition)));
    }
}

TEST_CASE("forest decomposition validation rejects broken assignments")
{
    auto c4 = testutil::cycle_ug(4);
    CHECK(! forest_decomposition_valid(c4, { 1, { 1, 1, 1, 1 } })); // the whole cycle is no tree
    CHECK((forest_decomposition_valid(c4, { 2, { 1, 1, 1, 2 } })));
    CHECK(! forest_decomposition_valid(c4, { 2, { 1, 1, 2 } }));       // wrong size
    CHECK(! forest_decomposition_valid(c4, { 2, { 1, 1, 3, 2 } }));    // index out of range
    CHECK((! forest_decomposition_valid(c4, { 2, { 1, 1, 0, 2 } })));
}

TEST_CASE("digit graphs spread forest indices, frozen 4-cycle example")
{
    auto c4 = testutil::cycle_ug(4);
    ForestDecomposition dec{ 2, { 1, 2, 1, 1 } }; // edges (0,1) (0,3) (1,2) (2,3)
    REQUIRE((forest_decomposition_valid(c4, dec)));
    vector<int> order{ 0, 1, 2, 3 };
    auto layers = digit_graphs(c4, dec, Signature{ 0, 2 }, order);
    REQUIRE(layers.size() == 2); // b = 1: G_0 and G_1

    // G_0: every edge type 1 as seen from the earlier endpoint
    CHECK((layers[0].view(0, 1) == 1));
    CHECK((layers[0].view(0, 3) == 1));
    CHECK((layers[0].view(1, 2) == 1));
    CHECK((layers[0].view(2, 3) == 1));

    // G_1: forest 1 keeps digit 1 (type 2), forest 2 wraps to digit 0 (type 1)
    CHECK((layers[1].view(0, 1) == 2));
    CHECK((layers[1].view(1, 2) == 2));
    CHECK((layers[1].view(2, 3) == 2));
    CHECK((layers[1].view(0, 3) == 1));

    // a single forest needs no digit layers at all
    auto path = make_ug(3, { { 0, 1 }, { 1, 2 } });
    auto only = digit_graphs(path, { 1, { 1, 1 } }, Signature{ 0, 2 }, { 0, 1, 2 });
    CHECK(only.size() == 1);
}

TEST_CASE("digit graph construction rejects bad inputs")
{
    auto c4 = testutil::cycle_ug(4);
    ForestDecomposition bad{ 1, { 1, 1, 1, 1 } };
    CHECK_THROWS_AS((void)digit_graphs(c4, bad, Signature{ 0, 2 }, { 0, 1, 2, 3 }), Error);
    ForestDecomposition good{ 2, { 1, 2, 1, 1 } };
    CHECK_THROWS_AS((void)digit_graphs(c4, good, Signature{ 0, 2 }, { 0, 1, 2 }), Error);
    CHECK_THROWS_AS((void)digit_graphs(c4, good, Signature{ 0, 2 }, { 0, 1, 2, 2 }), Error);
}

TEST_CASE("constructed acyclic colorings verify and respect the palette bound")
{
    for (auto sig : { Signature{ 0, 2 }, Signature{ 1, 1 } }) {
        testutil::Rng rng{ 73 };
        for (int trial = 0; trial < 6; ++trial) {
            int order = 6 + int(rng.below(10));
            auto g = testutil::random_ug(order, 0.3, rng);
            auto made = acyclic_coloring_construct(g, sig);
            CHECK((is_acyclic_coloring(g, made.coloring).ok));
            int worst = 1;
            for (int k : made.layer_k)
                worst = std::max(worst, k);
            long long cap = 1;
            for (int i = 0; i <= made.b; ++i)
                cap *= worst;
            CHECK(made.coloring.palette <= cap);
            for (auto & hom : made.layer_homs)
                CHECK(is_homomorphism(hom).ok);
        }
    }

    CHECK_THROWS_AS((void)acyclic_coloring_construct(UndirectedGraph{ 41 }, Signature{ 0, 2 }), Error);
}

TEST_CASE("arboricity-versus-chromatic bound on tiny graphs")
{
    CHECK((check_arb_bound(testutil::cycle_ug(4), Signature{ 0, 2 })));
    CHECK((check_arb_bound(testutil::cycle_ug(5), Signature{ 1, 0 })));
    CHECK((check_arb_bound(make_ug(4, { { 0, 1 }, { 0, 2 }, { 0, 3 }, { 1, 2 }, { 1, 3 }, { 2, 3 } }), Signature{ 0, 2 })));
    CHECK((check_arb_bound(make_ug(3, {}), Signature{ 0, 2 })));

    auto k5 = complete_augment(chromix::NmGraphBuilder{ Signature{ 0, 2 }, 5 }.build(), 1).underlying();
    CHECK((check_arb_bound(k5, Signature{ 1, 0 })));

    CHECK_THROWS_AS((void)check_arb_bound(testutil::cycle_ug(6), Signature{ 0, 2 }), Error);
    CHECK_THROWS_AS((void)check_arb_bound(testutil::cycle_ug(4), Signature{ 0, 3 }), Error);
}
