#include <chromix/targets.hpp>
#include <chromix/verify.hpp>

#include <doctest.h>

#include "test_util.hpp"

#include <set>

using namespace chromix;
using std::vector;

TEST_CASE("hamiltonian decomposition cycle sequences, frozen")
{
    CHECK((walecki_cycle(2, 0).sequence == vector<int>{ 4, 0, 1, 3, 2 }));
    CHECK((walecki_cycle(2, 1).sequence == vector<int>{ 4, 1, 2, 0, 3 }));
    CHECK((walecki_cycle(3, 0).sequence == vector<int>{ 6, 0, 1, 5, 2, 4, 3 }));
    CHECK((walecki_cycle(3, 1).sequence == vector<int>{ 6, 1, 2, 0, 3, 5, 4 }));
    CHECK((walecki_cycle(5, 2).sequence == vector<int>{ 10, 2, 3, 1, 4, 0, 5, 9, 6, 8, 7 }));
}

TEST_CASE("cycles decompose the complete graph edge-wise")
{
    for (int p = 2; p <= 8; ++p) {
        std::set<std::pair<int, int>> seen;
        for (int j = 0; j < p; ++j) {
            auto cycle = walecki_cycle(p, j);
            REQUIRE(cycle.sequence.size() == std::size_t(2 * p + 1));
            // a hamiltonian cycle: all vertices once
            std::set<int> vertices(cycle.sequence.begin(), cycle.sequence.end());
            CHECK(int(vertices.size()) == 2 * p + 1);
            for (int i = 0; i <= 2 * p; ++i) {
                int u = cycle.sequence[i];
                int v = cycle.sequence[(i + 1) % (2 * p + 1)];
                auto inserted = seen.insert(std::minmax(u, v)).second;
                CHECK(inserted);
            }
        }
        CHECK(int(seen.size()) == p * (2 * p + 1)); // all of K_{2p+1}
    }
}

TEST_CASE("target on 2(2n+m)+1 vertices, frozen (0,2) instance")
{
    auto t = walecki_target(Signature{ 0, 2 });
    CHECK(t.order() == 5);
    CHECK(t.label(4) == "inf");
    CHECK(t.label(0) == "0");
    CHECK(t.edges() == vector<TypedEdge>{
        { 0, 1, 1 }, { 0, 2, 2 }, { 0, 3, 2 }, { 0, 4, 1 }, { 1, 2, 2 },
        { 1, 3, 1 }, { 1, 4, 2 }, { 2, 3, 1 }, { 2, 4, 1 }, { 3, 4, 2 } });
    CHECK(t.arcs().empty());
}

TEST_CASE("arc types orient two cycles each, frozen (1,0) instance")
{
    auto t = walecki_target(Signature{ 1, 0 });
    CHECK(t.order() == 5);
    // C_0: inf 0 1 3 2, C_1: inf 1 2 0 3, both oriented along the sequence
    CHECK(t.arcs() == vector<Arc>{
        { 0, 1, 2 }, { 0, 3, 2 }, { 1, 2, 2 }, { 1, 3, 2 }, { 2, 0, 2 },
        { 2, 4, 2 }, { 3, 2, 2 }, { 3, 4, 2 }, { 4, 0, 2 }, { 4, 1, 2 } });
    CHECK(t.edges().empty());
}

TEST_CASE("every signature yields a 2-regular-per-type target")
{
    for (auto sig : { Signature{ 1, 0 }, Signature{ 0, 2 }, Signature{ 1, 1 },
             Signature{ 0, 3 }, Signature{ 2, 0 }, Signature{ 1, 2 }, Signature{ 2, 1 } }) {
        auto t = walecki_target(sig);
        CHECK(t.order() == 2 * sig.p() + 1);
        auto reg = regularity_check(t, 2);
        CHECK(reg.ok);
        // every pair adjacent: the cycles cover the complete graph
        for (int u = 0; u < t.order(); ++u)
            for (int v = u + 1; v < t.order(); ++v)
                CHECK((t.adjacent(u, v)));
    }
}

TEST_CASE("fifteen-vertex (0,3) target, frozen adjacencies")
{
    auto t = t03();
    CHECK((t.signature() == Signature{ 0, 3 }));
    CHECK(t.order() == 15);
    CHECK(t.label(0) == "0,0");
    CHECK(t.label(14) == "4,2");
    CHECK(t.size() == 90); // no adjacency within a row, all across: 15 * 12 / 2

    auto at = [](int i, int j) { return 3 * i + j; };
    CHECK(t.view(at(0, 0), at(0, 1)) == 0); // same row: never adjacent
    CHECK(t.view(at(0, 0), at(1, 0)) == 1); // rows 1 apart: 1 + j + j' = 1
    CHECK((t.view(at(0, 0), at(1, 1)) == 2));
    CHECK((t.view(at(0, 0), at(1, 2)) == 3));
    CHECK(t.view(at(0, 0), at(2, 0)) == 2); // rows 2 apart: 2 + j + j' = 2
    CHECK((t.view(at(0, 0), at(2, 1)) == 3));
    CHECK(t.view(at(0, 0), at(2, 2)) == 1); // 2 + 0 + 2 = 4, reduced to 1
    CHECK(t.view(at(4, 2), at(0, 1)) == 1); // rows 1 apart going 4 -> 0: 1 + 2 + 1 = 4 -> 1

    CHECK((regularity_check(t, 4).ok));
}

TEST_CASE("twenty-one-vertex (1,1) target, frozen adjacencies")
{
    auto t = t11();
    CHECK((t.signature() == Signature{ 1, 1 }));
    CHECK(t.order() == 21);
    CHECK(t.label(0) == "0,0");

    auto at = [](int i, int j) { return 3 * i + (j % 3); };
    // same row, any layers: never adjacent (complete multipartite K_{7x3})
    CHECK((t.view(at(0, 0), at(0, 1)) == 0));
    CHECK((t.view(at(0, 0), at(0, 2)) == 0));
    // same layer: a tournament, arcs along square differences 1, 2, 4 mod 7
    CHECK(t.view(at(0, 0), at(1, 0)) == 2); // arc (0,0) -> (1,0)
    CHECK((t.view(at(1, 0), at(0, 0)) == 1));
    CHECK(t.view(at(0, 0), at(3, 0)) == 1); // 3 is a non-square, 4 is: arc comes back in
    CHECK(t.view(at(0, 0), at(5, 0)) == 1); // likewise via 2
    CHECK((t.view(at(0, 1), at(2, 1)) == 2));
    // next layer: square differences give edges, the rest arcs back in
    CHECK((t.view(at(0, 0), at(1, 1)) == 3));
    CHECK((t.view(at(0, 0), at(2, 1)) == 3));
    CHECK((t.view(at(0, 0), at(4, 1)) == 3));
    CHECK((t.view(at(0, 0), at(3, 1)) == 1));
    CHECK(t.view(at(0, 2), at(1, 0)) == 3); // layers wrap: j = 2 to j' = 0 is "next"

    // common-neighbor witnesses
    CHECK(t.view(at(0, 0), at(6, 0)) == 1); // (6,0) in N1((0,0)) and N1((1,0))
    CHECK((t.view(at(1, 0), at(6, 0)) == 1));
    CHECK(t.view(at(0, 0), at(5, 2)) == 3); // (5,2) in N3((0,0)) and N3((1,1))
    CHECK((t.view(at(1, 1), at(5, 2)) == 3));
    CHECK(t.view(at(1, 0), at(2, 0)) == 2); // (2,0) in N2((1,0)) and N2((0,1))
    CHECK((t.view(at(0, 1), at(2, 0)) == 2));

    CHECK((regularity_check(t, 6).ok));
    for (int v = 0; v < 21; ++v)
        CHECK(t.degree(v) == 18);
}

TEST_CASE("complete_augment fills the non-adjacent pairs")
{
    NmGraphBuilder builder{ Signature{ 0, 2 }, 3 };
    builder.set_adjacency(0, 1, 1);
    builder.set_label(0, "x");
    auto h = builder.build();
    auto full = complete_augment(h, 2);
    CHECK(full.view(0, 1) == 1); // untouched
    CHECK((full.view(0, 2) == 2));
    CHECK((full.view(1, 2) == 2));
    CHECK(full.label(0) == "x");
    CHECK_THROWS_AS(complete_augment(h, 3), Error);

    // arc fill: view type 1 means the filled pair points back at the lower index
    NmGraphBuilder arcs{ Signature{ 1, 0 }, 3 };
    arcs.set_adjacency(0, 1, 2);
    auto filled = complete_augment(arcs.build(), 1);
    CHECK((filled.view(0, 2) == 1));
    CHECK((filled.view(2, 0) == 2));
}
