#pragma once

// independent brute-force oracles and small builders shared by the suites

#include <chromix/core.hpp>
#include <chromix/generators.hpp>
#include <chromix/rational.hpp>

#include <algorithm>
#include <bit>
#include <climits>
#include <numeric>
#include <queue>
#include <vector>

namespace testutil {

using chromix::NmGraph;
using chromix::NmGraphBuilder;
using chromix::Rational;
using chromix::Rng;
using chromix::Signature;
using chromix::UndirectedGraph;
using std::vector;

// max over nonempty subsets of 2 e(S) / |S|, by direct enumeration
inline auto exhaustive_mad(const UndirectedGraph & g) -> Rational
{
    int n = g.order();
    Rational best{ 0, 1 };
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
        int s = std::popcount(mask);
        long long e = 0;
        for (auto & [u, v] : g.edges())
            if ((mask >> u & 1) && (mask >> v & 1))
                ++e;
        Rational density{ 2 * e, s };
        if (best < density)
            best = density;
    }
    return best;
}

// Nash-Williams formula: max over subsets with at least 2 vertices of
// ceil(e(S) / (|S| - 1)); 0 for edgeless graphs
inline auto nw_arboricity(const UndirectedGraph & g) -> int
{
    int n = g.order();
    int best = 0;
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << n); ++mask) {
        int s = std::popcount(mask);
        if (s < 2)
            continue;
        long long e = 0;
        for (auto & [u, v] : g.edges())
            if ((mask >> u & 1) && (mask >> v & 1))
                ++e;
        int need = int((e + s - 2) / (s - 1));
        best = std::max(best, need);
    }
    return best;
}

inline auto girth(const UndirectedGraph & g) -> int
{
    int best = INT_MAX;
    for (int s = 0; s < g.order(); ++s) {
        vector<int> dist(g.order(), -1), parent(g.order(), -1);
        std::queue<int> queue;
        dist[s] = 0;
        queue.push(s);
        while (! queue.empty()) {
            int u = queue.front();
            queue.pop();
            for (int v : g.neighbors(u)) {
                if (dist[v] == -1) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push(v);
                }
                else if (v != parent[u])
                    best = std::min(best, dist[u] + dist[v] + 1);
            }
        }
    }
    return best;
}

// directive-style shorthand: {u, v, t} rows, t interpreted per the storage rule
struct Adj {
    int u, v, t;
};

inline auto make_nm(Signature sig, int order, std::initializer_list<Adj> rows) -> NmGraph
{
    NmGraphBuilder builder{ sig, order };
    for (auto & row : rows)
        builder.set_adjacency(row.u, row.v, row.t);
    return builder.build();
}

inline auto make_ug(int order, std::initializer_list<std::pair<int, int>> rows) -> UndirectedGraph
{
    UndirectedGraph g{ order };
    for (auto & [u, v] : rows)
        g.add_edge(u, v);
    return g;
}

inline auto cycle_ug(int n) -> UndirectedGraph
{
    UndirectedGraph g{ n };
    for (int i = 0; i < n; ++i)
        g.add_edge(i, (i + 1) % n);
    return g;
}

// Erdos-Renyi-ish random instance for oracle cross-checks
inline auto random_ug(int order, double edge_prob, Rng & rng) -> UndirectedGraph
{
    UndirectedGraph g{ order };
    for (int u = 0; u < order; ++u)
        for (int v = u + 1; v < order; ++v)
            if (rng.chance(edge_prob))
                g.add_edge(u, v);
    return g;
}

inline auto random_nm(Signature sig, int order, double edge_prob, Rng & rng) -> NmGraph
{
    NmGraphBuilder builder{ sig, order };
    for (int u = 0; u < order; ++u)
        for (int v = u + 1; v < order; ++v)
            if (rng.chance(edge_prob))
                builder.set_adjacency(u, v, 1 + int(rng.below(std::uint64_t(sig.p()))));
    return builder.build();
}

} // namespace testutil
