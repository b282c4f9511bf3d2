#pragma once

#include <chromix/core.hpp>
#include <chromix/rational.hpp>
#include <chromix/solver.hpp>
#include <chromix/verify.hpp>

#include <vector>

namespace chromix {

// Maximum average degree, exact: max over nonempty subgraphs of 2|E|/|V|,
// found as twice the maximum subgraph density via min-cut tests over the
// candidate fractions e/s.  Rejects graphs with no vertices.
auto mad(const UndirectedGraph & g) -> Rational;

struct ForestDecomposition {
    int r = 0;
    std::vector<int> assignment; // forest index 1..r per edge of g.edges()
};

// true iff assignment partitions the edges into r forests
auto forest_decomposition_valid(const UndirectedGraph & g, const ForestDecomposition & dec) -> bool;

struct ArboricityResult {
    int r = 0;
    ForestDecomposition decomposition;
};

// Minimum number of forests covering the edges, with an explicit
// decomposition, by incremental matroid-union augmentation.  The returned
// decomposition is validated before returning.
auto arboricity(const UndirectedGraph & g) -> ArboricityResult;

// Digit graphs G_0..G_b for a forest decomposition into r forests over a
// vertex order (a permutation of 0..|V|-1): b = ceil(log_{2n+m} r); G_0 gives
// every edge view type 1 from the endpoint earlier in the order; G_l gives an
// edge of forest q the view type digit_l(q) + 1, where digit_l(q) is the l-th
// most significant of the b base-(2n+m) digits of q (taken mod (2n+m)^b).
auto digit_graphs(const UndirectedGraph & g, const ForestDecomposition & dec,
    const Signature & sig, const std::vector<int> & order) -> std::vector<NmGraph>;

struct AcyclicConstruction {
    Coloring coloring;
    int b = 0;                 // highest digit-graph index
    std::vector<int> layer_k;  // chromatic number per digit graph
    std::vector<NmGraph> layers;
    std::vector<Homomorphism> layer_homs;
};

// Acyclic coloring through the digit-graph product: palette is the product
// of the layer chromatic numbers, at most (max layer k)^(b+1).  The result
// passes is_acyclic_coloring by construction; this is asserted.  Guard: at
// most 40 vertices.
auto acyclic_coloring_construct(const UndirectedGraph & g, const Signature & sig) -> AcyclicConstruction;

// For a graph on at most 5 vertices and a signature with 2n+m = 2: the
// worst chromatic number k over all (2n+m)^|E| type assignments satisfies
// arboricity <= ceil(log_{2n+m} k + k/2).
auto check_arb_bound(const UndirectedGraph & g, const Signature & sig) -> bool;

} // namespace chromix
