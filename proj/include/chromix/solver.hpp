#pragma once

#include <chromix/core.hpp>
#include <chromix/verify.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace chromix {

enum class VarOrder { Mrv, Static };
enum class Propagation { None, ArcConsistency };

struct SearchConfig {
    VarOrder var_order = VarOrder::Mrv;
    Propagation propagation = Propagation::ArcConsistency;
    std::int64_t node_budget = 50'000'000;
    std::uint64_t seed = 0; // reserved; the search itself is deterministic
};

enum class SearchStatus { Found, None, BudgetExhausted };

struct HomSearchResult {
    SearchStatus status;
    std::optional<Homomorphism> hom;
    std::int64_t nodes = 0;
};

// Backtracking search for a homomorphism G -> H.  "None" is a definitive
// verdict: the search space was exhausted, or infeasibility was proved by
// propagation / a conflict clique larger than |V(H)|.  Running out of the
// node budget is the separate third outcome.
auto find_hom(const NmGraph & g, const NmGraph & h, const SearchConfig & config = {}) -> HomSearchResult;

// as above, with per-vertex candidate restrictions (empty outer vector means
// no restriction; an empty inner list leaves its vertex with no candidates)
auto find_hom(const NmGraph & g, const NmGraph & h, const SearchConfig & config,
    const std::vector<std::vector<int>> & domains) -> HomSearchResult;

struct QuotientCertificate {
    std::vector<int> partition; // class of each source vertex, 0..k-1
    NmGraph quotient;
    Homomorphism witness;
};

struct ChromaticResult {
    std::optional<int> k; // empty means the minimum exceeds max_k
    std::optional<QuotientCertificate> certificate;
};

// Exact chromatic number: the least k such that G maps onto a valid k-class
// quotient.  Branch and bound over canonical class assignments, seeded with
// a conflict-clique lower bound.  Guard: at most 40 vertices.
auto exact_chromatic(const NmGraph & g, int max_k, const SearchConfig & config = {}) -> ChromaticResult;

// Reference value by plain enumeration of all set partitions; at most 8
// vertices, no pruning beyond partition validity.
auto chromatic_oracle(const NmGraph & g) -> int;

struct EliminationResult {
    bool ok; // false: the graph has no degree <= 2 elimination (not a partial 2-tree)
    std::vector<int> order;                  // removal sequence
    std::vector<std::pair<int, int>> fill;   // edges added between degree-2 neighbors
    std::vector<std::vector<int>> attachment; // neighbors at removal time, per order entry
};

// Repeatedly removes the lowest-index vertex of current degree <= 2, adding a
// fill edge between the two neighbors of a degree-2 vertex when missing.
auto elimination_order(const UndirectedGraph & g) -> EliminationResult;

// Linear greedy embedding of a partial 2-tree source into a P_{2,1} target:
// complete the source with fill edges (view type 1 from the lower index),
// then map along the reverse elimination order, always taking the
// lowest-index candidate.  The returned homomorphism is for G itself.
auto two_tree_hom(const NmGraph & g, const NmGraph & t) -> Homomorphism;

struct CircularResult {
    SearchStatus status;
    std::vector<int> map; // vertex of C_{2g+1} per source vertex, when found
};

// Homomorphism of an undirected graph to the odd cycle C_{2g+1}, decided by
// wrapping both sides as (0, max(g,2))-graphs with all edges of type 1.
auto circular_hom(const UndirectedGraph & g, int gg, const SearchConfig & config = {}) -> CircularResult;

} // namespace chromix
