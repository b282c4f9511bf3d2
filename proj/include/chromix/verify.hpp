#pragma once

#include <chromix/core.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace chromix {

struct Homomorphism {
    NmGraph source;
    NmGraph target;
    std::vector<int> map; // one target vertex per source vertex
};

struct HomViolation {
    int u, v, view; // source adjacency, v in N^view(u)
    int fu, fv;     // their images
};

struct HomCheck {
    bool ok;
    std::optional<HomViolation> violation;
};

// Checks signatures match and every adjacency maps onto an adjacency of the
// same view type.  A map of the wrong length or with out-of-range entries is
// a domain error, not a false verdict.
auto is_homomorphism(const Homomorphism & hom) -> HomCheck;

struct P21Witness {
    int u, v;         // an adjacent pair
    int alpha, beta;  // N^alpha(u) and N^beta(v) miss each other
};

struct P21Result {
    bool ok;
    std::optional<P21Witness> witness;
};

// Property P_{2,1}: every adjacent pair sees a common (alpha, beta)-neighbor
// for all type pairs.
auto has_p21(const NmGraph & t) -> P21Result;

struct ExpansionWitness {
    std::vector<int> subset;
    int alpha;
};

struct ExpansionResult {
    bool ok;
    std::optional<ExpansionWitness> witness;
};

// |S| < |N^alpha(S)| for every nonempty proper subset S and every alpha.
// Enumerates subsets by cardinality, then numerically; refuses > 24 vertices.
// The reported witness is the first failure in that enumeration order, for
// any worker count.
auto expansion_ok(const NmGraph & t, int workers = 1) -> ExpansionResult;

struct RegularityWitness {
    int vertex, alpha, count;
};

struct RegularityResult {
    bool ok;
    std::optional<RegularityWitness> witness;
};

// every vertex has exactly d alpha-neighbors for every alpha
auto regularity_check(const NmGraph & t, int d) -> RegularityResult;

struct ForbiddenWitness {
    int u, y;
    int alpha, gamma;
    int x, z;
};

struct ForbiddenResult {
    bool ok;
    std::optional<ForbiddenWitness> witness;
};

// true iff no distinct x, y, z in N^alpha(u) with x, z in N^gamma(y)
auto forbidden_config_free(const NmGraph & t) -> ForbiddenResult;

// Pairs that can never share an image: adjacent pairs plus special-2-path
// endpoints (a common neighbor seen under two different types).
class ConflictRelation {
public:
    ConflictRelation(int order, std::vector<std::pair<int, int>> pairs);

    auto order() const noexcept -> int { return order_; }
    auto in_conflict(int u, int v) const -> bool;
    // u < v, sorted lexicographically
    auto pairs() const noexcept -> const std::vector<std::pair<int, int>> & { return pairs_; }

private:
    int order_;
    std::vector<std::pair<int, int>> pairs_;
    std::vector<std::uint8_t> mat_;
};

auto conflict_relation(const NmGraph & g) -> ConflictRelation;

struct Coloring {
    std::vector<int> map; // colors 0..palette-1
    int palette = 0;
};

struct AcyclicWitness {
    bool improper_edge;  // true: edge u, v shares a color
    int u = 0, v = 0;    // offending edge (improper case)
    int color_a = 0, color_b = 0; // color class pair with a cycle
    std::vector<int> cycle;       // vertices of one bichromatic cycle
};

struct AcyclicCheck {
    bool ok;
    std::optional<AcyclicWitness> witness;
};

// proper + every union of two color classes induces a forest
auto is_acyclic_coloring(const UndirectedGraph & g, const Coloring & c) -> AcyclicCheck;

} // namespace chromix
