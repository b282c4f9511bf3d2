#pragma once

#include <chromix/core.hpp>

#include <cstdint>

namespace chromix {

// splitmix64; fixed algorithm so seeds reproduce across platforms
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) { }

    auto next() -> std::uint64_t
    {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in 0..n-1, rejection sampled
    auto below(std::uint64_t n) -> std::uint64_t
    {
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do
            x = next();
        while (x >= limit);
        return x % n;
    }

    auto chance(double p) -> bool
    {
        return double(next() >> 11) * 0x1.0p-53 < p;
    }

private:
    std::uint64_t state_;
};

struct GenSpec {
    std::uint64_t seed = 0;
    Signature sig{ 0, 2 };
    double delete_prob = 0.2; // partial 2-trees: chance a non-base edge is dropped
    int min_chain = 0;        // low-mad: internal vertices per chain, 0 = 2(2n+m)
};

// K_k with every edge replaced by a special 2-path: the middle vertex is a
// 1-neighbor of the lower original and a 2-neighbor of the higher.  Originals
// come first (0..k-1), then the middles in lexicographic pair order.
auto kclique_gadget(int k, const Signature & sig) -> NmGraph;

// Grow a 2-tree by attaching each new vertex to a uniformly chosen existing
// edge, drop each non-base edge with probability delete_prob, then give every
// surviving adjacency a uniform view type from its lower endpoint.
auto random_partial_2tree(int nv, const GenSpec & spec) -> NmGraph;

// A cubic-or-smaller skeleton whose edges are subdivided into chains of at
// least min_chain internal vertices, retried with longer chains until
// mad < 2 + 2/(4(2n+m)-1) holds (checked exactly).  Types uniform at random.
auto random_low_mad(int nv, const GenSpec & spec) -> NmGraph;

} // namespace chromix
