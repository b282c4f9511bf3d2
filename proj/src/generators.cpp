#include <chromix/generators.hpp>
#include <chromix/rational.hpp>
#include <chromix/sparsity.hpp>

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

using std::pair;
using std::to_string;
using std::vector;

namespace chromix {

auto kclique_gadget(int k, const Signature & sig) -> NmGraph
{
    sig.validate();
    if (k < 2)
        throw Error{ ErrorKind::Domain, "kclique_gadget needs k >= 2" };
    if (sig.p() < 2)
        throw Error{ ErrorKind::Domain, "kclique_gadget needs 2n+m >= 2" };

    NmGraphBuilder builder{ sig, k + k * (k - 1) / 2 };
    int mid = k;
    for (int u = 0; u < k; ++u)
        for (int w = u + 1; w < k; ++w) {
            builder.set_adjacency(u, mid, 1);
            builder.set_adjacency(w, mid, 2);
            ++mid;
        }
    return builder.build();
}

auto random_partial_2tree(int nv, const GenSpec & spec) -> NmGraph
{
    spec.sig.validate();
    if (nv < 2)
        throw Error{ ErrorKind::Domain, "random_partial_2tree needs nv >= 2" };
    if (spec.delete_prob < 0.0 || spec.delete_prob > 1.0)
        throw Error{ ErrorKind::Domain, "delete_prob must lie in [0, 1]" };

    Rng rng{ spec.seed };
    vector<pair<int, int>> edges{ { 0, 1 } };
    for (int v = 2; v < nv; ++v) {
        auto [a, b] = edges[rng.below(edges.size())];
        edges.emplace_back(a, v);
        edges.emplace_back(b, v);
    }

    // base edge {0, 1} always survives
    vector<pair<int, int>> kept;
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (i == 0 || ! rng.chance(spec.delete_prob))
            kept.push_back(edges[i]);

    std::sort(kept.begin(), kept.end());
    NmGraphBuilder builder{ spec.sig, nv };
    int p = spec.sig.p();
    for (auto [a, b] : kept)
        builder.set_adjacency(std::min(a, b), std::max(a, b), 1 + int(rng.below(p)));
    return builder.build();
}

auto random_low_mad(int nv, const GenSpec & spec) -> NmGraph
{
    spec.sig.validate();
    if (nv < 3)
        throw Error{ ErrorKind::Domain, "random_low_mad needs nv >= 3" };

    int p = spec.sig.p();
    int chain = spec.min_chain > 0 ? spec.min_chain : 2 * p;
    Rng rng{ spec.seed };
    Rational threshold{ 8 * p, 4 * p - 1 }; // 2 + 2/(4p-1)

    while (true) {
        // skeleton: a cycle plus chords while degrees stay <= 3; small inputs
        // fall back to a doubled edge (one long cycle after subdivision)
        int budget = std::max(2, nv / (chain + 2));
        int s = std::max(2, (2 * budget) / 3);
        vector<pair<int, int>> skeleton;
        vector<int> degree(s, 0);
        if (s < 3) {
            s = 2;
            degree.assign(2, 2);
            skeleton = { { 0, 1 }, { 0, 1 } };
        }
        else {
            for (int i = 0; i < s; ++i) {
                skeleton.emplace_back(i, (i + 1) % s);
                ++degree[i];
                ++degree[(i + 1) % s];
            }
            int attempts = 4 * s;
            while (int(skeleton.size()) < budget && attempts-- > 0) {
                int a = int(rng.below(s)), b = int(rng.below(s));
                if (a == b || degree[a] >= 3 || degree[b] >= 3)
                    continue;
                skeleton.emplace_back(a, b);
                ++degree[a];
                ++degree[b];
            }
        }

        // subdivide every skeleton edge; spread the leftover vertex budget
        vector<int> internal(skeleton.size(), chain);
        int used = s + chain * int(skeleton.size());
        while (used < nv) {
            ++internal[rng.below(skeleton.size())];
            ++used;
        }

        int total = s;
        for (int count : internal)
            total += count;
        NmGraphBuilder builder{ spec.sig, total };
        int fresh = s;
        for (std::size_t e = 0; e < skeleton.size(); ++e) {
            int prev = skeleton[e].first;
            for (int i = 0; i < internal[e]; ++i) {
                int v = fresh++;
                builder.set_adjacency(std::min(prev, v), std::max(prev, v), 1 + int(rng.below(p)));
                prev = v;
            }
            builder.set_adjacency(std::min(prev, skeleton[e].second), std::max(prev, skeleton[e].second), 1 + int(rng.below(p)));
        }

        auto g = builder.build();
        if (mad(g.underlying()) < threshold)
            return g;
        chain += 2;
    }
}

} // namespace chromix
