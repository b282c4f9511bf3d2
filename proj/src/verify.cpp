#include <chromix/verify.hpp>

#include <algorithm>
#include <atomic>
#include <bit>
#include <map>
#include <string>
#include <thread>

using std::pair;
using std::size_t;
using std::to_string;
using std::uint32_t;
using std::uint64_t;
using std::vector;

namespace chromix {

namespace {

// per-(vertex, type) neighborhood bitmasks
struct NeighborMasks {
    int words;
    vector<uint64_t> bits; // [(u * p + (alpha-1)) * words + w]

    NeighborMasks(const NmGraph & g) :
        words((g.order() + 63) / 64),
        bits(size_t(g.order()) * g.signature().p() * words, 0)
    {
        int p = g.signature().p();
        for (int u = 0; u < g.order(); ++u)
            for (auto & [v, t] : g.neighbors(u))
                bits[(size_t(u) * p + t - 1) * words + v / 64] |= uint64_t(1) << (v % 64);
    }

    auto row(int u, int alpha, int p) const -> const uint64_t *
    {
        return bits.data() + (size_t(u) * p + alpha - 1) * words;
    }
};

auto rows_intersect(const uint64_t * a, const uint64_t * b, int words) -> bool
{
    for (int w = 0; w < words; ++w)
        if (a[w] & b[w])
            return true;
    return false;
}

} // namespace

auto is_homomorphism(const Homomorphism & hom) -> HomCheck
{
    const auto & g = hom.source;
    const auto & h = hom.target;
    if (g.signature() != h.signature())
        throw Error{ ErrorKind::Domain, "source and target signatures differ" };
    if (int(hom.map.size()) != g.order())
        throw Error{ ErrorKind::Domain, "map covers " + to_string(hom.map.size()) + " of " + to_string(g.order()) + " vertices" };
    for (int u = 0; u < g.order(); ++u)
        if (hom.map[u] < 0 || hom.map[u] >= h.order())
            throw Error{ ErrorKind::Domain, "image of vertex " + to_string(u) + " out of range" };

    for (int u = 0; u < g.order(); ++u)
        for (auto & [v, t] : g.neighbors(u)) {
            if (h.view(hom.map[u], hom.map[v]) != t)
                return { false, HomViolation{ u, v, t, hom.map[u], hom.map[v] } };
        }
    return { true, std::nullopt };
}

auto has_p21(const NmGraph & t) -> P21Result
{
    int p = t.signature().p();
    NeighborMasks masks{ t };
    for (int u = 0; u < t.order(); ++u)
        for (auto & [v, view] : t.neighbors(u)) {
            if (v < u)
                continue;
            (void)view;
            for (int alpha = 1; alpha <= p; ++alpha)
                for (int beta = 1; beta <= p; ++beta)
                    if (! rows_intersect(masks.row(u, alpha, p), masks.row(v, beta, p), masks.words))
                        return { false, P21Witness{ u, v, alpha, beta } };
        }
    return { true, std::nullopt };
}

namespace {

struct ExpansionFail {
    int card = 0;
    uint32_t mask = 0;
    int alpha = 0;

    auto key() const -> uint64_t { return (uint64_t(card) << 40) | (uint64_t(mask) << 8) | uint64_t(alpha); }
};

// first failing alpha for this subset, or 0
auto subset_fails(const vector<uint32_t> & nb, int n, int p, uint32_t mask) -> int
{
    int card = std::popcount(mask);
    for (int alpha = 1; alpha <= p; ++alpha) {
        uint32_t un = 0;
        for (uint32_t rest = mask; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            un |= nb[size_t(v) * p + alpha - 1];
        }
        (void)n;
        if (std::popcount(un) <= card)
            return alpha;
    }
    return 0;
}

auto witness_from(const ExpansionFail & fail) -> ExpansionWitness
{
    ExpansionWitness w{ {}, fail.alpha };
    for (int v = 0; v < 32; ++v)
        if (fail.mask & (uint32_t(1) << v))
            w.subset.push_back(v);
    return w;
}

} // namespace

auto expansion_ok(const NmGraph & t, int workers) -> ExpansionResult
{
    int n = t.order(), p = t.signature().p();
    if (n > 24)
        throw Error{ ErrorKind::SizeGuard, "expansion_ok supports at most 24 vertices, got " + to_string(n) };
    if (workers < 1)
        throw Error{ ErrorKind::Domain, "worker count must be positive" };
    if (n < 2)
        return { true, std::nullopt };

    vector<uint32_t> nb(size_t(n) * p, 0); // nb[u][alpha-1] = N^alpha(u)
    for (int u = 0; u < n; ++u)
        for (auto & [v, view] : t.neighbors(u))
            nb[size_t(u) * p + view - 1] |= uint32_t(1) << v;

    const uint32_t top = (uint32_t(1) << n) - 1; // skip S = V

    if (workers == 1) {
        // cardinality-ascending Gosper walk, stop at the first failure
        for (int card = 1; card < n; ++card) {
            uint32_t mask = (uint32_t(1) << card) - 1;
            while (mask < top) {
                if (int alpha = subset_fails(nb, n, p, mask); alpha != 0)
                    return { false, witness_from(ExpansionFail{ card, mask, alpha }) };
                uint32_t c = mask & -mask, r = mask + c;
                mask = (((r ^ mask) >> 2) / c) | r;
            }
        }
        return { true, std::nullopt };
    }

    std::atomic<int> best_card{ n + 1 };
    vector<ExpansionFail> found(workers);
    vector<std::thread> pool;
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            ExpansionFail local{ n + 1, 0, 0 };
            for (uint32_t mask = uint32_t(w) + 1; mask < top; mask += uint32_t(workers)) {
                int card = std::popcount(mask);
                if (card > best_card.load(std::memory_order_relaxed) || card > local.card)
                    continue;
                if (int alpha = subset_fails(nb, n, p, mask); alpha != 0) {
                    ExpansionFail cand{ card, mask, alpha };
                    if (local.alpha == 0 || cand.key() < local.key())
                        local = cand;
                    int seen = best_card.load(std::memory_order_relaxed);
                    while (card < seen && ! best_card.compare_exchange_weak(seen, card)) { }
                }
            }
            found[w] = local;
        });
    for (auto & th : pool)
        th.join();

    const ExpansionFail * best = nullptr;
    for (auto & f : found)
        if (f.alpha != 0 && (best == nullptr || f.key() < best->key()))
            best = &f;
    if (best == nullptr)
        return { true, std::nullopt };
    return { false, witness_from(*best) };
}

auto regularity_check(const NmGraph & t, int d) -> RegularityResult
{
    int p = t.signature().p();
    for (int u = 0; u < t.order(); ++u) {
        vector<int> count(p + 1, 0);
        for (auto & [v, view] : t.neighbors(u)) {
            (void)v;
            ++count[view];
        }
        for (int alpha = 1; alpha <= p; ++alpha)
            if (count[alpha] != d)
                return { false, RegularityWitness{ u, alpha, count[alpha] } };
    }
    return { true, std::nullopt };
}

auto forbidden_config_free(const NmGraph & t) -> ForbiddenResult
{
    int p = t.signature().p();
    for (int u = 0; u < t.order(); ++u)
        for (int alpha = 1; alpha <= p; ++alpha) {
            auto na = t.neighbors(u, alpha);
            if (na.size() < 3)
                continue;
            for (int y : na)
                for (int gamma = 1; gamma <= p; ++gamma) {
                    int x = -1, z = -1;
                    for (int cand : na) {
                        if (cand == y || t.view(y, cand) != gamma)
                            continue;
                        if (x == -1)
                            x = cand;
                        else {
                            z = cand;
                            break;
                        }
                    }
                    if (z != -1)
                        return { false, ForbiddenWitness{ u, y, alpha, gamma, x, z } };
                }
        }
    return { true, std::nullopt };
}

ConflictRelation::ConflictRelation(int order, vector<pair<int, int>> pairs) :
    order_(order),
    pairs_(std::move(pairs)),
    mat_(size_t(order) * order, 0)
{
    for (auto & [u, v] : pairs_)
        if (u > v)
            std::swap(u, v);
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
    for (auto & [u, v] : pairs_) {
        mat_[size_t(u) * order_ + v] = 1;
        mat_[size_t(v) * order_ + u] = 1;
    }
}

auto ConflictRelation::in_conflict(int u, int v) const -> bool
{
    if (u < 0 || u >= order_ || v < 0 || v >= order_)
        throw Error{ ErrorKind::VertexRange, "vertex out of range" };
    return mat_[size_t(u) * order_ + v] != 0;
}

auto conflict_relation(const NmGraph & g) -> ConflictRelation
{
    vector<pair<int, int>> pairs;
    for (int u = 0; u < g.order(); ++u)
        for (auto & [v, view] : g.neighbors(u)) {
            (void)view;
            if (u < v)
                pairs.emplace_back(u, v);
        }
    for (int mid = 0; mid < g.order(); ++mid) {
        const auto & around = g.neighbors(mid);
        for (size_t a = 0; a < around.size(); ++a)
            for (size_t b = a + 1; b < around.size(); ++b) {
                int u = around[a].first, w = around[b].first;
                if (g.view(u, mid) != g.view(w, mid))
                    pairs.emplace_back(u, w);
            }
    }
    return ConflictRelation{ g.order(), std::move(pairs) };
}

namespace {

struct Dsu {
    vector<int> up;

    explicit Dsu(int n) : up(n) { for (int i = 0; i < n; ++i) up[i] = i; }

    auto find(int x) -> int { return up[x] == x ? x : up[x] = find(up[x]); }

    auto unite(int a, int b) -> bool
    {
        a = find(a);
        b = find(b);
        if (a == b)
            return false;
        up[a] = b;
        return true;
    }
};

} // namespace

auto is_acyclic_coloring(const UndirectedGraph & g, const Coloring & c) -> AcyclicCheck
{
    if (int(c.map.size()) != g.order())
        throw Error{ ErrorKind::Domain, "coloring covers " + to_string(c.map.size()) + " of " + to_string(g.order()) + " vertices" };
    for (int v = 0; v < g.order(); ++v)
        if (c.map[v] < 0 || c.map[v] >= c.palette)
            throw Error{ ErrorKind::Domain, "color of vertex " + to_string(v) + " out of palette" };

    for (auto & [u, v] : g.edges())
        if (c.map[u] == c.map[v]) {
            AcyclicWitness w;
            w.improper_edge = true;
            w.u = u;
            w.v = v;
            w.color_a = w.color_b = c.map[u];
            return { false, w };
        }

    std::map<pair<int, int>, vector<pair<int, int>>> classes;
    for (auto & [u, v] : g.edges())
        classes[std::minmax(c.map[u], c.map[v])].emplace_back(u, v);

    for (auto & [colors, edges] : classes) {
        Dsu dsu{ g.order() };
        vector<vector<int>> adj(g.order());
        for (auto & [u, v] : edges) {
            if (! dsu.unite(u, v)) {
                // recover the unique u..v path in the forest built so far
                vector<int> prev(g.order(), -1);
                vector<int> queue{ u };
                prev[u] = u;
                for (size_t at = 0; at < queue.size() && prev[v] == -1; ++at)
                    for (int w : adj[queue[at]])
                        if (prev[w] == -1) {
                            prev[w] = queue[at];
                            queue.push_back(w);
                        }
                AcyclicWitness w;
                w.improper_edge = false;
                w.u = u;
                w.v = v;
                w.color_a = colors.first;
                w.color_b = colors.second;
                for (int at = v; at != u; at = prev[at])
                    w.cycle.push_back(at);
                w.cycle.push_back(u);
                return { false, w };
            }
            adj[u].push_back(v);
            adj[v].push_back(u);
        }
    }
    return { true, std::nullopt };
}

} // namespace chromix
