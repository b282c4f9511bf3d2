#include <chromix/sparsity.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <string>

using std::int64_t;
using std::pair;
using std::size_t;
using std::to_string;
using std::vector;

namespace chromix {

namespace {

// plain Dinic's, small networks only
struct MaxFlow {
    struct Edge {
        int to;
        int64_t cap;
        int rev;
    };

    vector<vector<Edge>> adj;
    vector<int> level, iter;

    explicit MaxFlow(int nodes) : adj(nodes) { }

    void add_edge(int from, int to, int64_t cap)
    {
        adj[from].push_back({ to, cap, int(adj[to].size()) });
        adj[to].push_back({ from, 0, int(adj[from].size()) - 1 });
    }

    auto bfs(int s, int t) -> bool
    {
        level.assign(adj.size(), -1);
        std::queue<int> queue;
        level[s] = 0;
        queue.push(s);
        while (! queue.empty()) {
            int v = queue.front();
            queue.pop();
            for (auto & e : adj[v])
                if (e.cap > 0 && level[e.to] < 0) {
                    level[e.to] = level[v] + 1;
                    queue.push(e.to);
                }
        }
        return level[t] >= 0;
    }

    auto dfs(int v, int t, int64_t f) -> int64_t
    {
        if (v == t)
            return f;
        for (int & i = iter[v]; i < int(adj[v].size()); ++i) {
            auto & e = adj[v][i];
            if (e.cap > 0 && level[v] < level[e.to]) {
                int64_t d = dfs(e.to, t, std::min(f, e.cap));
                if (d > 0) {
                    e.cap -= d;
                    adj[e.to][e.rev].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }

    auto run(int s, int t) -> int64_t
    {
        int64_t flow = 0;
        while (bfs(s, t)) {
            iter.assign(adj.size(), 0);
            while (int64_t f = dfs(s, t, INT64_MAX))
                flow += f;
        }
        return flow;
    }
};

// does some subset S have e(S)/|S| strictly above a/b?  (Goldberg network:
// source - edge nodes (cap b) - endpoints - sink (cap a))
auto density_above(const UndirectedGraph & g, int64_t a, int64_t b) -> bool
{
    int n = g.order(), m = g.size();
    MaxFlow flow{ m + n + 2 };
    int source = m + n, sink = m + n + 1;
    for (int e = 0; e < m; ++e) {
        flow.add_edge(source, e, b);
        flow.add_edge(e, m + g.edges()[e].first, INT64_MAX / 4);
        flow.add_edge(e, m + g.edges()[e].second, INT64_MAX / 4);
    }
    for (int v = 0; v < n; ++v)
        flow.add_edge(m + v, sink, a);
    return flow.run(source, sink) < b * int64_t(m);
}

} // namespace

auto mad(const UndirectedGraph & g) -> Rational
{
    if (g.order() == 0)
        throw Error{ ErrorKind::Domain, "mad of an empty graph is undefined" };
    if (g.size() == 0)
        return Rational{ 0 };

    int n = g.order(), m = g.size();
    // candidate densities e/s; the maximum is attained at one of them
    vector<Rational> candidates;
    for (int s = 1; s <= n; ++s)
        for (int e = 1; e <= m && int64_t(e) * 2 <= int64_t(s) * (s - 1); ++e)
            candidates.emplace_back(e, s);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    // max density D*: the smallest candidate c with no subset strictly denser
    std::size_t lo = 0, hi = candidates.size() - 1;
    while (lo < hi) {
        auto mid = (lo + hi) / 2;
        if (density_above(g, candidates[mid].num, candidates[mid].den))
            lo = mid + 1;
        else
            hi = mid;
    }
    return Rational{ 2 * candidates[lo].num, candidates[lo].den };
}

auto forest_decomposition_valid(const UndirectedGraph & g, const ForestDecomposition & dec) -> bool
{
    if (int(dec.assignment.size()) != g.size())
        return false;
    for (int q : dec.assignment)
        if (q < 1 || q > dec.r)
            return false;
    for (int q = 1; q <= dec.r; ++q) {
        vector<int> up(g.order());
        std::iota(up.begin(), up.end(), 0);
        auto find = [&](auto && self, int x) -> int { return up[x] == x ? x : up[x] = self(self, up[x]); };
        for (int e = 0; e < g.size(); ++e) {
            if (dec.assignment[e] != q)
                continue;
            int a = find(find, g.edges()[e].first), b = find(find, g.edges()[e].second);
            if (a == b)
                return false;
            up[a] = b;
        }
    }
    return true;
}

namespace {

// forests maintained as explicit adjacency (edge indices) per forest
struct ForestState {
    const UndirectedGraph & g;
    int r = 0;
    vector<int> assignment;           // 0 = unplaced
    vector<vector<vector<int>>> adj;  // [forest][vertex] -> incident edge indices

    explicit ForestState(const UndirectedGraph & g_) :
        g(g_),
        assignment(g_.size(), 0)
    {
    }

    void add_forest()
    {
        ++r;
        adj.emplace_back(g.order());
    }

    auto other_end(int e, int v) const -> int
    {
        auto [a, b] = g.edges()[e];
        return a == v ? b : a;
    }

    void attach(int e, int q)
    {
        assignment[e] = q;
        auto [a, b] = g.edges()[e];
        adj[q - 1][a].push_back(e);
        adj[q - 1][b].push_back(e);
    }

    void detach(int e)
    {
        int q = assignment[e];
        auto [a, b] = g.edges()[e];
        auto & la = adj[q - 1][a];
        la.erase(std::find(la.begin(), la.end(), e));
        auto & lb = adj[q - 1][b];
        lb.erase(std::find(lb.begin(), lb.end(), e));
        assignment[e] = 0;
    }

    // edge path between u and v inside forest q, empty when disconnected
    auto path(int q, int u, int v) const -> vector<int>
    {
        vector<int> via_edge(g.order(), -1), prev(g.order(), -1);
        vector<int> queue{ u };
        prev[u] = u;
        for (size_t at = 0; at < queue.size(); ++at) {
            int x = queue[at];
            if (x == v)
                break;
            for (int e : adj[q - 1][x]) {
                int y = other_end(e, x);
                if (prev[y] == -1) {
                    prev[y] = x;
                    via_edge[y] = e;
                    queue.push_back(y);
                }
            }
        }
        vector<int> result;
        if (prev[v] == -1)
            return result;
        for (int at = v; at != u; at = prev[at])
            result.push_back(via_edge[at]);
        std::reverse(result.begin(), result.end());
        return result;
    }

    // breadth-first augmentation over edge exchanges; true if e0 was placed
    auto insert(int e0) -> bool
    {
        vector<int> parent_edge(g.size(), -1);
        vector<char> seen(g.size(), 0);
        vector<int> queue{ e0 };
        seen[e0] = 1;

        for (size_t at = 0; at < queue.size(); ++at) {
            int e = queue[at];
            auto [u, v] = g.edges()[e];
            for (int q = 1; q <= r; ++q) {
                if (assignment[e] == q)
                    continue;
                auto cycle = path(q, u, v);
                if (cycle.empty()) {
                    // e fits into q; walk the displacement chain back to e0,
                    // each parent taking the slot its child vacated
                    int cur = e, into = q;
                    while (true) {
                        int slot = assignment[cur];
                        if (slot != 0)
                            detach(cur);
                        attach(cur, into);
                        if (cur == e0)
                            break;
                        into = slot;
                        cur = parent_edge[cur];
                    }
                    return true;
                }
                for (int f : cycle)
                    if (! seen[f]) {
                        seen[f] = 1;
                        parent_edge[f] = e;
                        queue.push_back(f);
                    }
            }
        }
        return false;
    }
};

} // namespace

auto arboricity(const UndirectedGraph & g) -> ArboricityResult
{
    ForestState state{ g };
    for (int e = 0; e < g.size(); ++e) {
        while (! state.insert(e))
            state.add_forest();
    }
    ForestDecomposition dec{ state.r, state.assignment };
    if (! forest_decomposition_valid(g, dec))
        throw std::logic_error{ "arboricity produced an invalid decomposition" };
    return { state.r, std::move(dec) };
}

auto digit_graphs(const UndirectedGraph & g, const ForestDecomposition & dec,
    const Signature & sig, const vector<int> & order) -> vector<NmGraph>
{
    sig.validate();
    if (! forest_decomposition_valid(g, dec))
        throw Error{ ErrorKind::Domain, "invalid forest decomposition" };
    if (int(order.size()) != g.order())
        throw Error{ ErrorKind::Domain, "vertex order has the wrong length" };
    vector<int> position(g.order(), -1);
    for (int i = 0; i < int(order.size()); ++i) {
        if (order[i] < 0 || order[i] >= g.order() || position[order[i]] != -1)
            throw Error{ ErrorKind::Domain, "vertex order is not a permutation" };
        position[order[i]] = i;
    }

    int p = sig.p();
    int b = 0;
    {
        int64_t power = 1;
        while (power < dec.r) {
            power *= p;
            ++b;
        }
    }

    vector<NmGraph> result;
    for (int l = 0; l <= b; ++l) {
        NmGraphBuilder builder{ sig, g.order() };
        for (int e = 0; e < g.size(); ++e) {
            auto [x, y] = g.edges()[e];
            int lo = position[x] < position[y] ? x : y;
            int hi = position[x] < position[y] ? y : x;
            if (l == 0)
                builder.set_adjacency(lo, hi, 1);
            else {
                // l-th most significant of the b digits of q, base p
                int64_t q = dec.assignment[e];
                int64_t div = 1;
                for (int i = 0; i < b - l; ++i)
                    div *= p;
                int digit = int((q / div) % p);
                builder.set_adjacency(lo, hi, digit + 1);
            }
        }
        result.push_back(builder.build());
    }
    return result;
}

auto acyclic_coloring_construct(const UndirectedGraph & g, const Signature & sig) -> AcyclicConstruction
{
    sig.validate();
    if (g.order() > 40)
        throw Error{ ErrorKind::SizeGuard, "acyclic_coloring_construct supports at most 40 vertices, got " + to_string(g.order()) };

    auto arb = arboricity(g);
    vector<int> order(g.order());
    std::iota(order.begin(), order.end(), 0);
    auto layers = digit_graphs(g, arb.decomposition, sig, order);

    AcyclicConstruction result;
    result.b = int(layers.size()) - 1;
    result.layers = layers;
    for (auto & layer : layers) {
        auto chrom = exact_chromatic(layer, layer.order());
        result.layer_k.push_back(*chrom.k);
        result.layer_homs.push_back(chrom.certificate->witness);
    }

    // product coloring, mixed radix over the layer palettes
    int palette = 1;
    for (int k : result.layer_k)
        palette *= std::max(1, k);
    result.coloring.palette = palette;
    result.coloring.map.assign(g.order(), 0);
    for (int v = 0; v < g.order(); ++v) {
        int code = 0;
        for (size_t l = 0; l < result.layer_homs.size(); ++l)
            code = code * std::max(1, result.layer_k[l]) + result.layer_homs[l].map[v];
        result.coloring.map[v] = code;
    }

    if (! is_acyclic_coloring(g, result.coloring).ok)
        throw std::logic_error{ "constructed coloring is not acyclic" };
    return result;
}

auto check_arb_bound(const UndirectedGraph & g, const Signature & sig) -> bool
{
    sig.validate();
    if (g.order() > 5)
        throw Error{ ErrorKind::SizeGuard, "check_arb_bound supports at most 5 vertices, got " + to_string(g.order()) };
    if (sig.p() != 2)
        throw Error{ ErrorKind::Domain, "check_arb_bound needs 2n+m = 2" };

    int m = g.size(), p = sig.p();
    // worst chromatic number over every type assignment (view from the lower
    // endpoint of each edge)
    int worst = 0;
    vector<int> choice(m, 0);
    while (true) {
        NmGraphBuilder builder{ sig, g.order() };
        for (int e = 0; e < m; ++e)
            builder.set_adjacency(g.edges()[e].first, g.edges()[e].second, choice[e] + 1);
        auto chrom = exact_chromatic(builder.build(), g.order());
        worst = std::max(worst, *chrom.k);

        int at = 0;
        while (at < m && ++choice[at] == p) {
            choice[at] = 0;
            ++at;
        }
        if (at == m)
            break;
    }

    if (worst == 0) // no edges: arboricity 0, bound trivially holds
        return arboricity(g).r == 0;

    // smallest integer t >= log_p k + k/2, tested as p^(2t-k) >= k^2
    int k = worst, t = 0;
    auto holds = [&](int tt) {
        int e = 2 * tt - k;
        if (e < 0)
            return false;
        __int128 power = 1;
        for (int i = 0; i < e && power <= (__int128)k * k; ++i)
            power *= p;
        return power >= (__int128)k * k;
    };
    while (! holds(t))
        ++t;
    return arboricity(g).r <= t;
}

} // namespace chromix
