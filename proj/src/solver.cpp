#include <chromix/solver.hpp>

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

using std::int64_t;
using std::pair;
using std::size_t;
using std::to_string;
using std::uint64_t;
using std::vector;

namespace chromix {

namespace {

auto popcount_words(const uint64_t * w, int words) -> int
{
    int total = 0;
    for (int i = 0; i < words; ++i)
        total += std::popcount(w[i]);
    return total;
}

// vertices of a greedily grown clique in the conflict relation, scanning by
// conflict degree (descending), index ascending
auto greedy_conflict_clique(const ConflictRelation & conflicts) -> vector<int>
{
    int n = conflicts.order();
    vector<int> degree(n, 0);
    for (auto & [u, v] : conflicts.pairs()) {
        ++degree[u];
        ++degree[v];
    }
    vector<int> by_degree(n);
    std::iota(by_degree.begin(), by_degree.end(), 0);
    std::stable_sort(by_degree.begin(), by_degree.end(),
        [&](int a, int b) { return degree[a] > degree[b]; });

    vector<int> clique;
    for (int v : by_degree) {
        bool fits = true;
        for (int c : clique)
            if (! conflicts.in_conflict(v, c)) {
                fits = false;
                break;
            }
        if (fits)
            clique.push_back(v);
    }
    std::sort(clique.begin(), clique.end());
    return clique;
}

struct HomSearcher {
    const NmGraph & g;
    const NmGraph & h;
    const SearchConfig & cfg;
    int n, hn, p, words;
    vector<uint64_t> sup; // [((t-1) * hn + a) * words + w] = {b : view_h(a, b) = t}
    int64_t nodes = 0;
    bool budget_hit = false;
    vector<int> assignment;

    HomSearcher(const NmGraph & g_, const NmGraph & h_, const SearchConfig & cfg_) :
        g(g_),
        h(h_),
        cfg(cfg_),
        n(g_.order()),
        hn(h_.order()),
        p(g_.signature().p()),
        words(std::max(1, (h_.order() + 63) / 64)),
        sup(size_t(p) * std::max(1, h_.order()) * words, 0),
        assignment(n, -1)
    {
        for (int a = 0; a < hn; ++a)
            for (auto & [b, t] : h.neighbors(a))
                sup[(size_t(t - 1) * hn + a) * words + b / 64] |= uint64_t(1) << (b % 64);
    }

    auto sup_row(int t, int a) const -> const uint64_t *
    {
        return sup.data() + (size_t(t - 1) * hn + a) * words;
    }

    auto dom_row(vector<uint64_t> & dom, int v) const -> uint64_t *
    {
        return dom.data() + size_t(v) * words;
    }

    // shrink D(u) to values supported by D(v); true if D(u) stays nonempty
    auto revise(vector<uint64_t> & dom, int u, int v, int view_uv) -> pair<bool, bool>
    {
        bool changed = false, alive = false;
        uint64_t * du = dom_row(dom, u);
        const uint64_t * dv = dom_row(dom, v);
        for (int w = 0; w < words; ++w) {
            uint64_t keep = 0;
            uint64_t bitset = du[w];
            while (bitset != 0) {
                int a = w * 64 + std::countr_zero(bitset);
                bitset &= bitset - 1;
                const uint64_t * row = sup_row(view_uv, a);
                bool supported = false;
                for (int x = 0; x < words; ++x)
                    if (row[x] & dv[x]) {
                        supported = true;
                        break;
                    }
                if (supported)
                    keep |= uint64_t(1) << (a % 64);
            }
            if (keep != du[w]) {
                changed = true;
                du[w] = keep;
            }
            if (keep != 0)
                alive = true;
        }
        return { alive, changed };
    }

    // AC-3 fixpoint over the typed adjacency constraints; seeds contains the
    // vertices whose domains just changed (empty = seed with everything)
    auto propagate(vector<uint64_t> & dom, const vector<int> & seeds) -> bool
    {
        vector<pair<int, int>> queue; // revise first against second
        auto push_around = [&](int v) {
            for (auto & [u, t] : g.neighbors(v)) {
                (void)t;
                queue.emplace_back(u, v);
            }
        };
        if (seeds.empty()) {
            for (int v = 0; v < n; ++v)
                push_around(v);
        }
        else
            for (int v : seeds)
                push_around(v);

        for (size_t at = 0; at < queue.size(); ++at) {
            auto [u, v] = queue[at];
            auto [alive, changed] = revise(dom, u, v, g.view(u, v));
            if (! alive)
                return false;
            if (changed)
                for (auto & [w, t] : g.neighbors(u)) {
                    (void)t;
                    if (w != v)
                        queue.emplace_back(w, u);
                }
        }
        return true;
    }

    auto pick_variable(const vector<uint64_t> & dom) const -> int
    {
        if (cfg.var_order == VarOrder::Static) {
            for (int v = 0; v < n; ++v)
                if (assignment[v] == -1)
                    return v;
            return -1;
        }
        int best = -1, best_size = 0;
        for (int v = 0; v < n; ++v) {
            if (assignment[v] != -1)
                continue;
            int size = popcount_words(dom.data() + size_t(v) * words, words);
            if (best == -1 || size < best_size) {
                best = v;
                best_size = size;
            }
        }
        return best;
    }

    auto consistent_with_assigned(int u, int a) const -> bool
    {
        for (auto & [v, t] : g.neighbors(u))
            if (assignment[v] != -1 && h.view(a, assignment[v]) != t)
                return false;
        return true;
    }

    auto search(vector<uint64_t> & dom, int depth) -> bool
    {
        if (depth == n)
            return true;
        int u = pick_variable(dom);
        const uint64_t * du = dom.data() + size_t(u) * words;
        for (int w = 0; w < words; ++w) {
            uint64_t bitset = du[w];
            while (bitset != 0) {
                int a = w * 64 + std::countr_zero(bitset);
                bitset &= bitset - 1;
                if (++nodes > cfg.node_budget) {
                    budget_hit = true;
                    return false;
                }
                if (! consistent_with_assigned(u, a))
                    continue;
                assignment[u] = a;
                if (cfg.propagation == Propagation::None) {
                    if (search(dom, depth + 1))
                        return true;
                }
                else {
                    vector<uint64_t> next{ dom };
                    auto * nu = dom_row(next, u);
                    std::fill(nu, nu + words, 0);
                    nu[a / 64] = uint64_t(1) << (a % 64);
                    if (propagate(next, { u }) && search(next, depth + 1))
                        return true;
                }
                assignment[u] = -1;
                if (budget_hit)
                    return false;
            }
        }
        return false;
    }
};

} // namespace

auto find_hom(const NmGraph & g, const NmGraph & h, const SearchConfig & config) -> HomSearchResult
{
    return find_hom(g, h, config, {});
}

auto find_hom(const NmGraph & g, const NmGraph & h, const SearchConfig & config,
    const vector<vector<int>> & domains) -> HomSearchResult
{
    if (g.signature() != h.signature())
        throw Error{ ErrorKind::Domain, "source and target signatures differ" };
    if (config.node_budget <= 0)
        throw Error{ ErrorKind::Domain, "node budget must be positive" };
    if (! domains.empty() && int(domains.size()) != g.order())
        throw Error{ ErrorKind::Domain, "domain restriction covers the wrong number of vertices" };

    if (g.order() == 0)
        return { SearchStatus::Found, Homomorphism{ g, h, {} }, 0 };

    // a conflict clique larger than the target is already a proof
    if (domains.empty()) {
        auto clique = greedy_conflict_clique(conflict_relation(g));
        if (int(clique.size()) > h.order())
            return { SearchStatus::None, std::nullopt, 0 };
    }

    HomSearcher searcher{ g, h, config };
    vector<uint64_t> dom(size_t(g.order()) * searcher.words, 0);
    if (domains.empty()) {
        for (int v = 0; v < g.order(); ++v)
            for (int a = 0; a < h.order(); ++a)
                dom[size_t(v) * searcher.words + a / 64] |= uint64_t(1) << (a % 64);
    }
    else
        for (int v = 0; v < g.order(); ++v)
            for (int a : domains[v]) {
                if (a < 0 || a >= h.order())
                    throw Error{ ErrorKind::VertexRange, "restricted domain entry out of range" };
                dom[size_t(v) * searcher.words + a / 64] |= uint64_t(1) << (a % 64);
            }

    if (config.propagation == Propagation::ArcConsistency && ! searcher.propagate(dom, {}))
        return { SearchStatus::None, std::nullopt, searcher.nodes };

    bool found = searcher.search(dom, 0);
    if (searcher.budget_hit)
        return { SearchStatus::BudgetExhausted, std::nullopt, searcher.nodes };
    if (! found)
        return { SearchStatus::None, std::nullopt, searcher.nodes };

    Homomorphism hom{ g, h, searcher.assignment };
    if (! is_homomorphism(hom).ok)
        throw std::logic_error{ "search produced a non-homomorphism" };
    return { SearchStatus::Found, std::move(hom), searcher.nodes };
}

namespace {

struct QuotientSearcher {
    const NmGraph & g;
    int n, p;
    Signature sig;
    vector<uint64_t> conflict_row; // over vertices, n <= 40
    vector<int> vtx;               // internal order: clique first
    vector<int> cls;               // by vertex, -1 unassigned
    vector<uint64_t> members;      // per class
    vector<std::uint8_t> ct;       // class-to-class view, (n+1)^2
    int best = 0;
    vector<int> best_cls;
    int lower = 0;
    bool done = false;

    QuotientSearcher(const NmGraph & g_, const ConflictRelation & conflicts, const vector<int> & clique) :
        g(g_),
        n(g_.order()),
        p(g_.signature().p()),
        sig(g_.signature()),
        conflict_row(n, 0),
        cls(n, -1),
        members(n, 0),
        ct(size_t(n + 1) * (n + 1), 0),
        lower(int(clique.size()))
    {
        for (auto & [u, v] : conflicts.pairs()) {
            conflict_row[u] |= uint64_t(1) << v;
            conflict_row[v] |= uint64_t(1) << u;
        }
        vector<char> in_clique(n, 0);
        for (int v : clique)
            in_clique[v] = 1;
        for (int v : clique)
            vtx.push_back(v);
        for (int v = 0; v < n; ++v)
            if (! in_clique[v])
                vtx.push_back(v);
    }

    // try the placement; on success appends the ct cells it set to trail
    auto try_place(int v, int c, vector<pair<int, int>> & trail) -> bool
    {
        if (conflict_row[v] & members[c])
            return false;
        for (auto & [x, t] : g.neighbors(v)) {
            if (cls[x] == -1)
                continue;
            int d = cls[x];
            auto & cell = ct[size_t(c) * (n + 1) + d];
            if (cell == 0) {
                cell = std::uint8_t(t);
                ct[size_t(d) * (n + 1) + c] = std::uint8_t(dual(t, sig));
                trail.emplace_back(c, d);
            }
            else if (cell != t) {
                undo(trail);
                return false;
            }
        }
        members[c] |= uint64_t(1) << v;
        cls[v] = c;
        return true;
    }

    void unplace(int v, int c, vector<pair<int, int>> & trail)
    {
        members[c] &= ~(uint64_t(1) << v);
        cls[v] = -1;
        undo(trail);
    }

    void undo(vector<pair<int, int>> & trail)
    {
        for (auto & [a, b] : trail) {
            ct[size_t(a) * (n + 1) + b] = 0;
            ct[size_t(b) * (n + 1) + a] = 0;
        }
        trail.clear();
    }

    void greedy_first_fit()
    {
        int used = 0;
        for (int i = 0; i < n; ++i) {
            int v = vtx[i];
            for (int c = 0; c <= used; ++c) {
                vector<pair<int, int>> trail;
                if (try_place(v, c, trail)) {
                    if (c == used)
                        ++used;
                    break;
                }
            }
        }
        best = used;
        best_cls = cls;
        // reset for the exact search
        std::fill(cls.begin(), cls.end(), -1);
        std::fill(members.begin(), members.end(), 0);
        std::fill(ct.begin(), ct.end(), 0);
    }

    void dfs(int i, int used)
    {
        if (done || used >= best)
            return;
        if (i == n) {
            best = used;
            best_cls = cls;
            if (best == lower)
                done = true;
            return;
        }
        int v = vtx[i];
        for (int c = 0; c < used; ++c) {
            vector<pair<int, int>> trail;
            if (try_place(v, c, trail)) {
                dfs(i + 1, used);
                unplace(v, c, trail);
                if (done)
                    return;
            }
        }
        if (used + 1 < best) {
            vector<pair<int, int>> trail;
            if (try_place(v, used, trail)) {
                dfs(i + 1, used + 1);
                unplace(v, used, trail);
            }
        }
    }
};

} // namespace

auto exact_chromatic(const NmGraph & g, int max_k, const SearchConfig & config) -> ChromaticResult
{
    (void)config;
    int n = g.order();
    if (n > 40)
        throw Error{ ErrorKind::SizeGuard, "exact_chromatic supports at most 40 vertices, got " + to_string(n) };
    if (max_k < 0)
        throw Error{ ErrorKind::Domain, "max_k must be non-negative" };

    if (n == 0) {
        NmGraphBuilder builder{ g.signature(), 0 };
        QuotientCertificate cert{ {}, builder.build(), Homomorphism{ g, builder.build(), {} } };
        return { 0, std::move(cert) };
    }

    auto conflicts = conflict_relation(g);
    auto clique = greedy_conflict_clique(conflicts);

    QuotientSearcher searcher{ g, conflicts, clique };
    searcher.greedy_first_fit();
    if (searcher.best > searcher.lower)
        searcher.dfs(0, 0);

    // canonical class numbering: order of first appearance by vertex index
    vector<int> renumber(n, -1);
    int k = 0;
    vector<int> partition(n, -1);
    for (int v = 0; v < n; ++v) {
        int c = searcher.best_cls[v];
        if (renumber[c] == -1)
            renumber[c] = k++;
        partition[v] = renumber[c];
    }

    if (k > max_k)
        return { std::nullopt, std::nullopt };

    // quotient graph over the classes
    vector<std::uint8_t> qview(size_t(k) * k, 0);
    for (int u = 0; u < n; ++u)
        for (auto & [v, t] : g.neighbors(u)) {
            int a = partition[u], b = partition[v];
            if (a == b)
                throw std::logic_error{ "quotient class is not independent" };
            auto & cell = qview[size_t(a) * k + b];
            if (cell == 0)
                cell = std::uint8_t(t);
            else if (cell != t)
                throw std::logic_error{ "quotient classes disagree on a view type" };
        }
    NmGraphBuilder builder{ g.signature(), k };
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b)
            if (qview[size_t(a) * k + b] != 0)
                builder.set_adjacency(a, b, qview[size_t(a) * k + b]);
    auto quotient = builder.build();

    Homomorphism witness{ g, quotient, partition };
    if (! is_homomorphism(witness).ok)
        throw std::logic_error{ "quotient certificate fails verification" };
    return { k, QuotientCertificate{ std::move(partition), std::move(quotient), std::move(witness) } };
}

auto chromatic_oracle(const NmGraph & g) -> int
{
    int n = g.order();
    if (n > 8)
        throw Error{ ErrorKind::SizeGuard, "chromatic_oracle supports at most 8 vertices, got " + to_string(n) };
    if (n == 0)
        return 0;

    vector<int> cls(n, 0);
    int best = n;

    auto valid_blocks = [&]() -> int {
        int blocks = *std::max_element(cls.begin(), cls.end()) + 1;
        vector<std::uint8_t> qt(size_t(blocks) * blocks, 0);
        for (int u = 0; u < n; ++u)
            for (auto & [v, t] : g.neighbors(u)) {
                int a = cls[u], b = cls[v];
                if (a == b)
                    return -1;
                auto & cell = qt[size_t(a) * blocks + b];
                if (cell == 0)
                    cell = std::uint8_t(t);
                else if (cell != t)
                    return -1;
            }
        return blocks;
    };

    // restricted growth strings enumerate every set partition exactly once
    auto enumerate = [&](auto && self, int i, int max_used) -> void {
        if (i == n) {
            int blocks = valid_blocks();
            if (blocks > 0 && blocks < best)
                best = blocks;
            return;
        }
        for (int c = 0; c <= max_used + 1 && c < n; ++c) {
            cls[i] = c;
            self(self, i + 1, std::max(max_used, c));
        }
    };
    enumerate(enumerate, 1, 0); // cls[0] = 0 fixed
    return best;
}

auto elimination_order(const UndirectedGraph & g) -> EliminationResult
{
    int n = g.order();
    vector<vector<int>> adj(n);
    for (int v = 0; v < n; ++v)
        adj[v] = g.neighbors(v);
    vector<char> active(n, 1);

    EliminationResult result{ true, {}, {}, {} };
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (active[v] && adj[v].size() <= 2) {
                pick = v;
                break;
            }
        if (pick == -1) {
            result.ok = false;
            return result;
        }
        auto around = adj[pick]; // ascending
        result.order.push_back(pick);
        result.attachment.push_back(around);
        for (int u : around)
            adj[u].erase(std::find(adj[u].begin(), adj[u].end(), pick));
        active[pick] = 0;
        adj[pick].clear();
        if (around.size() == 2) {
            int a = around[0], b = around[1];
            if (std::find(adj[a].begin(), adj[a].end(), b) == adj[a].end()) {
                result.fill.emplace_back(a, b);
                adj[a].insert(std::lower_bound(adj[a].begin(), adj[a].end(), b), b);
                adj[b].insert(std::lower_bound(adj[b].begin(), adj[b].end(), a), a);
            }
        }
    }
    return result;
}

auto two_tree_hom(const NmGraph & g, const NmGraph & t) -> Homomorphism
{
    if (g.signature() != t.signature())
        throw Error{ ErrorKind::Domain, "source and target signatures differ" };
    if (! has_p21(t).ok)
        throw Error{ ErrorKind::Domain, "target does not satisfy P_{2,1}" };
    auto elim = elimination_order(g.underlying());
    if (! elim.ok)
        throw Error{ ErrorKind::Domain, "source is not a partial 2-tree" };

    // complete with fill edges, view type 1 from the lower index
    NmGraphBuilder completed{ g.signature(), g.order() };
    for (int u = 0; u < g.order(); ++u)
        for (auto & [v, view] : g.neighbors(u))
            if (u < v)
                completed.set_adjacency(u, v, view);
    for (auto [a, b] : elim.fill)
        completed.set_adjacency(std::min(a, b), std::max(a, b), 1);

    vector<int> map(g.order(), -1);
    for (int i = int(elim.order.size()) - 1; i >= 0; --i) {
        int v = elim.order[i];
        vector<int> candidates;
        for (int y = 0; y < t.order(); ++y)
            candidates.push_back(y);
        for (int u : elim.attachment[i]) {
            int need = completed.view(u, v);
            vector<int> next;
            for (int y : candidates)
                if (t.view(map[u], y) == need)
                    next.push_back(y);
            candidates = std::move(next);
        }
        if (candidates.empty())
            throw std::logic_error{ "two_tree_hom: empty candidate set despite P_{2,1} target" };
        map[v] = candidates.front();
    }

    Homomorphism hom{ g, t, std::move(map) };
    if (! is_homomorphism(hom).ok)
        throw std::logic_error{ "two_tree_hom produced a non-homomorphism" };
    return hom;
}

auto circular_hom(const UndirectedGraph & g, int gg, const SearchConfig & config) -> CircularResult
{
    if (gg < 1)
        throw Error{ ErrorKind::Domain, "circular_hom needs g >= 1" };

    Signature sig{ 0, std::max(gg, 2) };
    NmGraphBuilder source{ sig, g.order() };
    for (auto & [u, v] : g.edges())
        source.set_adjacency(u, v, 1);

    int cycle_order = 2 * gg + 1;
    NmGraphBuilder cycle{ sig, cycle_order };
    for (int i = 0; i < cycle_order; ++i)
        cycle.set_adjacency(i, (i + 1) % cycle_order, 1);

    auto result = find_hom(source.build(), cycle.build(), config);
    if (result.status != SearchStatus::Found)
        return { result.status, {} };
    return { SearchStatus::Found, result.hom->map };
}

} // namespace chromix
