#include <chromix/core.hpp>

#include <algorithm>

using std::string;
using std::to_string;
using std::vector;

namespace chromix {

Error::Error(ErrorKind kind, const string & message, int line) :
    std::runtime_error(line > 0 ? "line " + to_string(line) + ": " + message : message),
    kind_(kind),
    line_(line)
{
}

void Signature::validate() const
{
    if (n < 0 || m < 0)
        throw Error{ ErrorKind::Signature, "signature (" + to_string(n) + ", " + to_string(m) + ") has a negative component" };
    if (n == 0 && m == 1)
        throw Error{ ErrorKind::Signature, "signature (0, 1) is not supported" };
    int pp = p();
    if (pp < 1 || pp > 30)
        throw Error{ ErrorKind::Signature, "2n+m = " + to_string(pp) + " out of supported range 1..30" };
}

auto dual(int alpha, const Signature & sig) -> int
{
    if (! sig.valid_view(alpha))
        throw Error{ ErrorKind::TypeRange, "adjacency type " + to_string(alpha) + " out of range 1.." + to_string(sig.p()) };
    if (alpha > 2 * sig.n)
        return alpha;
    return (alpha % 2 == 0) ? alpha - 1 : alpha + 1;
}

UndirectedGraph::UndirectedGraph(int order) :
    order_(order),
    adj_(order)
{
    if (order < 0)
        throw Error{ ErrorKind::VertexRange, "negative vertex count" };
}

void UndirectedGraph::check_vertex(int u) const
{
    if (u < 0 || u >= order_)
        throw Error{ ErrorKind::VertexRange, "vertex " + to_string(u) + " out of range 0.." + to_string(order_ - 1) };
}

void UndirectedGraph::add_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw Error{ ErrorKind::Loop, "loop at vertex " + to_string(u) };
    if (u > v)
        std::swap(u, v);
    auto e = std::make_pair(u, v);
    auto pos = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (pos != edges_.end() && *pos == e)
        throw Error{ ErrorKind::DuplicateAdjacency, "duplicate edge {" + to_string(u) + ", " + to_string(v) + "}" };
    edges_.insert(pos, e);
    adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

auto UndirectedGraph::adjacent(int u, int v) const -> bool
{
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

auto UndirectedGraph::degree(int u) const -> int
{
    check_vertex(u);
    return int(adj_[u].size());
}

auto UndirectedGraph::neighbors(int u) const -> const vector<int> &
{
    check_vertex(u);
    return adj_[u];
}

auto UndirectedGraph::edges() const -> const vector<std::pair<int, int>> &
{
    return edges_;
}

auto NmGraph::view(int u, int v) const -> int
{
    check_vertex(u);
    check_vertex(v);
    return view_[std::size_t(u) * order_ + v];
}

void NmGraph::check_vertex(int u) const
{
    if (u < 0 || u >= order_)
        throw Error{ ErrorKind::VertexRange, "vertex " + to_string(u) + " out of range 0.." + to_string(order_ - 1) };
}

auto NmGraph::degree(int u) const -> int
{
    check_vertex(u);
    return int(adj_[u].size());
}

auto NmGraph::neighbors(int u, int alpha) const -> vector<int>
{
    check_vertex(u);
    if (! sig_.valid_view(alpha))
        throw Error{ ErrorKind::TypeRange, "adjacency type " + to_string(alpha) + " out of range 1.." + to_string(sig_.p()) };
    vector<int> result;
    for (auto & [w, t] : adj_[u])
        if (t == alpha)
            result.push_back(w);
    return result;
}

auto NmGraph::neighbors(int u) const -> const vector<std::pair<int, int>> &
{
    check_vertex(u);
    return adj_[u];
}

auto NmGraph::label(int v) const -> const string &
{
    check_vertex(v);
    static const string empty;
    return labels_.empty() ? empty : labels_[v];
}

auto NmGraph::has_labels() const noexcept -> bool
{
    return std::any_of(labels_.begin(), labels_.end(), [](const string & s) { return ! s.empty(); });
}

auto NmGraph::underlying() const -> UndirectedGraph
{
    UndirectedGraph g{ order_ };
    for (auto & a : arcs_)
        g.add_edge(a.tail, a.head);
    for (auto & e : edges_)
        g.add_edge(e.u, e.v);
    return g;
}

auto operator==(const NmGraph & a, const NmGraph & b) -> bool
{
    return a.sig_ == b.sig_ && a.order_ == b.order_ && a.view_ == b.view_ && a.labels_ == b.labels_;
}

NmGraphBuilder::NmGraphBuilder(Signature sig, int order) :
    sig_(sig),
    order_(order)
{
    sig_.validate();
    if (order < 0)
        throw Error{ ErrorKind::VertexRange, "negative vertex count" };
    view_.assign(std::size_t(order) * order, 0);
}

void NmGraphBuilder::check_vertex(int u) const
{
    if (u < 0 || u >= order_)
        throw Error{ ErrorKind::VertexRange, "vertex " + to_string(u) + " out of range 0.." + to_string(order_ - 1) };
}

auto NmGraphBuilder::view(int u, int v) const -> int
{
    check_vertex(u);
    check_vertex(v);
    return view_[std::size_t(u) * order_ + v];
}

void NmGraphBuilder::set_adjacency(int u, int v, int alpha)
{
    check_vertex(u);
    check_vertex(v);
    if (! sig_.valid_view(alpha))
        throw Error{ ErrorKind::TypeRange, "adjacency type " + to_string(alpha) + " out of range 1.." + to_string(sig_.p()) };
    if (u == v)
        throw Error{ ErrorKind::Loop, "loop at vertex " + to_string(u) };
    if (view_[std::size_t(u) * order_ + v] != 0)
        throw Error{ ErrorKind::DuplicateAdjacency, "vertices " + to_string(u) + " and " + to_string(v) + " are already adjacent" };
    view_[std::size_t(u) * order_ + v] = std::uint8_t(alpha);
    view_[std::size_t(v) * order_ + u] = std::uint8_t(dual(alpha, sig_));
}

void NmGraphBuilder::add_arc(int tail, int head, int type)
{
    if (type < 2 || type > 2 * sig_.n || type % 2 != 0)
        throw Error{ ErrorKind::TypeRange, "arc type " + to_string(type) + " not an even value in 2.." + to_string(2 * sig_.n) };
    set_adjacency(tail, head, type);
}

void NmGraphBuilder::add_edge(int u, int v, int type)
{
    if (! sig_.is_edge_type(type))
        throw Error{ ErrorKind::TypeRange, "edge type " + to_string(type) + " not in " + to_string(2 * sig_.n + 1) + ".." + to_string(sig_.p()) };
    set_adjacency(u, v, type);
}

void NmGraphBuilder::set_label(int v, const string & text)
{
    check_vertex(v);
    if (labels_.empty())
        labels_.assign(order_, "");
    labels_[v] = text;
}

auto NmGraphBuilder::build() const -> NmGraph
{
    NmGraph g;
    g.sig_ = sig_;
    g.order_ = order_;
    g.view_ = view_;
    g.labels_ = labels_;
    g.adj_.assign(order_, {});
    for (int u = 0; u < order_; ++u)
        for (int v = 0; v < order_; ++v)
            if (int t = view_[std::size_t(u) * order_ + v]; t != 0)
                g.adj_[u].emplace_back(v, t);
    for (int u = 0; u < order_; ++u)
        for (int v = u + 1; v < order_; ++v) {
            int t = view_[std::size_t(u) * order_ + v];
            if (t == 0)
                continue;
            if (sig_.is_edge_type(t))
                g.edges_.push_back(TypedEdge{ u, v, t });
            else if (t % 2 == 0)
                g.arcs_.push_back(Arc{ u, v, t });
            else
                g.arcs_.push_back(Arc{ v, u, t + 1 });
        }
    std::sort(g.arcs_.begin(), g.arcs_.end());
    std::sort(g.edges_.begin(), g.edges_.end());
    return g;
}

auto induced_subgraph(const NmGraph & g, const vector<int> & keep) -> NmGraph
{
    NmGraphBuilder builder{ g.signature(), int(keep.size()) };
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (! g.label(keep[i]).empty())
            builder.set_label(int(i), g.label(keep[i]));
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (int t = g.view(keep[i], keep[j]); t != 0)
                builder.set_adjacency(int(i), int(j), t);
    }
    return builder.build();
}

auto remove_vertex(const NmGraph & g, int v) -> NmGraph
{
    vector<int> keep;
    for (int u = 0; u < g.order(); ++u)
        if (u != v)
            keep.push_back(u);
    return induced_subgraph(g, keep);
}

} // namespace chromix
