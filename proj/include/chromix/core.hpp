#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace chromix {

enum class ErrorKind {
    Syntax,
    TypeRange,
    DuplicateAdjacency,
    Loop,
    Signature,
    VertexRange,
    Domain,
    SizeGuard,
};

// Every diagnostic we raise carries a kind; parse errors also carry the
// 1-based input line (0 when the error is not tied to a line).
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string & message, int line = 0);

    auto kind() const noexcept -> ErrorKind { return kind_; }
    auto line() const noexcept -> int { return line_; }

private:
    ErrorKind kind_;
    int line_;
};

// Signature (n, m): n arc types, m edge types.  Adjacency view types run
// 1..2n+m; even values <= 2n are arc types seen from the tail, odd values
// <= 2n-1 the same arcs seen from the head, values > 2n are edge types.
struct Signature {
    int n = 0;
    int m = 0;

    auto p() const noexcept -> int { return 2 * n + m; }

    auto is_arc_view(int alpha) const noexcept -> bool { return 1 <= alpha && alpha <= 2 * n; }
    auto is_edge_type(int alpha) const noexcept -> bool { return 2 * n < alpha && alpha <= p(); }
    auto valid_view(int alpha) const noexcept -> bool { return 1 <= alpha && alpha <= p(); }

    // (0, 1) is excluded, p must lie in 1..30
    void validate() const;

    friend auto operator==(const Signature &, const Signature &) -> bool = default;
};

// dual(a): the view type of the same adjacency from the other endpoint
auto dual(int alpha, const Signature & sig) -> int;

struct Arc {
    int tail, head, type; // type even, 2 <= type <= 2n
    friend auto operator<=>(const Arc &, const Arc &) = default;
};

struct TypedEdge {
    int u, v, type; // u < v, 2n < type <= 2n+m
    friend auto operator<=>(const TypedEdge &, const TypedEdge &) = default;
};

// Simple undirected graph on vertices 0..order-1.
class UndirectedGraph {
public:
    UndirectedGraph() = default;
    explicit UndirectedGraph(int order);

    auto order() const noexcept -> int { return order_; }
    auto size() const noexcept -> int { return int(edges_.size()); }

    // rejects loops and duplicates
    void add_edge(int u, int v);

    auto adjacent(int u, int v) const -> bool;
    auto degree(int u) const -> int;
    auto neighbors(int u) const -> const std::vector<int> &;
    // canonical edge list: u < v, sorted lexicographically
    auto edges() const -> const std::vector<std::pair<int, int>> &;

    friend auto operator==(const UndirectedGraph &, const UndirectedGraph &) -> bool = default;

private:
    void check_vertex(int u) const;

    int order_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

class NmGraphBuilder;

// Immutable (n,m)-graph on vertices 0..order-1.  Underlying graph is simple:
// each unordered pair carries at most one adjacency, stored canonically as an
// arc (even type) or an edge.  view(u, v) exposes the adjacency as seen from
// u; view(v, u) is always its dual.
class NmGraph {
public:
    auto signature() const noexcept -> const Signature & { return sig_; }
    auto order() const noexcept -> int { return order_; }

    // 0 when u, v are not adjacent, else the type under which v in N^t(u)
    auto view(int u, int v) const -> int;
    auto adjacent(int u, int v) const -> bool { return view(u, v) != 0; }
    auto degree(int u) const -> int;

    // all w with w in N^alpha(u), ascending
    auto neighbors(int u, int alpha) const -> std::vector<int>;
    // (w, view from u) pairs, ascending by w
    auto neighbors(int u) const -> const std::vector<std::pair<int, int>> &;

    auto arcs() const noexcept -> const std::vector<Arc> & { return arcs_; }
    auto edges() const noexcept -> const std::vector<TypedEdge> & { return edges_; }
    auto size() const noexcept -> int { return int(arcs_.size() + edges_.size()); }

    auto label(int v) const -> const std::string &;
    auto has_labels() const noexcept -> bool;

    auto underlying() const -> UndirectedGraph;

    friend auto operator==(const NmGraph &, const NmGraph &) -> bool;

private:
    friend class NmGraphBuilder;
    NmGraph() = default;
    void check_vertex(int u) const;

    Signature sig_;
    int order_ = 0;
    std::vector<std::uint8_t> view_; // order x order, 0 = non-adjacent
    std::vector<Arc> arcs_;
    std::vector<TypedEdge> edges_;
    std::vector<std::vector<std::pair<int, int>>> adj_;
    std::vector<std::string> labels_; // empty vector = no labels anywhere
};

// Single-owner builder; build() snapshots the current state.
class NmGraphBuilder {
public:
    NmGraphBuilder(Signature sig, int order);

    auto signature() const noexcept -> const Signature & { return sig_; }
    auto order() const noexcept -> int { return order_; }
    auto view(int u, int v) const -> int;

    // make v an alpha-neighbor of u (storage rule: even alpha <= 2n stores
    // arc (u, v, alpha); odd alpha <= 2n-1 stores arc (v, u, alpha+1);
    // alpha > 2n stores edge {u, v})
    void set_adjacency(int u, int v, int alpha);
    void add_arc(int tail, int head, int type);
    void add_edge(int u, int v, int type);
    void set_label(int v, const std::string & text);

    auto build() const -> NmGraph;

private:
    void check_vertex(int u) const;

    Signature sig_;
    int order_ = 0;
    std::vector<std::uint8_t> view_;
    std::vector<std::string> labels_;
};

// Subgraph induced on keep (ascending list of distinct vertices), with
// vertices renumbered by position; labels carried over.
auto induced_subgraph(const NmGraph & g, const std::vector<int> & keep) -> NmGraph;
auto remove_vertex(const NmGraph & g, int v) -> NmGraph;

} // namespace chromix
