#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace leafspan {

/// Graphs are stored as one 64-bit neighbour mask per vertex.
inline constexpr int kMaxVertices = 64;

using Edge = std::pair<int, int>;

/// A set of vertex indices in [0, 64).
struct VertexSet {
    std::uint64_t bits = 0;

    static constexpr VertexSet range(int n) {
        return VertexSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
    }
    static constexpr VertexSet single(int v) { return VertexSet{std::uint64_t{1} << v}; }

    constexpr bool contains(int v) const { return (bits >> v) & 1U; }
    constexpr void insert(int v) { bits |= std::uint64_t{1} << v; }
    constexpr void erase(int v) { bits &= ~(std::uint64_t{1} << v); }
    constexpr int size() const { return std::popcount(bits); }
    constexpr bool empty() const { return bits == 0; }
    constexpr bool subset_of(VertexSet other) const { return (bits & ~other.bits) == 0; }
    /// Smallest member; undefined on the empty set.
    constexpr int front() const { return std::countr_zero(bits); }

    std::vector<int> members() const;

    constexpr VertexSet operator|(VertexSet o) const { return {bits | o.bits}; }
    constexpr VertexSet operator&(VertexSet o) const { return {bits & o.bits}; }
    constexpr VertexSet operator-(VertexSet o) const { return {bits & ~o.bits}; }
    constexpr bool operator==(const VertexSet&) const = default;
};

template <typename F>
constexpr void for_each_vertex(VertexSet s, F&& f) {
    for (std::uint64_t b = s.bits; b != 0; b &= b - 1) f(std::countr_zero(b));
}

/// Simple undirected graph on vertices 0..n-1. Symmetric and loop-free by
/// construction; connectivity is not assumed.
class Graph {
public:
    /// Edgeless graph of order n, 1 <= n <= kMaxVertices.
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int order() const { return static_cast<int>(adj_.size()); }
    VertexSet vertices() const { return VertexSet::range(order()); }
    VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    bool adjacent(int u, int v) const { return neighbors(u).contains(v); }
    int degree(int v) const { return neighbors(v).size(); }
    int edge_count() const;

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    bool operator==(const Graph&) const = default;

private:
    void check_pair(int u, int v) const;

    std::vector<VertexSet> adj_;
};

Graph complete(int n);
Graph edgeless(int n);
Graph path(int n);
Graph cycle(int n);
/// K_{1,leaves}; the centre is vertex 0.
Graph star(int leaves);

/// Disjoint union; g2's vertex i becomes g1.order() + i.
Graph disjoint_union(const Graph& g1, const Graph& g2);
/// Disjoint union plus every edge between the two sides (same relabelling).
Graph join(const Graph& g1, const Graph& g2);

bool is_connected(const Graph& g);
int min_degree(const Graph& g);
int component_count(const Graph& g);

/// All-pairs shortest-path lengths of a connected graph.
class DistMatrix {
public:
    DistMatrix(int n, std::vector<int> entries);

    int order() const { return n_; }
    int at(int i, int j) const { return d_[static_cast<std::size_t>(i * n_ + j)]; }
    /// Sum of distances from v to every other vertex.
    int transmission(int v) const;
    int diameter() const;

private:
    int n_;
    std::vector<int> d_;
};

/// Throws std::domain_error when g is disconnected.
DistMatrix bfs_distances(const Graph& g);

/// graph6 codec. Accepts an optional ">>graph6<<" prefix and a trailing
/// newline; rejects bad headers, wrong lengths, out-of-range bytes and
/// nonzero padding. Throws std::invalid_argument.
Graph parse_graph6(std::string_view text);
std::string format_graph6(const Graph& g);

/// "u v" per line, 0-indexed; blank lines and '#' lines ignored. The order
/// is one more than the largest index seen. Throws std::invalid_argument.
Graph parse_edge_list(std::string_view text);
std::string format_edge_list(const Graph& g);

}  // namespace leafspan
