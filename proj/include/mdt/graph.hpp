#ifndef MDT_GRAPH_HPP
#define MDT_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mdt {

/// Graph distance that may be infinite (vertices in different components).
/// Total order: 0 < 1 < ... < unreachable.
class ExtDist {
public:
    constexpr ExtDist() : raw_(kUnreachable) {}

    static constexpr ExtDist finite(std::uint32_t d) { return ExtDist(d); }
    static constexpr ExtDist unreachable() { return ExtDist(kUnreachable); }

    constexpr bool is_unreachable() const { return raw_ == kUnreachable; }
    constexpr bool is_finite() const { return raw_ != kUnreachable; }

    /// Finite value; must not be called on the unreachable sentinel.
    constexpr std::uint32_t value() const { return raw_; }

    constexpr auto operator<=>(const ExtDist&) const = default;

private:
    explicit constexpr ExtDist(std::uint32_t raw) : raw_(raw) {}
    static constexpr std::uint32_t kUnreachable =
        std::numeric_limits<std::uint32_t>::max();
    std::uint32_t raw_;
};

/// Immutable simple undirected graph on vertices 0..order-1.
class Graph {
public:
    Graph() = default;

    /// Validates endpoints, rejects self-loops, deduplicates edges.
    /// Throws std::invalid_argument naming the offending edge index.
    static Graph from_edges(int order, std::span<const std::pair<int, int>> edges);

    int order() const { return order_; }
    int edge_count() const { return int(edges_.size()); }

    /// Neighbor list, sorted ascending.
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return int(adj_[v].size()); }

    /// Edges as (u, v) pairs with u < v, sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    bool has_edge(int u, int v) const;

    bool operator==(const Graph& o) const {
        return order_ == o.order_ && edges_ == o.edges_;
    }

private:
    int order_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

Graph build_graph(int order, std::span<const std::pair<int, int>> edges);
Graph complement(const Graph& g);
Graph disjoint_union(const Graph& a, const Graph& b);

/// All-pairs shortest-path distances with an unreachable sentinel across
/// components. Row-major n x n table.
class DistanceMatrix {
public:
    DistanceMatrix() = default;
    DistanceMatrix(int order, std::vector<std::uint32_t> table);

    int order() const { return order_; }

    ExtDist at(int u, int v) const {
        std::uint32_t raw = d_[std::size_t(u) * order_ + v];
        return raw == kInf ? ExtDist::unreachable() : ExtDist::finite(raw);
    }

    /// Largest finite entry; 0 for graphs with at most one vertex.
    int max_finite() const { return max_finite_; }

    static constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

private:
    int order_ = 0;
    int max_finite_ = 0;
    std::vector<std::uint32_t> d_;
};

/// BFS from every source, OpenMP-parallel over sources when available.
DistanceMatrix all_pairs_distances(const Graph& g);

/// Serial reference implementation; kept for testing and benchmarking.
DistanceMatrix all_pairs_distances_serial(const Graph& g);

/// Single-source BFS distances (kInf marks unreachable vertices).
std::vector<std::uint32_t> bfs_distances(const Graph& g, int source);

/// FNV-1a hash of order plus the sorted edge list, as fixed-width hex.
std::string graph_hash(const Graph& g);

} // namespace mdt

#endif
