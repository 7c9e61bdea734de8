#include "mdt/graph.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mdt {

Graph Graph::from_edges(int order, std::span<const std::pair<int, int>> edges) {
    if (order < 0) throw std::invalid_argument("graph order must be nonnegative");
    Graph g;
    g.order_ = order;
    g.edges_.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (u < 0 || u >= order || v < 0 || v >= order)
            throw std::invalid_argument("edge " + std::to_string(i) +
                                        ": endpoint out of range [0," +
                                        std::to_string(order) + ")");
        if (u == v)
            throw std::invalid_argument("edge " + std::to_string(i) +
                                        ": self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        g.edges_.emplace_back(u, v);
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

    g.adj_.assign(order, {});
    for (auto [u, v] : g.edges_) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    return g;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

Graph build_graph(int order, std::span<const std::pair<int, int>> edges) {
    return Graph::from_edges(order, edges);
}

Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> edges = a.edges();
    int off = a.order();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + off, v + off);
    return Graph::from_edges(a.order() + b.order(), edges);
}

std::vector<std::uint32_t> bfs_distances(const Graph& g, int source) {
    int n = g.order();
    std::vector<std::uint32_t> dist(n, DistanceMatrix::kInf);
    std::vector<int> queue;
    queue.reserve(n);
    dist[source] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int u = queue[head];
        std::uint32_t du = dist[u];
        for (int w : g.neighbors(u)) {
            if (dist[w] == DistanceMatrix::kInf) {
                dist[w] = du + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

DistanceMatrix::DistanceMatrix(int order, std::vector<std::uint32_t> table)
    : order_(order), d_(std::move(table)) {
    for (std::uint32_t raw : d_)
        if (raw != kInf && int(raw) > max_finite_) max_finite_ = int(raw);
}

namespace {

DistanceMatrix all_pairs_impl(const Graph& g, bool parallel) {
    int n = g.order();
    std::vector<std::uint32_t> table(std::size_t(n) * n, DistanceMatrix::kInf);
#ifdef _OPENMP
    #pragma omp parallel for schedule(dynamic, 8) if (parallel && n > 64)
#endif
    for (int s = 0; s < n; ++s) {
        auto row = bfs_distances(g, s);
        std::copy(row.begin(), row.end(), table.begin() + std::size_t(s) * n);
    }
    (void)parallel;
    return DistanceMatrix(n, std::move(table));
}

} // namespace

DistanceMatrix all_pairs_distances(const Graph& g) {
    return all_pairs_impl(g, true);
}

DistanceMatrix all_pairs_distances_serial(const Graph& g) {
    return all_pairs_impl(g, false);
}

std::string graph_hash(const Graph& g) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&h](std::uint64_t x) {
        for (int i = 0; i < 8; ++i) {
            h ^= (x >> (8 * i)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(std::uint64_t(g.order()));
    for (auto [u, v] : g.edges()) {
        mix(std::uint64_t(u));
        mix(std::uint64_t(v));
    }
    char buf[19];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace mdt
