#ifndef MDT_RANDOM_GRAPHS_HPP
#define MDT_RANDOM_GRAPHS_HPP

#include "mdt/graph.hpp"

#include <random>

namespace mdt {

/// Erdos-Renyi G(n, p).
Graph random_graph(int n, double p, std::mt19937& rng);

/// Uniform labeled tree via a random Pruefer sequence.
Graph random_tree(int n, std::mt19937& rng);

/// Random connected induced subgraph of a tree with `target_order` vertices,
/// relabeled to 0..target_order-1 in increasing original index.
Graph random_subtree(const Graph& tree, int target_order, std::mt19937& rng);

} // namespace mdt

#endif
