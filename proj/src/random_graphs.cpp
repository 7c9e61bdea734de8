#include "mdt/random_graphs.hpp"

#include <algorithm>
#include <stdexcept>

namespace mdt {

Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution flip(p);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (flip(rng)) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph random_tree(int n, std::mt19937& rng) {
    if (n < 1) throw std::invalid_argument("tree order must be >= 1");
    if (n == 1) return Graph::from_edges(1, {});
    if (n == 2) return Graph::from_edges(2, {{std::pair{0, 1}}});

    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<int> seq(n - 2);
    for (int& x : seq) x = pick(rng);

    std::vector<int> degree(n, 1);
    for (int x : seq) ++degree[x];

    std::vector<std::pair<int, int>> edges;
    std::vector<bool> used(n, false);
    for (int x : seq) {
        for (int leaf = 0; leaf < n; ++leaf) {
            if (degree[leaf] == 1 && !used[leaf]) {
                edges.emplace_back(leaf, x);
                used[leaf] = true;
                --degree[x];
                break;
            }
        }
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1 && !used[v]) (a < 0 ? a : b) = v;
    edges.emplace_back(a, b);
    return Graph::from_edges(n, edges);
}

Graph random_subtree(const Graph& tree, int target_order, std::mt19937& rng) {
    int n = tree.order();
    if (target_order < 1 || target_order > n)
        throw std::invalid_argument("subtree order out of range");

    std::uniform_int_distribution<int> pick_root(0, n - 1);
    std::vector<bool> in(n, false);
    std::vector<int> chosen;
    std::vector<int> frontier;

    int root = pick_root(rng);
    in[root] = true;
    chosen.push_back(root);
    for (int w : tree.neighbors(root)) frontier.push_back(w);

    while (int(chosen.size()) < target_order) {
        std::uniform_int_distribution<std::size_t> pick(0, frontier.size() - 1);
        std::size_t i = pick(rng);
        int v = frontier[i];
        frontier[i] = frontier.back();
        frontier.pop_back();
        if (in[v]) continue;
        in[v] = true;
        chosen.push_back(v);
        for (int w : tree.neighbors(v))
            if (!in[w]) frontier.push_back(w);
    }

    std::sort(chosen.begin(), chosen.end());
    std::vector<int> relabel(n, -1);
    for (std::size_t i = 0; i < chosen.size(); ++i) relabel[chosen[i]] = int(i);

    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : tree.edges())
        if (relabel[u] >= 0 && relabel[v] >= 0)
            edges.emplace_back(relabel[u], relabel[v]);
    return Graph::from_edges(target_order, edges);
}

} // namespace mdt
