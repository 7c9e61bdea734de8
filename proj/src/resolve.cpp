#include "mdt/resolve.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mdt {

const char* variant_name(Variant v) {
    switch (v) {
    case Variant::Dim: return "dim";
    case Variant::Edim: return "edim";
    case Variant::Mdim: return "mdim";
    case Variant::Custom: return "custom";
    }
    return "?";
}

std::optional<Variant> parse_variant(std::string_view name) {
    if (name == "dim") return Variant::Dim;
    if (name == "edim") return Variant::Edim;
    if (name == "mdim") return Variant::Mdim;
    if (name == "custom") return Variant::Custom;
    return std::nullopt;
}

std::string TargetFamily::label(std::size_t index) const {
    std::string s = "{";
    const auto& t = targets[index];
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(t[i]);
    }
    s += '}';
    return s;
}

TargetFamily target_family(const Graph& g, Variant variant,
                           std::optional<std::vector<std::vector<int>>> custom) {
    TargetFamily tf;
    tf.graph_order = g.order();
    tf.variant = variant;

    auto add_vertices = [&] {
        for (int v = 0; v < g.order(); ++v) tf.targets.push_back({v});
    };
    auto add_edges = [&] {
        for (auto [u, v] : g.edges()) tf.targets.push_back({u, v});
    };

    switch (variant) {
    case Variant::Dim: add_vertices(); break;
    case Variant::Edim: add_edges(); break;
    case Variant::Mdim:
        add_vertices();
        add_edges();
        break;
    case Variant::Custom: {
        if (!custom)
            throw std::invalid_argument("custom variant needs a target list");
        tf.targets = std::move(*custom);
        for (auto& t : tf.targets) {
            for (int v : t)
                if (v < 0 || v >= g.order())
                    throw std::invalid_argument("custom target vertex " +
                                                std::to_string(v) + " out of range");
            std::sort(t.begin(), t.end());
            t.erase(std::unique(t.begin(), t.end()), t.end());
        }
        auto sorted = tf.targets;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("custom targets must be pairwise distinct sets");
        break;
    }
    }
    return tf;
}

ExtDist subset_distance(const DistanceMatrix& dm, std::span<const int> subset, int v) {
    ExtDist best = ExtDist::unreachable();
    for (int u : subset) {
        ExtDist d = dm.at(u, v);
        if (d < best) best = d;
    }
    return best;
}

int truncate_distance(ExtDist d, int r) {
    if (d.is_unreachable()) return r + 1;
    return int(std::min<std::uint32_t>(d.value(), std::uint32_t(r) + 1));
}

std::vector<int> signature(const DistanceMatrix& dm, std::span<const int> target,
                           std::span<const int> landmarks, int r) {
    std::vector<int> sig;
    sig.reserve(landmarks.size());
    for (int ell : landmarks)
        sig.push_back(truncate_distance(subset_distance(dm, target, ell), r));
    return sig;
}

std::vector<std::vector<int>> truncated_target_distances(const DistanceMatrix& dm,
                                                         const TargetFamily& tf,
                                                         int r) {
    int n = dm.order();
    std::vector<std::vector<int>> table(tf.targets.size(), std::vector<int>(n));
    for (std::size_t t = 0; t < tf.targets.size(); ++t)
        for (int v = 0; v < n; ++v)
            table[t][v] = truncate_distance(subset_distance(dm, tf.targets[t], v), r);
    return table;
}

namespace {

bool all_distinct(std::vector<std::vector<int>>& sigs) {
    std::sort(sigs.begin(), sigs.end());
    return std::adjacent_find(sigs.begin(), sigs.end()) == sigs.end();
}

} // namespace

bool is_resolving(const DistanceMatrix& dm, const TargetFamily& tf,
                  std::span<const int> landmarks, int r) {
    std::vector<std::vector<int>> sigs;
    sigs.reserve(tf.targets.size());
    for (const auto& t : tf.targets) sigs.push_back(signature(dm, t, landmarks, r));
    return all_distinct(sigs);
}

bool is_resolving(const Graph& g, const TargetFamily& tf,
                  std::span<const int> landmarks, int r) {
    // dist(target, landmark) read off one BFS per landmark.
    std::vector<std::vector<std::uint32_t>> from_landmark;
    from_landmark.reserve(landmarks.size());
    for (int ell : landmarks) from_landmark.push_back(bfs_distances(g, ell));

    std::vector<std::vector<int>> sigs;
    sigs.reserve(tf.targets.size());
    for (const auto& t : tf.targets) {
        std::vector<int> sig;
        sig.reserve(landmarks.size());
        for (const auto& dist : from_landmark) {
            std::uint32_t best = DistanceMatrix::kInf;
            for (int u : t) best = std::min(best, dist[u]);
            ExtDist d = best == DistanceMatrix::kInf ? ExtDist::unreachable()
                                                     : ExtDist::finite(best);
            sig.push_back(truncate_distance(d, r));
        }
        sigs.push_back(std::move(sig));
    }
    return all_distinct(sigs);
}

} // namespace mdt
