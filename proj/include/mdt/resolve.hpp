#ifndef MDT_RESOLVE_HPP
#define MDT_RESOLVE_HPP

#include "mdt/graph.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace mdt {

enum class Variant { Dim, Edim, Mdim, Custom };

const char* variant_name(Variant v);
std::optional<Variant> parse_variant(std::string_view name);

/// The set of vertex subsets that a landmark set must tell apart.
///
/// dim targets every vertex as a singleton, edim every edge as a 2-subset,
/// mdim both; custom takes an explicit list of pairwise-distinct subsets.
struct TargetFamily {
    int graph_order = 0;
    Variant variant = Variant::Dim;
    std::vector<std::vector<int>> targets; // each sorted ascending

    std::size_t size() const { return targets.size(); }

    /// "{0}" or "{1 2}" for diagnostics.
    std::string label(std::size_t index) const;
};

/// Builds the family for a variant; for custom, targets are validated
/// (in-range, pairwise distinct as sets) and normalized sorted.
TargetFamily target_family(const Graph& g, Variant variant,
                           std::optional<std::vector<std::vector<int>>> custom = {});

/// min over u in X of dist(u, v); unreachable when X is empty or no member
/// of X shares a component with v.
ExtDist subset_distance(const DistanceMatrix& dm, std::span<const int> subset, int v);

/// min(d, r+1); the unreachable sentinel maps to r+1.
int truncate_distance(ExtDist d, int r);

/// Truncated distance vector of one target over an ordered landmark list.
std::vector<int> signature(const DistanceMatrix& dm, std::span<const int> target,
                           std::span<const int> landmarks, int r);

/// Truncated distance from every target to every vertex: table[t][v].
std::vector<std::vector<int>> truncated_target_distances(const DistanceMatrix& dm,
                                                         const TargetFamily& tf,
                                                         int r);

/// True iff all targets have pairwise distinct truncated distance vectors
/// over the landmark set. The Graph overload runs one BFS per landmark and
/// avoids the full distance matrix.
bool is_resolving(const DistanceMatrix& dm, const TargetFamily& tf,
                  std::span<const int> landmarks, int r);
bool is_resolving(const Graph& g, const TargetFamily& tf,
                  std::span<const int> landmarks, int r);

} // namespace mdt

#endif
