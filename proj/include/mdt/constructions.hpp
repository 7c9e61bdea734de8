#ifndef MDT_CONSTRUCTIONS_HPP
#define MDT_CONSTRUCTIONS_HPP

#include "mdt/generators.hpp"
#include "mdt/resolve.hpp"

#include <string>
#include <vector>

namespace mdt {

/// A concrete landmark placement with its sensor radius. claimed_bound is
/// always radius + |landmarks|; `verified` records that the placement was
/// checked distance-r resolving for the declared variant.
struct Configuration {
    Graph graph;
    Variant variant = Variant::Dim;
    std::vector<int> landmarks;
    int radius = 0;
    int claimed_bound = 0;
    bool verified = false;
    std::string family; // generator name, e.g. "min_throttle_tree"
    std::string params; // human-readable parameters

    std::string to_json() const;
};

/// Base graph extended so that the extension's throttling number equals
/// offset + xdim(base). Paths and extra components occupy contiguous fresh
/// vertex indices recorded in the metadata fields.
struct ReductionOutput {
    Graph reduced;
    int offset = 0;
    Variant variant = Variant::Dim;
    int base_order = 0;
    std::vector<int> path_starts; // first vertex of each attached path
    int path_length = 0;          // vertices per attached path
    int extra_start = -1;         // first vertex of the extra component, -1 if none
    int extra_size = 0;

    std::string identity_note() const;
};

/// Adds n disjoint paths of n+1 vertices and a singleton; offset 2n.
ReductionOutput dim_throttle_reduction(const Graph& g);

/// Adds n disjoint paths of n+2 vertices and one extra edge (a K_2);
/// offset 2n. Requires at least one edge in g.
ReductionOutput edim_throttle_reduction(const Graph& g);

/// Adds n disjoint paths of n+2 vertices; offset 3n.
ReductionOutput mdim_throttle_reduction(const Graph& g);

/// Caterpillar with spine about n^(2/3) and a leg of length about n^(1/3)
/// on every spine vertex; landmarks sit on the spine every n^(1/3) steps and
/// the radius is the smallest verifying value near 2 n^(1/3). Order lands in
/// [n_target, 2 n_target]. Requires n_target >= 8.
Configuration min_throttle_tree(int n_target, bool verify = true);

/// Product of per-factor distance-r resolving sets of size at most
/// 2 + n_i / r each. Requires a grid spec and r >= 1.
Configuration grid_resolving_set(const FamilySpec& grid_spec, int r, bool verify = true);

/// Grouped landmarks on a circulant whose connection set contains 1 and its
/// maximum ell: ceil(sqrt(n)/ell) groups of ell consecutive vertices, evenly
/// spread, radius ceil(sqrt(n)) + ell. Requires at least three groups with
/// room for a gap after each.
Configuration circulant_config(int n, std::vector<int> connection, bool verify = true);

/// Cycle placements for the edge and mixed variants (n >= 5):
///   edim: 2k landmarks alternating gaps ceil(n/3k) and ceil(2n/3k) with
///         k = ceil(sqrt(n/6)) and radius ceil(n/3k);
///   mdim: ceil(sqrt(n)) evenly spaced landmarks, radius ceil(sqrt(n)).
Configuration cycle_variant_config(int n, Variant variant, bool verify = true);

/// Spider placement: landmarks on the body vertex, along each leg every
/// ceil(sqrt(n)) steps, and on each leg end; radius ceil(sqrt(n)).
Configuration spider_config(const std::vector<int>& legs, bool verify = true);

} // namespace mdt

#endif
