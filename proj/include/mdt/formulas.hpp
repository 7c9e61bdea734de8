#ifndef MDT_FORMULAS_HPP
#define MDT_FORMULAS_HPP

#include "mdt/generators.hpp"
#include "mdt/resolve.hpp"

#include <cstdint>
#include <string>

namespace mdt {

/// Closed-form truncated metric dimension of paths and cycles, radius k >= 1.
/// Piecewise in n with a residue-class split modulo 3k+2.
long long dim_k_path(long long n, long long k);
long long dim_k_cycle(long long n, long long k);

struct SweepDetail {
    long long value = 0;  // min over k >= 0 of k + dim_k
    long long r_star = 0; // smallest minimizing radius
    long long k_star = 0; // dimension at r_star
};

/// Formula-driven throttling sweep for paths/cycles (standard variant).
/// The k = 0 term contributes n - 1 (every vertex but one must carry a
/// landmark when the sensor only reports "here" / "not here").
SweepDetail path_throttle_sweep(long long n);
SweepDetail cycle_throttle_sweep(long long n);

/// Leading-term growth estimate: value ~= scale * n^exponent.
struct Envelope {
    double scale = 0;
    double exponent = 0;
    double slack = 0.10;
    double estimate(double n) const;
};

struct FormulaValue {
    enum class Kind { Exact, ExactBySweep, Envelope };
    Kind kind = Kind::Exact;
    long long value = -1; // exact kinds only
    Envelope envelope;    // envelope kind only
};

/// Throttling values for the covered families:
///   complete / complete bipartite / star: exact for dim, edim, mdim;
///   path / cycle: exact-by-sweep for dim, growth envelopes otherwise;
///   spider, circulant, grid, hypercube: growth envelopes for dim.
/// Throws std::domain_error for uncovered combinations.
FormulaValue th_formula(const FamilySpec& spec, Variant variant);

/// Envelope of the path/cycle throttling numbers per variant.
Envelope path_cycle_envelope(Variant variant);

/// Envelope of the smallest possible tree throttling number per variant.
Envelope min_tree_envelope(Variant variant);

enum class LowThrottle { Zero, One, Higher };

/// Zero iff at most one target, One iff exactly two targets.
LowThrottle low_throttle_class(const Graph& g, Variant variant);
LowThrottle low_throttle_class(const TargetFamily& tf);

/// True iff every three distinct vertices contain a pair x, y with
/// N(x) - {y,z} = N(y) - {x,z}; equivalent to the throttling number being
/// n-1 for the standard variant. Requires order >= 3 (smaller orders are
/// settled by low_throttle_class).
bool is_extremal_thdim(const Graph& g);

/// Structural classification of the graphs attaining throttling number n-1.
struct ExtremalClass {
    enum class Label {
        StarPlusIsolated,
        ComplementOfStarPlusIsolated,
        HomogeneousPair,             // disjoint union of two blocks, each a
                                     // clique or an independent set
        ComplementOfHomogeneousPair,
        PathP4,
        NotExtremal
    };
    Label label = Label::NotExtremal;
    int p = 0, q = 0; // block sizes for the homogeneous-pair labels

    bool extremal() const { return label != Label::NotExtremal; }
    std::string name() const;
};

ExtremalClass classify_extremal(const Graph& g);

} // namespace mdt

#endif
