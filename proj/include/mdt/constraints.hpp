#ifndef MDT_CONSTRAINTS_HPP
#define MDT_CONSTRAINTS_HPP

#include "mdt/bitset.hpp"
#include "mdt/resolve.hpp"

#include <iosfwd>
#include <optional>
#include <vector>

namespace mdt {

/// One unordered target pair and the vertices that tell its two targets
/// apart at the compiled radius.
struct Constraint {
    int a = 0, b = 0;       // target indices, a < b
    VertexSet distinguishers;
};

/// Hitting-set form of the distance-r resolving condition: a landmark set
/// resolves the family iff it intersects every distinguisher set.
///
/// Compilation applies dominance reduction (a pair whose distinguisher set
/// contains another pair's is implied by it and dropped) and extracts
/// mandatory vertices from singleton distinguisher sets. A pair with an
/// empty distinguisher set marks the whole system infeasible.
class ConstraintSystem {
public:
    ConstraintSystem() = default;
    ConstraintSystem(int order, int radius, Variant variant,
                     std::vector<Constraint> reduced,
                     std::optional<std::pair<int, int>> infeasible_pair);

    int order() const { return order_; }
    int radius() const { return radius_; }
    Variant variant() const { return variant_; }

    /// Post-reduction constraints, sorted lexicographically by (a, b);
    /// singleton sets are retained (their vertices are also in mandatory()).
    const std::vector<Constraint>& constraints() const { return constraints_; }

    /// Union of all singleton distinguisher sets.
    const VertexSet& mandatory() const { return mandatory_; }

    bool infeasible() const { return infeasible_pair_.has_value(); }
    std::optional<std::pair<int, int>> infeasible_pair() const { return infeasible_pair_; }

    bool hits_all(const VertexSet& landmarks) const;

    /// One line per constraint: "a b : v1 v2 ...".
    void dump(std::ostream& out) const;

private:
    int order_ = 0;
    int radius_ = 0;
    Variant variant_ = Variant::Dim;
    std::vector<Constraint> constraints_;
    VertexSet mandatory_;
    std::optional<std::pair<int, int>> infeasible_pair_;
};

/// Compiles distinguisher constraints for every unordered target pair.
/// The default entry point parallelizes over pairs (deterministic output);
/// the serial variant is the reference kept for testing.
ConstraintSystem compile_constraints(const Graph& g, const TargetFamily& tf, int r);
ConstraintSystem compile_constraints(const DistanceMatrix& dm, const TargetFamily& tf, int r);
ConstraintSystem compile_constraints_serial(const DistanceMatrix& dm,
                                            const TargetFamily& tf, int r);

} // namespace mdt

#endif
