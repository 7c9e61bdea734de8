#ifndef MDT_SOLVER_HPP
#define MDT_SOLVER_HPP

#include "mdt/constraints.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace mdt {

struct SolveBudget {
    std::uint64_t node_limit = 0; // per solve; 0 = unlimited
    double wall_seconds = 0;      // whole call (sweeps share it); 0 = unlimited
    bool canonical_witness = false;
};

enum class SolveStatus { Optimal, Infeasible, BudgetExhausted };

const char* status_name(SolveStatus s);

struct SolveOutcome {
    SolveStatus status = SolveStatus::Optimal;
    int value = -1;              // optimal only
    std::vector<int> witness;    // optimal: minimum hitting set / landmark set;
                                 // budget-exhausted: best known (upper bound)
    int lower_bound = 0;         // meaningful when budget exhausted
    int upper_bound = -1;
    std::uint64_t nodes = 0;
};

/// Exact minimum hitting set over the distinguisher constraints.
///
/// Branch and bound: greedy cover seeds the upper bound, greedy disjoint
/// constraint packing gives lower bounds, branching picks the smallest
/// unhit constraint and tries its vertices in ascending order with
/// progressive exclusion. With canonical_witness the first optimum found in
/// that order is returned, making the witness deterministic at some cost in
/// pruning strength; the value is deterministic either way.
SolveOutcome min_hitting_set(const ConstraintSystem& cs, const SolveBudget& budget = {});

/// Independent oracle: enumerates vertex subsets by increasing cardinality
/// and returns the first distance-r resolving one. Exact by construction,
/// never touches the constraint compiler or the hitting-set search.
/// Throws std::invalid_argument when g.order() > max_order.
SolveOutcome exhaustive_min_resolving(const Graph& g, const TargetFamily& tf, int r,
                                      int max_order = 16);

/// xdim_r(G): compile then solve.
SolveOutcome truncated_dimension(const Graph& g, Variant variant, int r,
                                 const SolveBudget& budget = {});
SolveOutcome truncated_dimension(const Graph& g, const TargetFamily& tf, int r,
                                 const SolveBudget& budget = {});

struct PerRadius {
    int lower = 0;
    int upper = -1;
    bool optimal = false;
    int value() const { return upper; } // when optimal, lower == upper
};

struct ThrottlingResult {
    Variant variant = Variant::Dim;
    SolveStatus status = SolveStatus::Optimal;
    std::map<int, PerRadius> per_r;   // evaluated radii only
    int r_star = -1;
    int value = -1;                   // r_star + dim_{r_star} when optimal
    std::vector<int> witness;         // landmark set at r_star
    int value_lower = -1;             // certified interval (== value when optimal)
    int value_upper = -1;
    int sweep_cap = -1;               // last radius the sweep would consider
    bool cap_active = false;          // true when the eccentricity cap cut the sweep
    std::uint64_t nodes = 0;
};

/// th_xdim(G) = min over r >= r_min of r + xdim_r(G).
///
/// The sweep never looks past min(n, max finite distance + 1), where the
/// truncated dimension has stabilized, and stops once r reaches the best
/// value found (larger radii cannot win). A greedy pass over the radii
/// primes that bound first, so each exact search only has to look below
/// best - r; radii certified unable to improve keep interval entries in
/// per_r instead of exact values. With parallel_sweep distinct radii are
/// evaluated concurrently; the reported value, r_star and witness are
/// deterministic regardless of schedule.
ThrottlingResult throttling_number(const Graph& g, Variant variant,
                                   const SolveBudget& budget = {}, int r_min = 0,
                                   bool parallel_sweep = false);
ThrottlingResult throttling_number(const Graph& g, const TargetFamily& tf,
                                   const SolveBudget& budget = {}, int r_min = 0,
                                   bool parallel_sweep = false);

/// Diagnostic JSON record of one truncated-dimension solve:
/// {variant, r, value, witness, nodes, status}.
std::string solve_record_json(Variant variant, int r, const SolveOutcome& outcome);

/// Best achievable value when the radius is restricted to r >= 1, derived
/// from an r_min = 0 sweep without extra solves. Differs from result.value
/// only when r_star == 0.
int value_with_r_min_one(const ThrottlingResult& result);

/// Smallest x >= 0 with (x+2)^x >= count: lower bound on any throttling
/// number whose family has `count` targets.
int log_lower_bound(std::uint64_t count);

} // namespace mdt

#endif
