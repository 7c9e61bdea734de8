#include "mdt/solver.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <climits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>

namespace mdt {

const char* status_name(SolveStatus s) {
    switch (s) {
    case SolveStatus::Optimal: return "optimal";
    case SolveStatus::Infeasible: return "infeasible";
    case SolveStatus::BudgetExhausted: return "budget_exhausted";
    }
    return "?";
}

namespace {

using Clock = std::chrono::steady_clock;

struct SearchCtx {
    const std::vector<VertexSet>* sets = nullptr; // all constraint sets, by index
    int universe = 0;
    std::uint64_t nodes = 0;
    std::uint64_t node_limit = 0;
    std::optional<Clock::time_point> deadline;
    bool exhausted = false;

    int best = INT_MAX;     // cost bound over the non-mandatory part
    bool have_wit = false;  // best is realized by best_set (vs. bound only)
    VertexSet best_set;
};

bool out_of_budget(SearchCtx& ctx) {
    if (ctx.node_limit && ctx.nodes > ctx.node_limit) return true;
    if (ctx.deadline && (ctx.nodes & 1023) == 0 && Clock::now() > *ctx.deadline)
        return true;
    return false;
}

/// Greedy packing of pairwise-disjoint effective constraints; every hitting
/// set needs one distinct vertex per packed constraint. Returns INT_MAX when
/// some effective set is empty (branch infeasible under the exclusions).
int packing_bound(const SearchCtx& ctx, const std::vector<int>& active,
                  const VertexSet& excluded) {
    const auto& sets = *ctx.sets;
    std::vector<std::pair<int, int>> by_size;
    by_size.reserve(active.size());
    for (int ci : active) {
        int sz = sets[ci].count_without(excluded);
        if (sz == 0) return INT_MAX;
        by_size.emplace_back(sz, ci);
    }
    std::sort(by_size.begin(), by_size.end());

    VertexSet used(ctx.universe);
    int lb = 0;
    for (auto [sz, ci] : by_size) {
        if (sets[ci].disjoint_from_both(used, excluded)) {
            ++lb;
            used.or_without(sets[ci], excluded);
        }
    }
    return lb;
}

void dfs(SearchCtx& ctx, std::vector<int> active, VertexSet chosen,
         VertexSet excluded, int cost) {
    if (ctx.exhausted) return;
    ++ctx.nodes;
    if (out_of_budget(ctx)) {
        ctx.exhausted = true;
        return;
    }

    const auto& sets = *ctx.sets;

    // Unit propagation: an effective singleton forces its vertex.
    bool changed = true;
    while (changed && !active.empty()) {
        changed = false;
        for (std::size_t i = 0; i < active.size(); ++i) {
            int ci = active[i];
            int sz = sets[ci].count_without(excluded);
            if (sz == 0) return; // dead branch
            if (sz == 1) {
                int v = -1;
                sets[ci].for_each_without(excluded, [&](int x) { v = x; });
                chosen.set(v);
                ++cost;
                std::vector<int> next;
                next.reserve(active.size());
                for (int cj : active)
                    if (!sets[cj].test(v)) next.push_back(cj);
                active = std::move(next);
                changed = true;
                break;
            }
        }
    }

    if (active.empty()) {
        if (cost < ctx.best || (cost == ctx.best && !ctx.have_wit)) {
            ctx.best = cost;
            ctx.best_set = chosen;
            ctx.have_wit = true;
        }
        return;
    }

    int lb = packing_bound(ctx, active, excluded);
    if (lb == INT_MAX) return;
    if (cost + lb > ctx.best || (cost + lb == ctx.best && ctx.have_wit)) return;

    // Branch on the smallest effective constraint; ties keep the earliest
    // (lowest target-pair) constraint for determinism.
    int branch = -1, branch_sz = INT_MAX;
    for (int ci : active) {
        int sz = sets[ci].count_without(excluded);
        if (sz < branch_sz) {
            branch_sz = sz;
            branch = ci;
        }
    }

    std::vector<int> members;
    members.reserve(branch_sz);
    sets[branch].for_each_without(excluded, [&](int v) { members.push_back(v); });

    for (int v : members) {
        std::vector<int> next;
        next.reserve(active.size());
        for (int ci : active)
            if (!sets[ci].test(v)) next.push_back(ci);
        chosen.set(v);
        dfs(ctx, std::move(next), chosen, excluded, cost + 1);
        chosen.reset(v);
        if (ctx.exhausted) return;
        excluded.set(v); // later branches look for hitting sets avoiding v
    }
}

std::vector<int> greedy_cover(const std::vector<VertexSet>& sets, int universe,
                              std::vector<int> active) {
    std::vector<int> picked;
    std::vector<int> cnt(universe);
    while (!active.empty()) {
        std::fill(cnt.begin(), cnt.end(), 0);
        for (int ci : active) sets[ci].for_each([&](int v) { ++cnt[v]; });
        int best_v = 0;
        for (int v = 1; v < universe; ++v)
            if (cnt[v] > cnt[best_v]) best_v = v;
        picked.push_back(best_v);
        std::vector<int> next;
        next.reserve(active.size());
        for (int ci : active)
            if (!sets[ci].test(best_v)) next.push_back(ci);
        active = std::move(next);
    }
    return picked;
}

struct CoreResult {
    SolveOutcome out;
    // True when the search only certified value > cutoff and stopped; the
    // outcome then carries the interval [cutoff+1, greedy] and the greedy
    // witness as its upper-bound certificate.
    bool above_cutoff = false;
};

// cutoff >= 0 caps the search: values >= cutoff are of no interest to the
// caller, so the search may stop once it has proven value > cutoff. A value
// of exactly cutoff is still searched for and reported exactly.
CoreResult solve_core(const ConstraintSystem& cs, const SolveBudget& budget,
                      std::optional<Clock::time_point> deadline, int ub_hint,
                      int cutoff = -1) {
    CoreResult res;
    SolveOutcome& out = res.out;
    if (cs.infeasible()) {
        out.status = SolveStatus::Infeasible;
        return res;
    }

    const int n = cs.order();
    const VertexSet& mandatory = cs.mandatory();
    const int mand_count = mandatory.count();

    // Dominance already removed every non-singleton superset of a singleton,
    // so dropping constraints hit by the mandatory set just removes the
    // singletons themselves; the filter below also guards custom systems.
    std::vector<VertexSet> sets;
    std::vector<int> active;
    for (const auto& c : cs.constraints()) {
        if (c.distinguishers.intersects(mandatory)) continue;
        active.push_back(int(sets.size()));
        sets.push_back(c.distinguishers);
    }

    if (active.empty()) {
        out.status = SolveStatus::Optimal;
        out.value = mand_count;
        out.witness = mandatory.to_vector();
        out.lower_bound = out.upper_bound = out.value;
        out.nodes = 0;
        return res;
    }

    SearchCtx ctx;
    ctx.sets = &sets;
    ctx.universe = n;
    ctx.node_limit = budget.node_limit;
    ctx.deadline = deadline;
    ctx.best_set = VertexSet(n);

    auto greedy = greedy_cover(sets, n, active);
    int greedy_val = int(greedy.size());

    ctx.best = greedy_val;
    if (ub_hint >= 0) ctx.best = std::min(ctx.best, ub_hint - mand_count);
    if (cutoff >= 0) ctx.best = std::min(ctx.best, cutoff - mand_count);
    ctx.have_wit = false;
    if (!budget.canonical_witness && greedy_val <= ctx.best) {
        ctx.best_set = VertexSet::of(n, greedy);
        ctx.have_wit = true;
    }

    int root_lb = packing_bound(ctx, active, VertexSet(n));

    if (ctx.best >= 0) dfs(ctx, active, VertexSet(n), VertexSet(n), 0);

    out.nodes = ctx.nodes;
    if (ctx.exhausted) {
        // Certified interval; the witness is the best hitting set seen.
        out.status = SolveStatus::BudgetExhausted;
        out.lower_bound = mand_count + root_lb;
        VertexSet wit = ctx.have_wit ? ctx.best_set : VertexSet::of(n, greedy);
        out.upper_bound = mand_count + wit.count();
        VertexSet full = mandatory;
        full |= wit;
        out.witness = full.to_vector();
        if (out.lower_bound == out.upper_bound) {
            out.status = SolveStatus::Optimal;
            out.value = out.upper_bound;
        }
        return res;
    }

    if (!ctx.have_wit) {
        // Nothing at or below the cap: every solution costs more than the
        // cutoff (the greedy and hint caps are always realizable, so only
        // the cutoff can be the binding one).
        res.above_cutoff = true;
        out.status = SolveStatus::Optimal;
        out.lower_bound = std::max(cutoff + 1, mand_count + root_lb);
        out.upper_bound = mand_count + greedy_val;
        VertexSet full = mandatory;
        full |= VertexSet::of(n, greedy);
        out.witness = full.to_vector();
        out.value = -1;
        return res;
    }

    VertexSet full = mandatory;
    full |= ctx.best_set;
    out.status = SolveStatus::Optimal;
    out.value = mand_count + ctx.best;
    out.witness = full.to_vector();
    out.lower_bound = out.upper_bound = out.value;
    return res;
}

std::optional<Clock::time_point> make_deadline(const SolveBudget& budget) {
    if (budget.wall_seconds <= 0) return std::nullopt;
    return Clock::now() + std::chrono::duration_cast<Clock::duration>(
                              std::chrono::duration<double>(budget.wall_seconds));
}

// Greedy cover size including mandatory vertices: a cheap upper bound used
// to prime the radius sweep.
int greedy_total(const ConstraintSystem& cs) {
    if (cs.infeasible()) return INT_MAX;
    std::vector<VertexSet> sets;
    std::vector<int> active;
    for (const auto& c : cs.constraints()) {
        if (c.distinguishers.intersects(cs.mandatory())) continue;
        active.push_back(int(sets.size()));
        sets.push_back(c.distinguishers);
    }
    return cs.mandatory().count() + int(greedy_cover(sets, cs.order(), active).size());
}

} // namespace

SolveOutcome min_hitting_set(const ConstraintSystem& cs, const SolveBudget& budget) {
    return solve_core(cs, budget, make_deadline(budget), -1).out;
}

SolveOutcome exhaustive_min_resolving(const Graph& g, const TargetFamily& tf, int r,
                                      int max_order) {
    const int n = g.order();
    if (n > max_order)
        throw std::invalid_argument("exhaustive search guarded at order " +
                                    std::to_string(max_order) + ", got " +
                                    std::to_string(n));
    auto dm = all_pairs_distances_serial(g);
    auto tdist = truncated_target_distances(dm, tf, r);
    const int nt = int(tdist.size());

    std::vector<int> order_buf(nt);
    auto resolved_by = [&](const std::vector<int>& subset) {
        std::iota(order_buf.begin(), order_buf.end(), 0);
        auto less = [&](int x, int y) {
            for (int v : subset) {
                if (tdist[x][v] != tdist[y][v]) return tdist[x][v] < tdist[y][v];
            }
            return false;
        };
        std::sort(order_buf.begin(), order_buf.end(), less);
        for (int i = 0; i + 1 < nt; ++i) {
            int x = order_buf[i], y = order_buf[i + 1];
            bool equal = true;
            for (int v : subset)
                if (tdist[x][v] != tdist[y][v]) { equal = false; break; }
            if (equal) return false;
        }
        return true;
    };

    SolveOutcome out;
    std::uint64_t tried = 0;
    for (int size = 0; size <= n; ++size) {
        std::vector<int> comb(size);
        std::iota(comb.begin(), comb.end(), 0);
        while (true) {
            ++tried;
            if (resolved_by(comb)) {
                out.status = SolveStatus::Optimal;
                out.value = size;
                out.witness = comb;
                out.lower_bound = out.upper_bound = size;
                out.nodes = tried;
                return out;
            }
            int i = size - 1;
            while (i >= 0 && comb[i] == n - size + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    // Unreachable for pairwise-distinct targets: the full vertex set always
    // resolves them at any radius.
    out.status = SolveStatus::Infeasible;
    out.nodes = tried;
    return out;
}

SolveOutcome truncated_dimension(const Graph& g, const TargetFamily& tf, int r,
                                 const SolveBudget& budget) {
    if (r < 0) throw std::invalid_argument("radius must be >= 0");
    auto cs = compile_constraints(g, tf, r);
    return min_hitting_set(cs, budget);
}

SolveOutcome truncated_dimension(const Graph& g, Variant variant, int r,
                                 const SolveBudget& budget) {
    return truncated_dimension(g, target_family(g, variant), r, budget);
}

namespace {

struct RadiusEval {
    bool evaluated = false;
    bool above_cutoff = false;
    SolveOutcome outcome;
};

ThrottlingResult assemble(const Graph& g, const TargetFamily& tf, int r_min, int cap,
                          const std::vector<RadiusEval>& evals) {
    ThrottlingResult res;
    res.variant = tf.variant;
    res.sweep_cap = cap;

    int best_upper = INT_MAX;
    int best_lower = INT_MAX;
    bool any_budget = false;
    bool all_infeasible = true;

    for (int r = r_min; r <= cap; ++r) {
        const auto& e = evals[r - r_min];
        if (!e.evaluated) continue;
        res.nodes += e.outcome.nodes;
        PerRadius pr;
        if (e.above_cutoff) {
            // Certified value > cutoff: cannot beat the incumbent, so the
            // interval entry never influences the optimum below.
            pr = {e.outcome.lower_bound, e.outcome.upper_bound,
                  e.outcome.lower_bound == e.outcome.upper_bound};
            all_infeasible = false;
        } else {
            switch (e.outcome.status) {
            case SolveStatus::Optimal:
                pr = {e.outcome.value, e.outcome.value, true};
                all_infeasible = false;
                break;
            case SolveStatus::BudgetExhausted:
                pr = {e.outcome.lower_bound, e.outcome.upper_bound, false};
                any_budget = true;
                all_infeasible = false;
                break;
            case SolveStatus::Infeasible:
                res.per_r[r] = PerRadius{INT_MAX, INT_MAX, false};
                continue;
            }
        }
        res.per_r[r] = pr;
        best_lower = std::min(best_lower, r + pr.lower);
        if (r + pr.upper < best_upper) {
            best_upper = r + pr.upper;
            res.r_star = r;
            res.witness = e.outcome.witness;
        }
    }

    if (all_infeasible) {
        res.status = SolveStatus::Infeasible;
        return res;
    }

    res.value_upper = best_upper;
    res.value_lower = std::min(best_lower, best_upper);
    if (any_budget && res.value_lower < res.value_upper) {
        res.status = SolveStatus::BudgetExhausted;
        res.value = -1;
    } else {
        res.status = SolveStatus::Optimal;
        res.value = best_upper;
        res.value_lower = res.value_upper = res.value;
        // r_star is the smallest exactly-solved radius attaining the value;
        // the witness must come from that same radius.
        for (int r = r_min; r <= cap; ++r) {
            auto it = res.per_r.find(r);
            if (it == res.per_r.end() || !it->second.optimal) continue;
            if (r + it->second.value() == res.value) {
                res.r_star = r;
                res.witness = evals[r - r_min].outcome.witness;
                break;
            }
        }
    }
    res.cap_active = (cap < g.order()) && (cap + 1 < best_upper);
    return res;
}

} // namespace

ThrottlingResult throttling_number(const Graph& g, const TargetFamily& tf,
                                   const SolveBudget& budget, int r_min,
                                   bool parallel_sweep) {
    if (r_min != 0 && r_min != 1)
        throw std::invalid_argument("r_min must be 0 or 1");

    ThrottlingResult res;
    res.variant = tf.variant;

    if (tf.size() <= 1) {
        // Nothing to distinguish: zero landmarks at the smallest radius.
        res.status = SolveStatus::Optimal;
        res.r_star = r_min;
        res.value = res.value_lower = res.value_upper = r_min;
        res.per_r[r_min] = PerRadius{0, 0, true};
        res.sweep_cap = r_min;
        return res;
    }

    auto dm = all_pairs_distances(g);
    int cap = std::min(g.order(), dm.max_finite() + 1);
    cap = std::max(cap, r_min);
    auto deadline = make_deadline(budget);

    // Priming pass: greedy upper bounds across the radii give an incumbent
    // before any exact search runs. Exact solves then only have to look
    // below best - r, which keeps the hard low-radius instances shallow:
    // proving dim_r > cutoff is far cheaper than computing dim_r.
    int primed = INT_MAX;
    for (int r = r_min; r <= cap; ++r) {
        if (r >= primed) break;
        int ub = greedy_total(compile_constraints(dm, tf, r));
        if (ub != INT_MAX) primed = std::min(primed, r + ub);
    }

    std::vector<RadiusEval> evals(cap - r_min + 1);

    if (!parallel_sweep) {
        int best_upper = primed;
        int prev_dim = -1;
        for (int r = r_min; r <= cap; ++r) {
            if (r >= best_upper) break;
            auto cs = compile_constraints(dm, tf, r);
            int hint = prev_dim >= 0 ? prev_dim : -1; // dim_r <= dim_{r-1}
            int cutoff = best_upper == INT_MAX ? -1 : best_upper - r;
            auto core = solve_core(cs, budget, deadline, hint, cutoff);
            evals[r - r_min] = {true, core.above_cutoff, core.out};
            if (!core.above_cutoff && core.out.status != SolveStatus::Infeasible) {
                best_upper = std::min(best_upper, r + core.out.upper_bound);
                prev_dim = core.out.upper_bound;
            }
            if (core.out.status == SolveStatus::BudgetExhausted && deadline &&
                Clock::now() > *deadline)
                break;
        }
        return assemble(g, tf, r_min, cap, evals);
    }

    // Parallel sweep: distinct radii solved concurrently. A radius r can be
    // skipped once the shared bound proves value <= r (its own value is at
    // least r), and cutoff-pruned once it cannot strictly improve; radii at
    // or below the final optimum are never skipped or pruned, so value,
    // r_star and witness match the serial sweep.
    std::atomic<int> best_upper{primed};
#ifdef _OPENMP
    #pragma omp parallel for schedule(dynamic, 1)
#endif
    for (int r = r_min; r <= cap; ++r) {
        int seen = best_upper.load(std::memory_order_relaxed);
        if (r >= seen) continue;
        auto cs = compile_constraints(dm, tf, r);
        int cutoff = seen == INT_MAX ? -1 : seen - r;
        auto core = solve_core(cs, budget, deadline, -1, cutoff);
        evals[r - r_min] = {true, core.above_cutoff, core.out};
        if (!core.above_cutoff && core.out.status != SolveStatus::Infeasible) {
            int cand = r + core.out.upper_bound;
            int cur = best_upper.load();
            while (cand < cur && !best_upper.compare_exchange_weak(cur, cand)) {
            }
        }
    }
    return assemble(g, tf, r_min, cap, evals);
}

ThrottlingResult throttling_number(const Graph& g, Variant variant,
                                   const SolveBudget& budget, int r_min,
                                   bool parallel_sweep) {
    return throttling_number(g, target_family(g, variant), budget, r_min,
                             parallel_sweep);
}

int value_with_r_min_one(const ThrottlingResult& result) {
    if (result.status != SolveStatus::Optimal)
        throw std::invalid_argument("needs an optimal sweep result");
    if (result.r_star >= 1) return result.value;
    // Radii the sweep skipped satisfy r >= value and contribute at least
    // value + 1 (the dimension stays >= 1 once two targets exist), so the
    // evaluated entries plus that fallback determine the r >= 1 optimum.
    int best = result.value + 1;
    for (const auto& [r, pr] : result.per_r) {
        if (r < 1 || !pr.optimal) continue;
        best = std::min(best, r + pr.value());
    }
    return best;
}

std::string solve_record_json(Variant variant, int r, const SolveOutcome& outcome) {
    nlohmann::json j;
    j["variant"] = variant_name(variant);
    j["r"] = r;
    j["value"] = outcome.value;
    j["witness"] = outcome.witness;
    j["nodes"] = outcome.nodes;
    j["status"] = status_name(outcome.status);
    return j.dump();
}

int log_lower_bound(std::uint64_t count) {
    for (int x = 0;; ++x) {
        unsigned __int128 pow = 1;
        for (int i = 0; i < x && pow < count; ++i) pow *= unsigned(x + 2);
        if (pow >= count) return x;
    }
}

} // namespace mdt
