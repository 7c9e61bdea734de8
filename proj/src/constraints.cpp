#include "mdt/constraints.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>

namespace mdt {

ConstraintSystem::ConstraintSystem(int order, int radius, Variant variant,
                                   std::vector<Constraint> reduced,
                                   std::optional<std::pair<int, int>> infeasible_pair)
    : order_(order), radius_(radius), variant_(variant),
      constraints_(std::move(reduced)), mandatory_(order),
      infeasible_pair_(infeasible_pair) {
    for (const auto& c : constraints_) {
        int v = c.distinguishers.first();
        if (v >= 0 && c.distinguishers.count() == 1) mandatory_.set(v);
    }
}

bool ConstraintSystem::hits_all(const VertexSet& landmarks) const {
    if (infeasible_pair_) return false;
    for (const auto& c : constraints_)
        if (!c.distinguishers.intersects(landmarks)) return false;
    return true;
}

void ConstraintSystem::dump(std::ostream& out) const {
    for (const auto& c : constraints_) {
        out << c.a << ' ' << c.b << " :";
        c.distinguishers.for_each([&](int v) { out << ' ' << v; });
        out << '\n';
    }
}

namespace {

// Dominance reduction: scan by ascending set size, keep a set iff no
// already-kept set is contained in it; ties keep the lexicographically
// first pair. Sequential in both compile paths — the kept list collapses
// fast in practice, so this is not the part worth parallelizing.
std::vector<char> dominated_flags_serial(const std::vector<Constraint>& raw,
                                         const std::vector<int>& sizes) {
    std::vector<std::size_t> idx(raw.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t x, std::size_t y) { return sizes[x] < sizes[y]; });

    std::vector<char> dominated(raw.size(), 0);
    std::vector<std::size_t> kept;
    for (std::size_t i : idx) {
        for (std::size_t k : kept) {
            if (raw[k].distinguishers.subset_of(raw[i].distinguishers)) {
                dominated[i] = 1;
                break;
            }
        }
        if (!dominated[i]) kept.push_back(i);
    }
    return dominated;
}

ConstraintSystem compile_impl(const DistanceMatrix& dm, const TargetFamily& tf,
                              int r, bool parallel) {
    (void)parallel; // referenced by the pragma below only
    const int n = dm.order();
    const auto tdist = truncated_target_distances(dm, tf, r);
    const int nt = int(tf.targets.size());

    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(std::size_t(nt) * (nt - 1) / 2);
    for (int a = 0; a < nt; ++a)
        for (int b = a + 1; b < nt; ++b) pairs.emplace_back(a, b);

    std::vector<Constraint> raw(pairs.size());
#ifdef _OPENMP
    #pragma omp parallel for schedule(static) if (parallel && pairs.size() > 512)
#endif
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        auto [a, b] = pairs[p];
        VertexSet d(n);
        const auto& da = tdist[a];
        const auto& db = tdist[b];
        for (int v = 0; v < n; ++v)
            if (da[v] != db[v]) d.set(v);
        raw[p] = Constraint{a, b, std::move(d)};
    }

    std::optional<std::pair<int, int>> infeasible;
    for (const auto& c : raw) {
        if (c.distinguishers.none()) {
            infeasible = {c.a, c.b};
            break;
        }
    }

    std::vector<int> sizes(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) sizes[i] = raw[i].distinguishers.count();
    auto dominated = dominated_flags_serial(raw, sizes);

    std::vector<Constraint> reduced;
    for (std::size_t i = 0; i < raw.size(); ++i)
        if (!dominated[i]) reduced.push_back(std::move(raw[i]));

    return ConstraintSystem(n, r, tf.variant, std::move(reduced), infeasible);
}

} // namespace

ConstraintSystem compile_constraints(const DistanceMatrix& dm, const TargetFamily& tf, int r) {
    return compile_impl(dm, tf, r, true);
}

ConstraintSystem compile_constraints_serial(const DistanceMatrix& dm,
                                            const TargetFamily& tf, int r) {
    return compile_impl(dm, tf, r, false);
}

ConstraintSystem compile_constraints(const Graph& g, const TargetFamily& tf, int r) {
    return compile_constraints(all_pairs_distances(g), tf, r);
}

} // namespace mdt
