// Benchmark of the OpenMP kernels against their serial reference
// implementations: all-pairs BFS, constraint compilation, and the radius
// sweep. Each kernel's parallel output is checked against the serial one.

#include "mdt/constraints.hpp"
#include "mdt/generators.hpp"
#include "mdt/solver.hpp"

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

template <class F>
double time_call(F&& f) {
    auto t0 = Clock::now();
    f();
    return seconds_since(t0);
}

void report(const char* name, double serial, double parallel, bool same) {
    std::printf("%-24s serial %8.3fs   parallel %8.3fs   speedup %5.2fx   %s\n",
                name, serial, parallel, parallel > 0 ? serial / parallel : 0.0,
                same ? "outputs match" : "OUTPUTS DIFFER");
}

bool equal_matrices(const mdt::DistanceMatrix& a, const mdt::DistanceMatrix& b) {
    if (a.order() != b.order()) return false;
    for (int u = 0; u < a.order(); ++u)
        for (int v = 0; v < a.order(); ++v)
            if (a.at(u, v) != b.at(u, v)) return false;
    return true;
}

bool equal_systems(const mdt::ConstraintSystem& a, const mdt::ConstraintSystem& b) {
    if (a.constraints().size() != b.constraints().size()) return false;
    for (std::size_t i = 0; i < a.constraints().size(); ++i) {
        const auto& ca = a.constraints()[i];
        const auto& cb = b.constraints()[i];
        if (ca.a != cb.a || ca.b != cb.b || !(ca.distinguishers == cb.distinguishers))
            return false;
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    int scale = argc > 1 ? std::stoi(argv[1]) : 1;
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif

    // All-pairs BFS over a large sparse circulant.
    {
        auto g = mdt::generate(mdt::FamilySpec::circulant(3000 * scale, {1, 2, 3}));
        mdt::DistanceMatrix serial_out, parallel_out;
        double ts = time_call([&] { serial_out = mdt::all_pairs_distances_serial(g); });
        double tp = time_call([&] { parallel_out = mdt::all_pairs_distances(g); });
        report("all_pairs_distances", ts, tp, equal_matrices(serial_out, parallel_out));
    }

    // Constraint compilation on a mid-size cycle with mixed targets
    // (quadratically many target pairs).
    {
        auto g = mdt::generate(mdt::FamilySpec::cycle(300 * scale));
        auto tf = mdt::target_family(g, mdt::Variant::Mdim);
        auto dm = mdt::all_pairs_distances(g);
        mdt::ConstraintSystem cs_serial, cs_parallel;
        double ts = time_call([&] { cs_serial = mdt::compile_constraints_serial(dm, tf, 6); });
        double tp = time_call([&] { cs_parallel = mdt::compile_constraints(dm, tf, 6); });
        report("compile_constraints", ts, tp, equal_systems(cs_serial, cs_parallel));
    }

    // Radius sweep on a path long enough for a couple dozen candidate radii.
    {
        auto g = mdt::generate(mdt::FamilySpec::path(58 + 6 * scale));
        mdt::ThrottlingResult serial_res, parallel_res;
        double ts = time_call([&] {
            serial_res = mdt::throttling_number(g, mdt::Variant::Dim, {}, 0, false);
        });
        double tp = time_call([&] {
            parallel_res = mdt::throttling_number(g, mdt::Variant::Dim, {}, 0, true);
        });
        bool same = serial_res.value == parallel_res.value &&
                    serial_res.r_star == parallel_res.r_star &&
                    serial_res.witness == parallel_res.witness;
        report("throttling sweep", ts, tp, same);
        std::printf("  path throttling value %d at r*=%d\n", serial_res.value,
                    serial_res.r_star);
    }
    return 0;
}
