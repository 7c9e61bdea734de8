#include "mdt/ip_export.hpp"

#include "mdt/constraints.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace mdt {

std::string export_ip(const Graph& g, const TargetFamily& tf, int r) {
    if (r < 0) throw std::invalid_argument("radius must be >= 0");
    auto dm = all_pairs_distances(g);
    auto cs = compile_constraints(dm, tf, r);
    auto tdist = truncated_target_distances(dm, tf, r);
    const int n = g.order();

    std::ostringstream out;
    out << "\\ minimum landmark count for distance-" << r << " resolving\n";
    out << "\\ graph-hash: " << graph_hash(g) << "  order: " << n
        << "  variant: " << variant_name(tf.variant) << "  r: " << r << "\n";
    out << "Minimize\n obj:";
    for (int v = 0; v < n; ++v) out << (v ? " + x" : " x") << v;
    out << "\nSubject To\n";
    for (const auto& c : cs.constraints()) {
        out << " p" << c.a << '_' << c.b << ':';
        bool first = true;
        for (int v = 0; v < n; ++v) {
            int coeff = std::abs(tdist[c.a][v] - tdist[c.b][v]);
            if (coeff == 0) continue;
            out << (first ? " " : " + ") << coeff << " x" << v;
            first = false;
        }
        out << " >= 1\n";
    }
    out << "Binaries\n";
    for (int v = 0; v < n; ++v) out << (v ? " x" : " x") << v;
    out << "\nEnd\n";
    return out.str();
}

std::string export_ip(const Graph& g, Variant variant, int r) {
    return export_ip(g, target_family(g, variant), r);
}

} // namespace mdt
