#ifndef MDT_IP_EXPORT_HPP
#define MDT_IP_EXPORT_HPP

#include "mdt/resolve.hpp"

#include <string>

namespace mdt {

/// LP-format text of the binary program whose optimum is xdim_r(G):
/// minimize x_0 + ... + x_{n-1} subject to, for every reduced target pair,
/// sum_k |dist_r(X_i, v_k) - dist_r(X_j, v_k)| x_k >= 1 with binary x_k.
/// The header comment records the graph hash, variant and radius.
std::string export_ip(const Graph& g, const TargetFamily& tf, int r);
std::string export_ip(const Graph& g, Variant variant, int r);

} // namespace mdt

#endif
