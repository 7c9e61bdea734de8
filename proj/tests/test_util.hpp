#ifndef MDT_TEST_UTIL_HPP
#define MDT_TEST_UTIL_HPP

#include "mdt/generators.hpp"
#include "mdt/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace mdt::test {

// Independent all-pairs oracle (Floyd-Warshall over an adjacency matrix);
// deliberately avoids the library's BFS path.
inline std::vector<std::vector<long long>> floyd_warshall(const Graph& g) {
    const long long inf = std::numeric_limits<long long>::max() / 4;
    int n = g.order();
    std::vector<std::vector<long long>> d(n, std::vector<long long>(n, inf));
    for (int v = 0; v < n; ++v) d[v][v] = 0;
    for (auto [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

inline Graph path(int n) { return generate(FamilySpec::path(n)); }
inline Graph cycle(int n) { return generate(FamilySpec::cycle(n)); }
inline Graph complete(int n) { return generate(FamilySpec::complete(n)); }
inline Graph star(int n) { return generate(FamilySpec::star(n)); }
inline Graph kbipartite(int s, int t) {
    return generate(FamilySpec::complete_bipartite(s, t));
}
inline Graph hypercube(int d) { return generate(FamilySpec::hypercube(d)); }

// Minimal LP-text reader for the exported binary programs, independent of
// the library (stands in for an external exact solver in round-trip tests).
struct ParsedIp {
    int vars = 0;
    // one row per constraint: (variable index, coefficient), rhs is >= 1
    std::vector<std::vector<std::pair<int, long long>>> rows;
};

inline ParsedIp parse_lp(const std::string& text) {
    ParsedIp ip;
    std::istringstream in(text);
    std::string line;
    enum { None, Constraints, Binaries } section = None;
    while (std::getline(in, line)) {
        if (line.rfind("\\", 0) == 0) continue;
        if (line == "Subject To") { section = Constraints; continue; }
        if (line == "Binaries") { section = Binaries; continue; }
        if (line == "End" || line == "Minimize") { section = None; continue; }
        if (section == Binaries) {
            std::istringstream row(line);
            std::string tok;
            while (row >> tok) ++ip.vars;
        } else if (section == Constraints) {
            auto colon = line.find(':');
            if (colon == std::string::npos) continue;
            std::istringstream row(line.substr(colon + 1));
            std::vector<std::pair<int, long long>> terms;
            long long coeff;
            std::string var;
            while (row >> coeff >> var) {
                if (var[0] != 'x') break;
                terms.emplace_back(std::stoi(var.substr(1)), coeff);
                std::string plus;
                if (!(row >> plus)) break;
                if (plus == ">=") break;
            }
            ip.rows.push_back(std::move(terms));
        }
    }
    return ip;
}

// Exact optimum of the parsed program by subset enumeration (vars <= 20).
inline int solve_parsed_ip(const ParsedIp& ip) {
    int best = ip.vars + 1;
    for (std::uint32_t mask = 0; mask < (1u << ip.vars); ++mask) {
        int size = __builtin_popcount(mask);
        if (size >= best) continue;
        bool feasible = true;
        for (const auto& row : ip.rows) {
            long long sum = 0;
            for (auto [v, c] : row)
                if (mask & (1u << v)) sum += c;
            if (sum < 1) { feasible = false; break; }
        }
        if (feasible) best = size;
    }
    return best;
}

} // namespace mdt::test

#endif
