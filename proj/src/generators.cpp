#include "mdt/generators.hpp"

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mdt {

FamilySpec FamilySpec::path(int n) {
    FamilySpec f; f.kind = Kind::Path; f.n = n; return f;
}
FamilySpec FamilySpec::cycle(int n) {
    FamilySpec f; f.kind = Kind::Cycle; f.n = n; return f;
}
FamilySpec FamilySpec::complete(int n) {
    FamilySpec f; f.kind = Kind::Complete; f.n = n; return f;
}
FamilySpec FamilySpec::complete_bipartite(int s, int t) {
    FamilySpec f; f.kind = Kind::CompleteBipartite; f.s = s; f.t = t; return f;
}
FamilySpec FamilySpec::star(int n) {
    FamilySpec f; f.kind = Kind::Star; f.n = n; return f;
}
FamilySpec FamilySpec::spider(std::vector<int> legs) {
    FamilySpec f; f.kind = Kind::Spider; f.legs = std::move(legs); return f;
}
FamilySpec FamilySpec::circulant(int n, std::vector<int> connection) {
    FamilySpec f; f.kind = Kind::Circulant; f.n = n;
    f.connection = std::move(connection); return f;
}
FamilySpec FamilySpec::grid(std::vector<GridFactor> factors) {
    FamilySpec f; f.kind = Kind::Grid; f.factors = std::move(factors); return f;
}
FamilySpec FamilySpec::hypercube(int d) {
    FamilySpec f; f.kind = Kind::Hypercube; f.d = d; return f;
}

std::string FamilySpec::label() const {
    std::ostringstream os;
    auto join = [](const std::vector<int>& xs) {
        std::string s;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(xs[i]);
        }
        return s;
    };
    switch (kind) {
    case Kind::Path: os << "path:" << n; break;
    case Kind::Cycle: os << "cycle:" << n; break;
    case Kind::Complete: os << "complete:" << n; break;
    case Kind::CompleteBipartite: os << "kbipartite:" << s << ',' << t; break;
    case Kind::Star: os << "star:" << n; break;
    case Kind::Spider: os << "spider:" << join(legs); break;
    case Kind::Circulant: os << "circulant:" << n << ':' << join(connection); break;
    case Kind::Grid:
        os << "grid:";
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i) os << 'x';
            os << (factors[i].cyclic ? 'C' : 'P') << factors[i].length;
        }
        break;
    case Kind::Hypercube: os << "hypercube:" << d; break;
    case Kind::DisjointUnion: os << "union(" << parts.size() << " parts)"; break;
    case Kind::Complement: os << "complement(...)"; break;
    case Kind::EdgeList: os << "edgelist:" << edge_order << "v"; break;
    }
    return os.str();
}

namespace {

Graph make_path(int n) {
    if (n < 1) throw std::invalid_argument("path order must be >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph::from_edges(n, e);
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle order must be >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(n - 1, 0);
    return Graph::from_edges(n, e);
}

Graph make_complete(int n) {
    if (n < 1) throw std::invalid_argument("complete order must be >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

Graph make_complete_bipartite(int s, int t) {
    if (s < 1 || t < 1)
        throw std::invalid_argument("bipartite part sizes must be >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < t; ++j) e.emplace_back(i, s + j);
    return Graph::from_edges(s + t, e);
}

Graph make_star(int n) {
    if (n < 1) throw std::invalid_argument("star order must be >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    return Graph::from_edges(n, e);
}

Graph make_spider(const std::vector<int>& legs, bool allow_degenerate) {
    if (!allow_degenerate && legs.size() < 3)
        throw std::invalid_argument("spider needs >= 3 legs (body would have degree <= 2)");
    for (int len : legs)
        if (len < 1) throw std::invalid_argument("spider leg length must be >= 1");
    // Body vertex at index 0; legs numbered consecutively after it.
    std::vector<std::pair<int, int>> e;
    int next = 1;
    for (int len : legs) {
        int prev = 0;
        for (int step = 0; step < len; ++step) {
            e.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Graph::from_edges(next, e);
}

Graph make_circulant(int n, std::vector<int> conn) {
    if (n < 2) throw std::invalid_argument("circulant order must be >= 2");
    std::sort(conn.begin(), conn.end());
    conn.erase(std::unique(conn.begin(), conn.end()), conn.end());
    for (int x : conn)
        if (x < 1 || x > n / 2)
            throw std::invalid_argument("circulant connection value " +
                                        std::to_string(x) + " outside [1," +
                                        std::to_string(n / 2) + "]");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int x : conn) e.emplace_back(i, (i + x) % n);
    return Graph::from_edges(n, e);
}

Graph make_grid(const std::vector<GridFactor>& factors) {
    if (factors.empty()) throw std::invalid_argument("grid needs >= 1 factor");
    for (const auto& f : factors) {
        if (!f.cyclic && f.length < 1)
            throw std::invalid_argument("path factor length must be >= 1");
        if (f.cyclic && f.length < 3)
            throw std::invalid_argument("cycle factor length must be >= 3");
    }
    long long total = 1;
    for (const auto& f : factors) {
        total *= f.length;
        if (total > 2'000'000)
            throw std::invalid_argument("grid too large");
    }
    int n = int(total);
    int d = int(factors.size());
    // Row-major index; first factor varies slowest.
    std::vector<int> stride(d, 1);
    for (int i = d - 2; i >= 0; --i) stride[i] = stride[i + 1] * factors[i + 1].length;

    std::vector<std::pair<int, int>> e;
    std::vector<int> coord(d, 0);
    for (int v = 0; v < n; ++v) {
        for (int i = 0; i < d; ++i) {
            int len = factors[i].length;
            int c = coord[i];
            if (c + 1 < len) e.emplace_back(v, v + stride[i]);
            if (factors[i].cyclic && len > 2 && c == len - 1)
                e.emplace_back(v, v - (len - 1) * stride[i]);
        }
        for (int i = d - 1; i >= 0; --i) {
            if (++coord[i] < factors[i].length) break;
            coord[i] = 0;
        }
    }
    return Graph::from_edges(n, e);
}

Graph make_hypercube(int d) {
    if (d < 0 || d > 20) throw std::invalid_argument("hypercube dimension outside [0,20]");
    int n = 1 << d;
    std::vector<std::pair<int, int>> e;
    for (int v = 0; v < n; ++v)
        for (int b = 0; b < d; ++b)
            if (!(v & (1 << b))) e.emplace_back(v, v | (1 << b));
    return Graph::from_edges(n, e);
}

} // namespace

Graph generate(const FamilySpec& spec, bool allow_degenerate_spider) {
    using K = FamilySpec::Kind;
    switch (spec.kind) {
    case K::Path: return make_path(spec.n);
    case K::Cycle: return make_cycle(spec.n);
    case K::Complete: return make_complete(spec.n);
    case K::CompleteBipartite: return make_complete_bipartite(spec.s, spec.t);
    case K::Star: return make_star(spec.n);
    case K::Spider: return make_spider(spec.legs, allow_degenerate_spider);
    case K::Circulant: return make_circulant(spec.n, spec.connection);
    case K::Grid: return make_grid(spec.factors);
    case K::Hypercube: return make_hypercube(spec.d);
    case K::DisjointUnion: {
        if (spec.parts.empty())
            throw std::invalid_argument("disjoint union needs >= 1 part");
        Graph g = generate(spec.parts[0], allow_degenerate_spider);
        for (std::size_t i = 1; i < spec.parts.size(); ++i)
            g = disjoint_union(g, generate(spec.parts[i], allow_degenerate_spider));
        return g;
    }
    case K::Complement:
        if (spec.parts.size() != 1)
            throw std::invalid_argument("complement needs exactly 1 inner spec");
        return complement(generate(spec.parts[0], allow_degenerate_spider));
    case K::EdgeList:
        return Graph::from_edges(spec.edge_order, spec.edge_list);
    }
    throw std::invalid_argument("unknown family kind");
}

namespace {

int parse_int(std::string_view s, const char* what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw std::invalid_argument(std::string("bad ") + what + ": '" +
                                    std::string(s) + "'");
    return value;
}

std::vector<int> parse_int_list(std::string_view s, const char* what) {
    std::vector<int> out;
    while (!s.empty()) {
        auto comma = s.find(',');
        out.push_back(parse_int(s.substr(0, comma), what));
        if (comma == std::string_view::npos) break;
        s.remove_prefix(comma + 1);
    }
    if (out.empty())
        throw std::invalid_argument(std::string("empty ") + what + " list");
    return out;
}

} // namespace

FamilySpec parse_family(std::string_view dsl) {
    auto colon = dsl.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("family DSL needs 'name:params', got '" +
                                    std::string(dsl) + "'");
    std::string_view name = dsl.substr(0, colon);
    std::string_view rest = dsl.substr(colon + 1);

    if (name == "path") return FamilySpec::path(parse_int(rest, "path order"));
    if (name == "cycle") return FamilySpec::cycle(parse_int(rest, "cycle order"));
    if (name == "complete") return FamilySpec::complete(parse_int(rest, "complete order"));
    if (name == "star") return FamilySpec::star(parse_int(rest, "star order"));
    if (name == "hypercube") return FamilySpec::hypercube(parse_int(rest, "hypercube dimension"));
    if (name == "spider") return FamilySpec::spider(parse_int_list(rest, "spider leg"));
    if (name == "kbipartite") {
        auto parts = parse_int_list(rest, "bipartite size");
        if (parts.size() != 2)
            throw std::invalid_argument("kbipartite needs exactly two sizes");
        return FamilySpec::complete_bipartite(parts[0], parts[1]);
    }
    if (name == "circulant") {
        auto colon2 = rest.find(':');
        if (colon2 == std::string_view::npos)
            throw std::invalid_argument("circulant DSL is circulant:n:s1,s2,...");
        int n = parse_int(rest.substr(0, colon2), "circulant order");
        return FamilySpec::circulant(n, parse_int_list(rest.substr(colon2 + 1),
                                                       "connection value"));
    }
    if (name == "grid") {
        std::vector<GridFactor> factors;
        std::string_view s = rest;
        while (!s.empty()) {
            auto x = s.find('x');
            std::string_view tok = s.substr(0, x);
            if (tok.size() < 2 || (tok[0] != 'P' && tok[0] != 'C'))
                throw std::invalid_argument("grid factor must look like P10 or C6, got '" +
                                            std::string(tok) + "'");
            factors.push_back({tok[0] == 'C', parse_int(tok.substr(1), "factor length")});
            if (x == std::string_view::npos) break;
            s.remove_prefix(x + 1);
        }
        return FamilySpec::grid(std::move(factors));
    }
    throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

Graph read_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    auto next_content_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            auto pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos || line[pos] == '#') continue;
            return true;
        }
        return false;
    };

    if (!next_content_line())
        throw std::runtime_error("edge list: missing header line 'n m'");
    std::istringstream head(line);
    long long n = -1, m = -1;
    if (!(head >> n >> m) || n < 0 || m < 0)
        throw std::runtime_error("edge list line " + std::to_string(lineno) +
                                 ": expected header 'n m'");

    std::vector<std::pair<int, int>> edges;
    edges.reserve(std::size_t(m));
    for (long long i = 0; i < m; ++i) {
        if (!next_content_line())
            throw std::runtime_error("edge list: expected " + std::to_string(m) +
                                     " edges, got " + std::to_string(i));
        std::istringstream row(line);
        int u, v;
        if (!(row >> u >> v))
            throw std::runtime_error("edge list line " + std::to_string(lineno) +
                                     ": expected 'u v'");
        edges.emplace_back(u, v);
    }
    try {
        return Graph::from_edges(int(n), edges);
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("edge list: ") + e.what());
    }
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph load_graph(const std::string& file_or_dsl) {
    std::error_code ec;
    if (std::filesystem::exists(file_or_dsl, ec)) {
        std::ifstream in(file_or_dsl);
        if (!in) throw std::runtime_error("cannot open '" + file_or_dsl + "'");
        return read_edge_list(in);
    }
    return generate(parse_family(file_or_dsl));
}

Graph graph_from_edge_mask(int order, std::uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int u = 0; u < order; ++u)
        for (int v = u + 1; v < order; ++v) {
            if (mask & (std::uint64_t{1} << bit)) edges.emplace_back(u, v);
            ++bit;
        }
    return Graph::from_edges(order, edges);
}

} // namespace mdt
