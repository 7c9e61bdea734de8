#ifndef MDT_GENERATORS_HPP
#define MDT_GENERATORS_HPP

#include "mdt/graph.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace mdt {

struct GridFactor {
    bool cyclic = false; // path factor otherwise
    int length = 0;
};

/// Parametric description of a generated graph family.
///
/// Vertex numbering is fixed per family so that landmark witnesses are
/// reproducible across runs:
///   - paths/cycles: sequential along the path/cycle
///   - complete bipartite: part of size s first, then part of size t
///   - star: center at 0
///   - spider: body vertex at 0, legs numbered consecutively
///   - circulant: 0..n-1 with i~j iff (i-j mod n) in S or -S
///   - grid: row-major over factor coordinates, first factor slowest
///   - hypercube: vertex v is the bitstring of v, edges flip one bit
///   - disjoint union: parts in order, later parts offset by earlier orders
struct FamilySpec {
    enum class Kind {
        Path, Cycle, Complete, CompleteBipartite, Star, Spider,
        Circulant, Grid, Hypercube, DisjointUnion, Complement, EdgeList
    };

    Kind kind = Kind::Path;
    int n = 0;                       // path/cycle/complete/star order
    int s = 0, t = 0;                // complete bipartite parts
    int d = 0;                       // hypercube dimension
    std::vector<int> legs;           // spider leg lengths
    std::vector<int> connection;     // circulant connection set
    std::vector<GridFactor> factors; // grid factors
    std::vector<FamilySpec> parts;   // disjoint union (>=1), complement (1)
    int edge_order = 0;
    std::vector<std::pair<int, int>> edge_list;

    static FamilySpec path(int n);
    static FamilySpec cycle(int n);
    static FamilySpec complete(int n);
    static FamilySpec complete_bipartite(int s, int t);
    static FamilySpec star(int n);
    static FamilySpec spider(std::vector<int> legs);
    static FamilySpec circulant(int n, std::vector<int> connection);
    static FamilySpec grid(std::vector<GridFactor> factors);
    static FamilySpec hypercube(int d);

    /// Short name such as "cycle:25" or "circulant:17:1,2".
    std::string label() const;
};

/// Builds the canonical graph of the family. Throws std::invalid_argument
/// on parameter violations (e.g. circulant connection outside [1, n/2], or
/// a spider with fewer than three legs unless allow_degenerate_spider).
Graph generate(const FamilySpec& spec, bool allow_degenerate_spider = false);

/// Parses the family DSL: "path:50", "cycle:25", "complete:5", "star:9",
/// "kbipartite:3,4", "spider:2,2,2", "circulant:17:1,2", "grid:P10xC6",
/// "hypercube:5". Throws std::invalid_argument with a diagnostic.
FamilySpec parse_family(std::string_view dsl);

/// Edge-list text: first line "n m", then m lines "u v" (0-indexed).
/// Lines starting with '#' are comments. Parse errors report line numbers.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

/// Interprets the argument as a file path if such a file exists, otherwise
/// as a family DSL string.
Graph load_graph(const std::string& file_or_dsl);

/// Labeled graph on `order` vertices from a bitmask over vertex pairs taken
/// in lexicographic order: bit 0 is (0,1), bit 1 is (0,2), and so on.
/// Enumerating all masks enumerates every labeled graph of that order.
Graph graph_from_edge_mask(int order, std::uint64_t mask);

} // namespace mdt

#endif
