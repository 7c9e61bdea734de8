#include "mdt/constructions.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mdt {

namespace {

int ceil_sqrt(long long n) {
    int q = 0;
    while (1ll * q * q < n) ++q;
    return q;
}

int ceil_div(long long a, long long b) { return int((a + b - 1) / b); }

void verify_or_mark(Configuration& cfg, bool verify) {
    if (!verify) {
        cfg.verified = false;
        return;
    }
    auto tf = target_family(cfg.graph, cfg.variant);
    cfg.verified = is_resolving(cfg.graph, tf, cfg.landmarks, cfg.radius);
    if (!cfg.verified)
        throw std::logic_error("construction '" + cfg.family + "' (" + cfg.params +
                               ") is not distance-" + std::to_string(cfg.radius) +
                               " resolving");
}

} // namespace

std::string Configuration::to_json() const {
    nlohmann::json j;
    j["family"] = family;
    j["params"] = params;
    j["landmarks"] = landmarks;
    j["radius"] = radius;
    j["variant"] = variant_name(variant);
    j["claimed_bound"] = claimed_bound;
    j["verified"] = verified;
    return j.dump();
}

std::string ReductionOutput::identity_note() const {
    std::ostringstream os;
    os << "throttling(reduced, " << variant_name(variant) << ") = " << offset
       << " + " << variant_name(variant) << "(base)";
    return os.str();
}

namespace {

ReductionOutput attach_paths(const Graph& g, int path_count, int path_len,
                             int extra_size, bool extra_edge, Variant variant,
                             int offset) {
    ReductionOutput out;
    out.variant = variant;
    out.offset = offset;
    out.base_order = g.order();
    out.path_length = path_len;

    std::vector<std::pair<int, int>> edges = g.edges();
    int next = g.order();
    for (int p = 0; p < path_count; ++p) {
        out.path_starts.push_back(next);
        for (int i = 0; i + 1 < path_len; ++i)
            edges.emplace_back(next + i, next + i + 1);
        next += path_len;
    }
    if (extra_size > 0) {
        out.extra_start = next;
        out.extra_size = extra_size;
        if (extra_edge) edges.emplace_back(next, next + 1);
        next += extra_size;
    }
    out.reduced = Graph::from_edges(next, edges);
    return out;
}

} // namespace

ReductionOutput dim_throttle_reduction(const Graph& g) {
    int n = g.order();
    if (n < 1) throw std::invalid_argument("base graph must have order >= 1");
    return attach_paths(g, n, n + 1, 1, false, Variant::Dim, 2 * n);
}

ReductionOutput edim_throttle_reduction(const Graph& g) {
    int n = g.order();
    if (g.edge_count() < 1)
        throw std::invalid_argument("edge-variant reduction needs at least one edge");
    return attach_paths(g, n, n + 2, 2, true, Variant::Edim, 2 * n);
}

ReductionOutput mdim_throttle_reduction(const Graph& g) {
    int n = g.order();
    if (n < 1) throw std::invalid_argument("base graph must have order >= 1");
    return attach_paths(g, n, n + 2, 0, false, Variant::Mdim, 3 * n);
}

Configuration min_throttle_tree(int n_target, bool verify) {
    if (n_target < 8)
        throw std::invalid_argument("caterpillar construction needs n_target >= 8");

    int leg = 1;
    while (1ll * leg * leg * leg < n_target) ++leg; // ceil(n^(1/3))
    int spine = ceil_div(n_target, leg + 1);

    // Spine vertices 0..spine-1; the leg of spine vertex i follows as `leg`
    // consecutive vertices.
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < spine; ++i) edges.emplace_back(i, i + 1);
    int next = spine;
    for (int i = 0; i < spine; ++i) {
        int prev = i;
        for (int t = 0; t < leg; ++t) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
    }

    Configuration cfg;
    cfg.graph = Graph::from_edges(next, edges);
    cfg.variant = Variant::Dim;
    cfg.family = "min_throttle_tree";
    cfg.params = "n_target=" + std::to_string(n_target) + " spine=" +
                 std::to_string(spine) + " leg=" + std::to_string(leg);

    std::set<int> marks;
    for (int i = 0; i < spine; i += leg) marks.insert(i);
    marks.insert(spine - 1);
    cfg.landmarks.assign(marks.begin(), marks.end());

    // Smallest verifying radius near 2*leg, found by binary search; the
    // resolving property is monotone in the radius.
    auto tf = target_family(cfg.graph, Variant::Dim);
    int hi = 2 * leg + 2;
    while (hi < cfg.graph.order() &&
           !is_resolving(cfg.graph, tf, cfg.landmarks, hi))
        hi *= 2;
    if (!is_resolving(cfg.graph, tf, cfg.landmarks, hi))
        throw std::logic_error("caterpillar landmarks never resolve");
    int lo = 0;
    while (lo < hi) {
        int mid = (lo + hi) / 2;
        if (is_resolving(cfg.graph, tf, cfg.landmarks, mid))
            hi = mid;
        else
            lo = mid + 1;
    }
    cfg.radius = lo;
    cfg.claimed_bound = cfg.radius + int(cfg.landmarks.size());
    verify_or_mark(cfg, verify);
    return cfg;
}

namespace {

// Candidate landmark sets for one factor, each within the 2 + m/r budget,
// ordered from the sparsest spacing down. Several spacings are offered
// because an equally spaced pattern can stop resolving the product once the
// other factors' offsets push its distinguishing landmark past the
// truncation horizon.
std::vector<std::vector<int>> factor_patterns(const GridFactor& f, int r) {
    const int m = f.length;
    const double budget = 2.0 + double(m) / r;
    std::vector<std::vector<int>> pats;
    auto add = [&](std::vector<int> marks) {
        if (double(marks.size()) > budget + 1e-9) return;
        if (std::find(pats.begin(), pats.end(), marks) == pats.end())
            pats.push_back(std::move(marks));
    };

    if (!f.cyclic) {
        for (int g = r; g >= 1; --g) {
            std::set<int> marks;
            for (int pos = 0; pos < m; pos += g) marks.insert(pos);
            marks.insert(m - 1);
            add({marks.begin(), marks.end()});
        }
    } else {
        if (m <= 2 * r) add({0, 1}); // sparse spacing would be antipodal-mirrored
        for (int g = r; g >= 1; --g) {
            if (2 * g == m) continue; // exact antipodal pair never resolves
            std::vector<int> marks;
            for (int pos = 0; pos < m; pos += g) marks.push_back(pos);
            if (marks.size() < 2) continue;
            add(std::move(marks));
        }
        add({0, 1});
    }
    return pats;
}

} // namespace

Configuration grid_resolving_set(const FamilySpec& grid_spec, int r, bool verify) {
    if (grid_spec.kind != FamilySpec::Kind::Grid)
        throw std::invalid_argument("grid_resolving_set needs a grid spec");
    if (r < 1) throw std::invalid_argument("radius must be >= 1");

    const int d = int(grid_spec.factors.size());
    std::vector<std::vector<std::vector<int>>> pats(d);
    for (int i = 0; i < d; ++i) {
        pats[i] = factor_patterns(grid_spec.factors[i], r);
        if (pats[i].empty())
            throw std::logic_error("no within-budget landmark pattern for factor " +
                                   std::to_string(i));
    }

    std::vector<long long> stride(d, 1);
    for (int i = d - 2; i >= 0; --i)
        stride[i] = stride[i + 1] * grid_spec.factors[i + 1].length;

    Configuration cfg;
    cfg.graph = generate(grid_spec);
    cfg.variant = Variant::Dim;
    cfg.radius = r;
    cfg.family = "grid_resolving_set";
    cfg.params = grid_spec.label() + " r=" + std::to_string(r);
    auto tf = target_family(cfg.graph, Variant::Dim);

    auto product_landmarks = [&](const std::vector<std::size_t>& choice) {
        std::vector<int> landmarks;
        std::vector<std::size_t> pick(d, 0);
        while (true) {
            long long v = 0;
            for (int i = 0; i < d; ++i)
                v += pats[i][choice[i]][pick[i]] * stride[i];
            landmarks.push_back(int(v));
            int i = d - 1;
            while (i >= 0 && ++pick[i] == pats[i][choice[i]].size()) pick[i--] = 0;
            if (i < 0) break;
        }
        std::sort(landmarks.begin(), landmarks.end());
        return landmarks;
    };

    // Walk pattern combinations in lexicographic order; the first verifying
    // product wins, keeping the output deterministic.
    std::vector<std::size_t> choice(d, 0);
    int attempts = 0;
    while (true) {
        auto landmarks = product_landmarks(choice);
        if (is_resolving(cfg.graph, tf, landmarks, r)) {
            cfg.landmarks = std::move(landmarks);
            break;
        }
        if (++attempts >= 256)
            throw std::logic_error("no within-budget product resolves " + cfg.params);
        int i = d - 1;
        while (i >= 0 && ++choice[i] == pats[i].size()) choice[i--] = 0;
        if (i < 0)
            throw std::logic_error("no within-budget product resolves " + cfg.params);
    }

    cfg.claimed_bound = r + int(cfg.landmarks.size());
    verify_or_mark(cfg, verify);
    return cfg;
}

Configuration circulant_config(int n, std::vector<int> connection, bool verify) {
    std::sort(connection.begin(), connection.end());
    connection.erase(std::unique(connection.begin(), connection.end()),
                     connection.end());
    if (connection.empty() || connection.front() != 1)
        throw std::invalid_argument("connection set must contain 1");
    int ell = connection.back();

    int groups = 1;
    while (1ll * groups * groups * ell * ell < n) ++groups; // ceil(sqrt(n)/ell)
    if (groups < 3 || 1ll * groups * (ell + 1) > n)
        throw std::invalid_argument("order too small for grouped landmarks (needs >= 3 "
                                    "groups of " + std::to_string(ell) +
                                    " with gaps between them)");

    Configuration cfg;
    cfg.graph = generate(FamilySpec::circulant(n, connection));
    cfg.variant = Variant::Dim;
    for (int j = 0; j < groups; ++j) {
        int start = int(1ll * j * n / groups);
        for (int i = 0; i < ell; ++i) cfg.landmarks.push_back((start + i) % n);
    }
    std::sort(cfg.landmarks.begin(), cfg.landmarks.end());
    cfg.radius = ceil_sqrt(n) + ell;
    cfg.claimed_bound = cfg.radius + int(cfg.landmarks.size());
    cfg.family = "circulant_config";
    {
        std::ostringstream os;
        os << "n=" << n << " ell=" << ell << " groups=" << groups;
        cfg.params = os.str();
    }
    verify_or_mark(cfg, verify);
    return cfg;
}

Configuration cycle_variant_config(int n, Variant variant, bool verify) {
    if (n < 5) throw std::invalid_argument("cycle construction needs n >= 5");

    Configuration cfg;
    cfg.graph = generate(FamilySpec::cycle(n));
    cfg.variant = variant;
    cfg.family = "cycle_variant_config";

    if (variant == Variant::Edim) {
        int k = 1;
        while (6ll * k * k < n) ++k; // ceil(sqrt(n/6))
        int short_gap = ceil_div(n, 3 * k);
        int long_gap = ceil_div(2ll * n, 3 * k);
        long long pos = 0;
        for (int i = 0; i < 2 * k; ++i) {
            cfg.landmarks.push_back(int(pos % n));
            pos += (i % 2 == 0) ? short_gap : long_gap;
        }
        std::sort(cfg.landmarks.begin(), cfg.landmarks.end());
        cfg.landmarks.erase(std::unique(cfg.landmarks.begin(), cfg.landmarks.end()),
                            cfg.landmarks.end());
        cfg.radius = short_gap;
        cfg.params = "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                     " gaps=" + std::to_string(short_gap) + "/" +
                     std::to_string(long_gap);
    } else if (variant == Variant::Mdim) {
        int m = ceil_sqrt(n);
        int base = n / m, rem = n % m;
        // Remainder spread one extra vertex per gap, starting from gap 0.
        long long pos = 0;
        for (int i = 0; i < m; ++i) {
            cfg.landmarks.push_back(int(pos));
            pos += base + (i < rem ? 1 : 0);
        }
        cfg.radius = m;
        cfg.params = "n=" + std::to_string(n) + " landmarks=" + std::to_string(m);
    } else {
        throw std::invalid_argument("cycle construction covers edim and mdim only");
    }

    cfg.claimed_bound = cfg.radius + int(cfg.landmarks.size());
    verify_or_mark(cfg, verify);
    return cfg;
}

Configuration spider_config(const std::vector<int>& legs, bool verify) {
    Configuration cfg;
    cfg.graph = generate(FamilySpec::spider(legs));
    cfg.variant = Variant::Dim;
    cfg.family = "spider_config";

    int n = cfg.graph.order();
    int step = ceil_sqrt(n);

    // Body vertex 0 always carries a landmark; each leg gets landmarks every
    // `step` vertices plus one on its end, giving at most one short interval.
    std::set<int> marks{0};
    int start = 1;
    for (int len : legs) {
        for (int depth = step; depth < len; depth += step)
            marks.insert(start + depth - 1);
        marks.insert(start + len - 1);
        start += len;
    }
    cfg.landmarks.assign(marks.begin(), marks.end());
    cfg.radius = step;
    cfg.claimed_bound = cfg.radius + int(cfg.landmarks.size());
    {
        std::ostringstream os;
        os << "legs=";
        for (std::size_t i = 0; i < legs.size(); ++i)
            os << (i ? "," : "") << legs[i];
        cfg.params = os.str();
    }
    verify_or_mark(cfg, verify);
    return cfg;
}

} // namespace mdt
