#include "mdt/cli.hpp"

#include "mdt/constructions.hpp"
#include "mdt/formulas.hpp"
#include "mdt/generators.hpp"
#include "mdt/ip_export.hpp"
#include "mdt/random_graphs.hpp"
#include "mdt/solver.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <climits>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace mdt::cli {

namespace {

using nlohmann::json;

int effective_threads(int requested) {
#ifdef _OPENMP
    if (requested > 0) {
        omp_set_num_threads(requested);
        return requested;
    }
    return omp_get_max_threads();
#else
    (void)requested;
    return 1;
#endif
}

std::vector<std::vector<int>> read_targets_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open targets file '" + path + "'");
    std::vector<std::vector<int>> targets;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        if (line.substr(pos) == "-") {
            targets.push_back({});
            continue;
        }
        std::istringstream row(line);
        std::vector<int> t;
        int v;
        while (row >> v) t.push_back(v);
        if (t.empty() || !row.eof())
            throw std::runtime_error("targets file line " + std::to_string(lineno) +
                                     ": expected vertex indices or '-'");
        targets.push_back(std::move(t));
    }
    return targets;
}

json result_to_json(const ThrottlingResult& res) {
    json j;
    j["status"] = status_name(res.status);
    j["value"] = res.value;
    j["r_star"] = res.r_star;
    j["witness"] = res.witness;
    j["value_lower"] = res.value_lower;
    j["value_upper"] = res.value_upper;
    j["nodes"] = res.nodes;
    j["sweep_cap"] = res.sweep_cap;
    j["cap_active"] = res.cap_active;
    json table = json::array();
    for (const auto& [r, pr] : res.per_r) {
        json row;
        row["r"] = r;
        if (pr.lower == INT_MAX) {
            row["status"] = "infeasible";
        } else {
            row["lower"] = pr.lower;
            row["upper"] = pr.upper;
            row["optimal"] = pr.optimal;
        }
        table.push_back(row);
    }
    j["per_r"] = table;
    return j;
}

void print_result(std::ostream& out, const ThrottlingResult& res) {
    out << "status: " << status_name(res.status) << "\n";
    if (res.status == SolveStatus::Optimal) {
        out << "value: " << res.value << "   r*: " << res.r_star
            << "   landmarks: " << res.witness.size() << "\n";
        out << "witness:";
        for (int v : res.witness) out << ' ' << v;
        out << "\n";
    } else if (res.status == SolveStatus::BudgetExhausted) {
        out << "value in [" << res.value_lower << ", " << res.value_upper << "]\n";
    }
    out << "per-radius table:\n";
    out << "  r     dim_r\n";
    for (const auto& [r, pr] : res.per_r) {
        out << "  " << std::left << std::setw(5) << r;
        if (pr.lower == INT_MAX)
            out << "infeasible";
        else if (pr.optimal)
            out << pr.value();
        else
            out << "[" << pr.lower << "," << pr.upper << "]";
        out << "\n";
    }
    if (res.cap_active)
        out << "note: sweep capped at r = " << res.sweep_cap
            << " (truncated dimension is stable beyond the largest finite distance)\n";
}

int status_exit_code(SolveStatus s) {
    switch (s) {
    case SolveStatus::Optimal: return kExitOk;
    case SolveStatus::Infeasible: return kExitInfeasible;
    case SolveStatus::BudgetExhausted: return kExitBudget;
    }
    return kExitUsage;
}

// ---------------------------------------------------------------- compute

struct ComputeOptions {
    std::string graph;
    std::string variant = "dim";
    std::string custom_targets;
    std::string mode = "solve";
    std::string json_path;
    int r_min = 0;
    std::uint64_t budget_nodes = 0;
    double budget_secs = 0;
    bool canonical = false;
    int threads = 0;
};

int do_compute(const ComputeOptions& opt, std::ostream& out, std::ostream& err) {
    auto var = parse_variant(opt.variant);
    if (!var) {
        err << "unknown variant '" << opt.variant << "'\n";
        return kExitUsage;
    }
    int threads = effective_threads(opt.threads);

    Graph g;
    try {
        g = load_graph(opt.graph);
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    TargetFamily tf;
    try {
        if (*var == Variant::Custom)
            tf = target_family(g, *var, read_targets_file(opt.custom_targets));
        else
            tf = target_family(g, *var);
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    out << "graph: " << opt.graph << "  n=" << g.order() << " m=" << g.edge_count()
        << "\n";
    out << "variant: " << variant_name(*var) << "  targets: " << tf.size() << "\n";

    json record;
    record["input"] = opt.graph;
    record["variant"] = variant_name(*var);
    record["mode"] = opt.mode;

    std::optional<FormulaValue> formula;
    if (opt.mode == "formula" || opt.mode == "both") {
        try {
            formula = th_formula(parse_family(opt.graph), *var);
        } catch (const std::exception& e) {
            err << "formula mode: " << e.what() << "\n";
            return kExitUsage;
        }
        if (formula->kind == FormulaValue::Kind::Envelope) {
            out << "formula: ~ " << formula->envelope.scale << " * n^"
                << formula->envelope.exponent << " (slack "
                << formula->envelope.slack * 100 << "%)\n";
            record["formula"] = {{"kind", "envelope"},
                                 {"scale", formula->envelope.scale},
                                 {"exponent", formula->envelope.exponent}};
        } else {
            out << "formula: " << formula->value << "\n";
            record["formula"] = {{"kind", formula->kind == FormulaValue::Kind::Exact
                                              ? "exact"
                                              : "exact_by_sweep"},
                                 {"value", formula->value}};
        }
    }

    int code = kExitOk;
    if (opt.mode == "solve" || opt.mode == "both") {
        SolveBudget budget{opt.budget_nodes, opt.budget_secs, opt.canonical};
        auto t0 = std::chrono::steady_clock::now();
        auto res = throttling_number(g, tf, budget, opt.r_min, threads > 1);
        auto ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        print_result(out, res);
        if (opt.r_min == 0 && res.status == SolveStatus::Optimal && res.r_star == 0) {
            int v1 = value_with_r_min_one(res);
            if (v1 != res.value)
                out << "note: restricting to r >= 1 changes the value to " << v1
                    << "\n";
        }
        record["solve"] = result_to_json(res);
        if (res.status == SolveStatus::Optimal) {
            SolveOutcome best;
            best.status = SolveStatus::Optimal;
            best.value = res.value - res.r_star;
            best.witness = res.witness;
            best.nodes = res.nodes;
            record["best_solve"] =
                json::parse(solve_record_json(res.variant, res.r_star, best));
        }
        record["elapsed_ms"] = ms;
        if (formula && res.status == SolveStatus::Optimal &&
            formula->kind != FormulaValue::Kind::Envelope) {
            bool agree = formula->value == res.value;
            record["agreement"] = agree;
            out << "agreement: " << (agree ? "yes" : "NO") << "\n";
        }
        code = status_exit_code(res.status);
    }

    if (!opt.json_path.empty()) {
        std::ofstream jf(opt.json_path);
        jf << record.dump(2) << "\n";
    }
    return code;
}

// ------------------------------------------------------------------ sweep

struct SweepOptions {
    std::string family;
    std::string variant = "dim";
    int from = 0, to = 0;
    std::string csv_path;
    bool spot_check = false;
    std::uint64_t budget_nodes = 0;
    double budget_secs = 0;
    int threads = 0;
};

int do_sweep(const SweepOptions& opt, std::ostream& out, std::ostream& err) {
    auto var = parse_variant(opt.variant);
    if (!var || *var == Variant::Custom) {
        err << "sweep needs variant dim, edim or mdim\n";
        return kExitUsage;
    }
    int threads = effective_threads(opt.threads);
    bool formula_lane = (opt.family == "path" || opt.family == "cycle") &&
                        *var == Variant::Dim;

    std::ostringstream csv;
    csv << "family,param,variant,r_star,k_star,th\n";
    bool any_budget = false;

    for (int param = opt.from; param <= opt.to; ++param) {
        FamilySpec spec;
        try {
            spec = parse_family(opt.family + ":" + std::to_string(param));
        } catch (const std::exception& e) {
            err << e.what() << "\n";
            return kExitUsage;
        }
        if (formula_lane) {
            auto detail = opt.family == "path" ? path_throttle_sweep(param)
                                               : cycle_throttle_sweep(param);
            csv << opt.family << ',' << param << ',' << variant_name(*var) << ','
                << detail.r_star << ',' << detail.k_star << ',' << detail.value
                << '\n';
            if (opt.spot_check && param <= 14) {
                auto res = throttling_number(generate(spec), *var);
                if (res.status != SolveStatus::Optimal || res.value != detail.value) {
                    err << "spot check failed at " << opt.family << ":" << param
                        << ": formula " << detail.value << ", solver "
                        << (res.status == SolveStatus::Optimal
                                ? std::to_string(res.value)
                                : status_name(res.status))
                        << "\n";
                    return kExitPropertyFailure;
                }
            }
            continue;
        }
        SolveBudget budget{opt.budget_nodes, opt.budget_secs, false};
        auto res = throttling_number(generate(spec), *var, budget, 0, threads > 1);
        if (res.status == SolveStatus::Optimal) {
            int k_star = res.per_r.at(res.r_star).value();
            csv << opt.family << ',' << param << ',' << variant_name(*var) << ','
                << res.r_star << ',' << k_star << ',' << res.value << '\n';
        } else {
            any_budget = true;
            csv << opt.family << ',' << param << ',' << variant_name(*var)
                << ",-1,-1," << res.value_lower << ':' << res.value_upper << '\n';
        }
    }

    if (opt.csv_path.empty()) {
        out << csv.str();
    } else {
        std::ofstream f(opt.csv_path);
        if (!f) {
            err << "cannot write '" << opt.csv_path << "'\n";
            return kExitUsage;
        }
        f << csv.str();
        out << "wrote " << opt.csv_path << "\n";
    }
    return any_budget ? kExitBudget : kExitOk;
}

// -------------------------------------------------------------- export-ip

int do_export_ip(const std::string& graph_arg, const std::string& variant_arg,
                 int r, const std::string& out_path, std::ostream& out,
                 std::ostream& err) {
    auto var = parse_variant(variant_arg);
    if (!var || *var == Variant::Custom) {
        err << "export-ip needs variant dim, edim or mdim\n";
        return kExitUsage;
    }
    Graph g;
    try {
        g = load_graph(graph_arg);
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }
    std::string text = export_ip(g, *var, r);
    if (out_path.empty()) {
        out << text;
    } else {
        std::ofstream f(out_path);
        if (!f) {
            err << "cannot write '" << out_path << "'\n";
            return kExitUsage;
        }
        f << text;
        std::size_t rows = std::count(text.begin(), text.end(), '\n');
        out << "wrote " << out_path << " (" << g.order() << " binaries, "
            << rows << " lines)\n";
    }
    return kExitOk;
}

// ------------------------------------------------------------------ check

struct CheckOptions {
    std::string property;
    int order = 4;
    int samples = 100;
    int max_n = 12;
    unsigned seed = 12345;
    std::vector<std::string> bases;
    int threads = 0;
};

std::uint64_t mask_count(int order) {
    return std::uint64_t{1} << (order * (order - 1) / 2);
}

int check_extremal(const CheckOptions& opt, std::ostream& out, std::ostream& err) {
    int n = opt.order;
    if (n < 3 || n > 6) {
        err << "extremal-characterization supports orders 3..6\n";
        return kExitUsage;
    }
    std::uint64_t total = mask_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Graph g = graph_from_edge_mask(n, mask);
        bool ext = is_extremal_thdim(g);
        bool cls = classify_extremal(g).extremal();
        auto res = throttling_number(g, Variant::Dim);
        bool attains = res.value == n - 1;
        bool dual = is_extremal_thdim(complement(g)) == ext;
        if (ext != attains || cls != attains || !dual) {
            err << "counterexample at mask " << mask << " (order " << n
                << "): th=" << res.value << " extremal-test=" << ext
                << " classifier=" << cls << " complement-dual=" << dual << "\n";
            err << "edges:";
            for (auto [u, v] : g.edges()) err << " (" << u << "," << v << ")";
            err << "\n";
            return kExitPropertyFailure;
        }
    }
    out << "extremal-characterization order " << n << ": pass (" << total
        << " graphs)\n";
    return kExitOk;
}

int check_low_throttle(const CheckOptions& opt, std::ostream& out, std::ostream& err) {
    int n = opt.order;
    if (n < 1 || n > 6) {
        err << "low-throttle supports orders 1..6\n";
        return kExitUsage;
    }
    auto probe = [&](const Graph& g) -> bool {
        for (Variant var : {Variant::Dim, Variant::Edim, Variant::Mdim}) {
            auto res = throttling_number(g, var);
            auto cls = low_throttle_class(g, var);
            bool ok = ((res.value == 0) == (cls == LowThrottle::Zero)) &&
                      ((res.value == 1) == (cls == LowThrottle::One));
            if (!ok) {
                err << "low-throttle mismatch (" << variant_name(var)
                    << "): th=" << res.value << " targets-class="
                    << (cls == LowThrottle::Zero ? "zero"
                        : cls == LowThrottle::One ? "one" : "higher")
                    << " edges:";
                for (auto [u, v] : g.edges()) err << " (" << u << "," << v << ")";
                err << "\n";
                return false;
            }
        }
        return true;
    };
    std::uint64_t total = mask_count(n);
    for (std::uint64_t mask = 0; mask < total; ++mask)
        if (!probe(graph_from_edge_mask(n, mask))) return kExitPropertyFailure;
    for (int iso = 1; iso <= 6; ++iso)
        if (!probe(Graph::from_edges(iso, {}))) return kExitPropertyFailure;
    out << "low-throttle order " << n << " plus edgeless 1..6: pass\n";
    return kExitOk;
}

int check_subtree_monotone(const CheckOptions& opt, std::ostream& out,
                           std::ostream& err) {
    std::mt19937 rng(opt.seed);
    std::uniform_int_distribution<int> order_dist(2, std::max(2, opt.max_n));
    for (int i = 0; i < opt.samples; ++i) {
        int n = order_dist(rng);
        Graph tree = random_tree(n, rng);
        std::uniform_int_distribution<int> sub_dist(1, n);
        Graph sub = random_subtree(tree, sub_dist(rng), rng);
        for (Variant var : {Variant::Dim, Variant::Edim, Variant::Mdim}) {
            int big = throttling_number(tree, var).value;
            int small = throttling_number(sub, var).value;
            if (small > big) {
                err << "monotonicity violated (" << variant_name(var)
                    << ", sample " << i << "): subtree " << small << " > tree "
                    << big << "\n";
                err << "tree edges:";
                for (auto [u, v] : tree.edges()) err << " (" << u << "," << v << ")";
                err << "\nsubtree edges:";
                for (auto [u, v] : sub.edges()) err << " (" << u << "," << v << ")";
                err << "\n";
                return kExitPropertyFailure;
            }
        }
    }
    out << "subtree-monotone: pass (" << opt.samples << " samples, seed "
        << opt.seed << ")\n";
    return kExitOk;
}

int check_oracle(const CheckOptions& opt, std::ostream& out, std::ostream& err) {
    std::mt19937 rng(opt.seed);
    int max_n = std::min(opt.max_n, 12);
    std::uniform_int_distribution<int> order_dist(4, std::max(4, max_n));
    std::uniform_real_distribution<double> p_dist(0.2, 0.8);
    std::uniform_int_distribution<int> r_dist(0, 4);
    const Variant variants[] = {Variant::Dim, Variant::Edim, Variant::Mdim};
    for (int i = 0; i < opt.samples; ++i) {
        Graph g = random_graph(order_dist(rng), p_dist(rng), rng);
        Variant var = variants[i % 3];
        int r = r_dist(rng);
        auto tf = target_family(g, var);
        auto fast = min_hitting_set(compile_constraints(g, tf, r));
        auto slow = exhaustive_min_resolving(g, tf, r);
        bool witness_ok = fast.status != SolveStatus::Optimal ||
                          is_resolving(g, tf, fast.witness, r);
        if (fast.status != SolveStatus::Optimal || fast.value != slow.value ||
            !witness_ok) {
            err << "oracle mismatch (sample " << i << ", " << variant_name(var)
                << ", r=" << r << "): solver "
                << (fast.status == SolveStatus::Optimal ? std::to_string(fast.value)
                                                        : status_name(fast.status))
                << ", exhaustive " << slow.value
                << (witness_ok ? "" : ", witness not resolving") << "\nedges:";
            for (auto [u, v] : g.edges()) err << " (" << u << "," << v << ")";
            err << "\n";
            return kExitPropertyFailure;
        }
    }
    out << "oracle-equivalence: pass (" << opt.samples << " samples, seed "
        << opt.seed << ")\n";
    return kExitOk;
}

int check_reduction(const CheckOptions& opt, std::ostream& out, std::ostream& err) {
    std::vector<std::string> bases = opt.bases;
    if (bases.empty())
        bases = {"complete:1", "complete:2", "path:3", "complete:3"};
    bool all_ok = true;
    for (const auto& dsl : bases) {
        Graph base = load_graph(dsl);
        struct Leg {
            ReductionOutput red;
            bool applicable;
        };
        std::vector<Leg> legs;
        legs.push_back({dim_throttle_reduction(base), true});
        legs.push_back({{}, false});
        if (base.edge_count() >= 1)
            legs[1] = {edim_throttle_reduction(base), true};
        legs.push_back({mdim_throttle_reduction(base), true});
        for (const auto& leg : legs) {
            if (!leg.applicable) continue;
            const auto& red = leg.red;
            int lhs = throttling_number(red.reduced, red.variant).value;
            auto dim_out = truncated_dimension(base, red.variant, base.order());
            int rhs = red.offset + dim_out.value;
            bool ok = lhs == rhs;
            all_ok = all_ok && ok;
            out << "base=" << dsl << " variant=" << variant_name(red.variant)
                << ": th(reduced)=" << lhs << " offset+xdim=" << rhs
                << (ok ? " ok" : " MISMATCH") << "\n";
            if (!ok)
                err << "reduction identity failed for " << dsl << " ("
                    << variant_name(red.variant) << ")\n";
        }
    }
    out << (all_ok ? "reduction-identity: pass\n" : "reduction-identity: FAIL\n");
    return all_ok ? kExitOk : kExitPropertyFailure;
}

int do_check(const CheckOptions& opt, std::ostream& out, std::ostream& err) {
    effective_threads(opt.threads);
    if (opt.property == "extremal-characterization") return check_extremal(opt, out, err);
    if (opt.property == "low-throttle") return check_low_throttle(opt, out, err);
    if (opt.property == "subtree-monotone") return check_subtree_monotone(opt, out, err);
    if (opt.property == "oracle-equivalence") return check_oracle(opt, out, err);
    if (opt.property == "reduction-identity") return check_reduction(opt, out, err);
    err << "unknown property '" << opt.property
        << "' (expected extremal-characterization, low-throttle, subtree-monotone, "
           "oracle-equivalence or reduction-identity)\n";
    return kExitUsage;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact throttling numbers for metric dimension and its "
                 "edge, mixed and custom subset variants"};
    app.require_subcommand(1);

    ComputeOptions copt;
    auto* compute = app.add_subcommand("compute", "Throttling number of one graph");
    compute->add_option("--graph", copt.graph, "edge-list file or family DSL")->required();
    compute->add_option("--variant", copt.variant, "dim|edim|mdim|custom");
    compute->add_option("--custom-targets", copt.custom_targets,
                        "file with one target per line (custom variant)");
    compute->add_option("--r-min", copt.r_min, "smallest radius (0 or 1)")
        ->check(CLI::Range(0, 1));
    compute->add_option("--budget-nodes", copt.budget_nodes, "node limit per solve");
    compute->add_option("--budget-secs", copt.budget_secs, "wall-clock limit");
    compute->add_flag("--canonical", copt.canonical, "deterministic canonical witness");
    compute->add_option("--json", copt.json_path, "write a JSON run record");
    compute->add_option("--mode", copt.mode, "solve|formula|both")
        ->check(CLI::IsMember({"solve", "formula", "both"}));
    compute->add_option("--threads", copt.threads, "worker threads (0 = all cores)");

    SweepOptions sopt;
    auto* sweepcmd = app.add_subcommand("sweep", "Family sweep to CSV");
    sweepcmd->add_option("--family", sopt.family, "path|cycle|complete|star|hypercube")
        ->required();
    sweepcmd->add_option("--from", sopt.from, "first parameter value")->required();
    sweepcmd->add_option("--to", sopt.to, "last parameter value")->required();
    sweepcmd->add_option("--variant", sopt.variant, "dim|edim|mdim");
    sweepcmd->add_option("--csv", sopt.csv_path, "output path (default stdout)");
    sweepcmd->add_flag("--spot-check", sopt.spot_check,
                       "cross-check formula rows against the solver (n <= 14)");
    sweepcmd->add_option("--budget-nodes", sopt.budget_nodes, "node limit per solve");
    sweepcmd->add_option("--budget-secs", sopt.budget_secs, "wall-clock limit per graph");
    sweepcmd->add_option("--threads", sopt.threads, "worker threads (0 = all cores)");

    std::string ip_graph, ip_variant = "dim", ip_out;
    int ip_r = 0;
    auto* exportcmd = app.add_subcommand("export-ip", "Write the binary program as LP text");
    exportcmd->add_option("--graph", ip_graph, "edge-list file or family DSL")->required();
    exportcmd->add_option("--variant", ip_variant, "dim|edim|mdim");
    exportcmd->add_option("--r", ip_r, "truncation radius")->required()
        ->check(CLI::NonNegativeNumber);
    exportcmd->add_option("--out", ip_out, "output path (default stdout)");

    CheckOptions kopt;
    auto* checkcmd = app.add_subcommand("check", "Run a property suite");
    checkcmd->add_option("property", kopt.property,
                         "extremal-characterization|low-throttle|subtree-monotone|"
                         "oracle-equivalence|reduction-identity")
        ->required();
    checkcmd->add_option("--order", kopt.order, "graph order for exhaustive corpora");
    checkcmd->add_option("--samples", kopt.samples, "sample count for random corpora");
    checkcmd->add_option("--max-n", kopt.max_n, "largest random graph order");
    checkcmd->add_option("--seed", kopt.seed, "random seed (default 12345)");
    checkcmd->add_option("--base", kopt.bases, "base graph DSL (repeatable)");
    checkcmd->add_option("--threads", kopt.threads, "worker threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kExitOk;
        }
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*compute) return do_compute(copt, out, err);
        if (*sweepcmd) return do_sweep(sopt, out, err);
        if (*exportcmd) return do_export_ip(ip_graph, ip_variant, ip_r, ip_out, out, err);
        if (*checkcmd) return do_check(kopt, out, err);
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace mdt::cli
