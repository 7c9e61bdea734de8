#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mdt/cli.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    std::vector<const char*> argv{"mdt"};
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = mdt::cli::run(int(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("compute on family DSL inputs") {
    auto r = run_cli({"compute", "--graph", "path:10", "--variant", "dim"});
    CHECK(r.code == 0);
    CHECK(r.out.find("value: 5") != std::string::npos);

    auto r2 = run_cli({"compute", "--graph", "kbipartite:2,3", "--variant", "edim"});
    CHECK(r2.code == 0);
    CHECK(r2.out.find("value: 3") != std::string::npos);

    auto r3 = run_cli({"compute", "--graph", "complete:5", "--variant", "mdim"});
    CHECK(r3.code == 0);
    CHECK(r3.out.find("value: 5") != std::string::npos);

    // K_n answers change under the r >= 1 restriction; the note says so.
    auto r4 = run_cli({"compute", "--graph", "complete:4", "--variant", "dim"});
    CHECK(r4.out.find("restricting to r >= 1") != std::string::npos);
}

TEST_CASE("compute both modes reports agreement") {
    auto r = run_cli({"compute", "--graph", "kbipartite:3,3", "--variant", "mdim",
                      "--mode", "both"});
    CHECK(r.code == 0);
    CHECK(r.out.find("formula: 5") != std::string::npos);
    CHECK(r.out.find("agreement: yes") != std::string::npos);

    auto r2 = run_cli({"compute", "--graph", "path:12", "--variant", "dim", "--mode",
                       "formula"});
    CHECK(r2.code == 0);
    CHECK(r2.out.find("formula:") != std::string::npos);
}

TEST_CASE("compute parse failures exit with usage code") {
    auto r = run_cli({"compute", "--graph", "nosuchfamily:9"});
    CHECK(r.code == mdt::cli::kExitUsage);
    CHECK(r.err.find("unknown family") != std::string::npos);

    auto r2 = run_cli({"compute", "--graph", "path:10", "--variant", "weird"});
    CHECK(r2.code == mdt::cli::kExitUsage);

    auto r3 = run_cli({"badcommand"});
    CHECK(r3.code == mdt::cli::kExitUsage);
}

TEST_CASE("compute with custom targets from a file") {
    std::string path = "cli_targets_test.txt";
    {
        std::ofstream f(path);
        f << "# one target per line\n0\n1\n2\n0 1\n";
    }
    auto r = run_cli({"compute", "--graph", "path:3", "--variant", "custom",
                      "--custom-targets", path});
    CHECK(r.code == 0);
    CHECK(r.out.find("targets: 4") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("compute honors budget exhaustion exit code") {
    auto r = run_cli({"compute", "--graph", "hypercube:4", "--variant", "dim",
                      "--budget-nodes", "2"});
    if (r.code != 0) {
        CHECK(r.code == mdt::cli::kExitBudget);
        CHECK(r.out.find("value in [") != std::string::npos);
    }
}

TEST_CASE("sweep emits byte-stable CSV") {
    std::vector<std::string> args{"sweep", "--family", "cycle", "--from", "3",
                                  "--to", "50", "--variant", "dim"};
    auto a = run_cli(args);
    auto b = run_cli(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("family,param,variant,r_star,k_star,th\n", 0) == 0);
    CHECK(a.out.find("cycle,25,dim,") != std::string::npos);

    auto rows = std::count(a.out.begin(), a.out.end(), '\n');
    CHECK(rows == 1 + 48); // header + one row per n

    auto spot = run_cli({"sweep", "--family", "cycle", "--from", "3", "--to", "12",
                         "--variant", "dim", "--spot-check"});
    CHECK(spot.code == 0);
}

TEST_CASE("sweep paths equal cycles row by row") {
    auto p = run_cli({"sweep", "--family", "path", "--from", "3", "--to", "40",
                      "--variant", "dim"});
    auto c = run_cli({"sweep", "--family", "cycle", "--from", "3", "--to", "40",
                      "--variant", "dim"});
    std::istringstream ps(p.out), cs(c.out);
    std::string pl, cl;
    std::getline(ps, pl);
    std::getline(cs, cl);
    while (std::getline(ps, pl) && std::getline(cs, cl)) {
        auto ptail = pl.substr(pl.rfind(','));
        auto ctail = cl.substr(cl.rfind(','));
        CHECK(ptail == ctail); // same th column
    }
}

TEST_CASE("sweep solver lane covers hypercubes") {
    auto r = run_cli({"sweep", "--family", "hypercube", "--from", "1", "--to", "3",
                      "--variant", "dim"});
    CHECK(r.code == 0);
    CHECK(r.out.find("hypercube,1,dim,") != std::string::npos);
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);
}

TEST_CASE("export-ip writes an LP file") {
    std::string path = "cli_export_test.lp";
    auto r = run_cli({"export-ip", "--graph", "path:5", "--variant", "dim", "--r",
                      "1", "--out", path});
    CHECK(r.code == 0);
    std::ifstream f(path);
    REQUIRE(f.good());
    std::stringstream body;
    body << f.rdbuf();
    CHECK(body.str().find("Minimize") != std::string::npos);
    CHECK(body.str().find("x4") != std::string::npos);
    CHECK(body.str().find("variant: dim") != std::string::npos);
    std::remove(path.c_str());

    auto stdout_export = run_cli({"export-ip", "--graph", "complete:3", "--variant",
                                  "edim", "--r", "0"});
    CHECK(stdout_export.code == 0);
    CHECK(std::count(stdout_export.out.begin(), stdout_export.out.end(), '>') == 3);
}

TEST_CASE("check subcommand small corpora") {
    auto ext = run_cli({"check", "extremal-characterization", "--order", "4"});
    CHECK(ext.code == 0);
    CHECK(ext.out.find("pass (64 graphs)") != std::string::npos);

    auto low = run_cli({"check", "low-throttle", "--order", "3"});
    CHECK(low.code == 0);

    auto mono = run_cli({"check", "subtree-monotone", "--samples", "15", "--max-n",
                         "9", "--seed", "5"});
    CHECK(mono.code == 0);

    auto oracle = run_cli({"check", "oracle-equivalence", "--samples", "12",
                           "--max-n", "9", "--seed", "3"});
    CHECK(oracle.code == 0);

    auto unknown = run_cli({"check", "nonsense"});
    CHECK(unknown.code == mdt::cli::kExitUsage);
}

TEST_CASE("check reduction-identity reports the landmark-free base gap") {
    auto ok = run_cli({"check", "reduction-identity", "--base", "path:3", "--base",
                       "complete:3"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("reduction-identity: pass") != std::string::npos);

    // offset + xdim(base) understates by one when xdim(base) = 0.
    auto gap = run_cli({"check", "reduction-identity", "--base", "complete:1"});
    CHECK(gap.code == mdt::cli::kExitPropertyFailure);
    CHECK(gap.out.find("MISMATCH") != std::string::npos);
}
