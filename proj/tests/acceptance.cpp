// Acceptance checks for the whole suite. Each check prints exactly one
// PASS/FAIL line with the numbers that justify the verdict; the process
// exits nonzero when any check fails. Runtime bars are enforced with a
// monotonic clock around the work they cover.

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "untangle/branch.hpp"
#include "untangle/core.hpp"
#include "untangle/dp.hpp"
#include "untangle/fileio.hpp"
#include "untangle/layerzero.hpp"
#include "untangle/oracle.hpp"
#include "untangle/patterns.hpp"
#include "untangle/reductions.hpp"

using namespace untangle;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(bool ok, const std::string& label, const std::string& detail) {
    std::printf("%s %s: %s\n", ok ? "PASS" : "FAIL", label.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::string data_path(const std::string& name) {
    return std::string(UNTANGLE_DATA_DIR) + "/" + name;
}

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Runs the shipped command-line binary, capturing stdout.
RunResult run_cli(const std::string& args) {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("untangle_acceptance_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    const fs::path out = dir / "stdout.txt";
    const std::string cmd = std::string(UNTANGLE_BIN) + " " + args + " > " +
                            out.string() + " 2> /dev/null";
    const int status = std::system(cmd.c_str());
    std::ifstream in(out, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, os.str()};
}

fs::path scratch_file(const std::string& name) {
    static const fs::path dir = [] {
        fs::path d = fs::temp_directory_path() /
                     ("untangle_acceptance_files_" + std::to_string(::getpid()));
        fs::create_directories(d);
        return d;
    }();
    return dir / name;
}

// ---- 1: the shipped demo instance through the command line ----

void check_demo_cli() {
    bool ok = true;
    std::ostringstream detail;
    const struct {
        const char* objective;
        int ell;
        const char* witness_name;
    } runs[] = {{"max", 1, "accept_max.tl"}, {"sum", 4, "accept_sum.tl"}};
    for (const auto& r : runs) {
        const fs::path witness = scratch_file(r.witness_name);
        const auto t0 = std::chrono::steady_clock::now();
        RunResult solve = run_cli("solve " + data_path("demo.tg") + " --objective " +
                                  r.objective + " --k 2 --ell " +
                                  std::to_string(r.ell) + " --witness " +
                                  witness.string());
        const double elapsed = seconds_since(t0);
        const bool answered = solve.exit_code == 0 && solve.out == "YES\n";
        RunResult verify = run_cli("verify " + data_path("demo.tg") + " " +
                                   witness.string() + " --objective " + r.objective +
                                   " --k 2 --ell " + std::to_string(r.ell));
        const bool verified = verify.exit_code == 0 && verify.out == "VALID\n";
        ok = ok && answered && verified && elapsed < 10.0;
        detail << r.objective << " YES=" << (answered ? "yes" : "NO") << " witness="
               << (verified ? "VALID" : "invalid") << " " << elapsed << "s; ";
    }
    report(ok, "demo instance via the command line",
           detail.str() + "bar: both YES with VALID witnesses in under 10 s each");
}

// ---- 2: production solvers against the exhaustive reference ----

void check_solver_agreement() {
    const auto t0 = std::chrono::steady_clock::now();
    long long instances = 0, disagreements = 0;
    std::uint64_t seed = 1000;
    for (int n = 1; n <= 3; ++n)
        for (int tau = 1; tau <= 4; ++tau)
            for (double p : {0.3, 0.6, 0.9})
                for (int rep = 0; rep < 6; ++rep) {
                    const TemporalGraph g = generate_random(n, tau, p, seed++);
                    for (int k = 0; k <= 2; ++k)
                        for (int ell = 0; ell <= 2; ++ell) {
                            const Objective omax{ObjectiveKind::MaxLen, ell};
                            const Objective osum{ObjectiveKind::SumLen, ell};
                            const bool truth_max =
                                oracle_solve(g, UniformBudget{k}, omax).yes;
                            const bool truth_sum =
                                oracle_solve(g, UniformBudget{k}, osum).yes;
                            ++instances;
                            if (solve_max_dp(g, k, ell).yes != truth_max)
                                ++disagreements;
                            if (solve_max_branching(g, k, ell).yes != truth_max)
                                ++disagreements;
                            if (ell == 0 &&
                                solve_zero(g, UniformBudget{k}).yes != truth_max)
                                ++disagreements;
                            ++instances;
                            if (solve_sum_dp(g, k, ell).yes != truth_sum)
                                ++disagreements;
                            if (solve_sum_patterns(g, k, ell).yes != truth_sum)
                                ++disagreements;
                        }
                    // per-vertex budgets: the assignment solver carries them
                    const NonUniformBudget specs[] = {
                        {{{1, 1}, {2, 2}, {3, 1}}}, {{{1, 0}, {2, 1}, {3, 2}}}};
                    for (const NonUniformBudget& raw : specs) {
                        NonUniformBudget nb;
                        for (int v = 1; v <= n; ++v)
                            nb.entries.push_back(raw.entries[v - 1]);
                        for (ObjectiveKind kind :
                             {ObjectiveKind::MaxLen, ObjectiveKind::SumLen}) {
                            ++instances;
                            const bool truth =
                                oracle_solve(g, nb, Objective{kind, 0}).yes;
                            if (solve_zero(g, nb).yes != truth) ++disagreements;
                        }
                    }
                }
    const double elapsed = seconds_since(t0);
    std::ostringstream detail;
    detail << instances << " instances, " << disagreements << " disagreements, "
           << elapsed << "s; bar: >= 2000 instances, zero disagreements, under 600 s";
    report(instances >= 2000 && disagreements == 0 && elapsed < 600.0,
           "solver agreement sweep", detail.str());
}

// ---- 3: identical layers against graph coloring ----

bool brute_three_colorable(const StaticGraph& g) {
    std::vector<int> color(g.n, 0);
    long total = 1;
    for (int i = 0; i < g.n; ++i) total *= 3;
    for (long code = 0; code < total; ++code) {
        long c = code;
        for (int i = 0; i < g.n; ++i, c /= 3) color[i] = static_cast<int>(c % 3);
        bool ok = true;
        for (const Edge& e : g.edges)
            if (color[e.u - 1] == color[e.v - 1]) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return g.n == 0;
}

void check_coloring_equivalence() {
    long long graphs = 0, mismatches = 0;
    std::uint64_t seed = 3000;
    for (int rep = 0; rep < 210; ++rep) {
        const int n = 3 + rep % 3;  // graphs on 3..5 vertices
        const double p = rep % 2 == 0 ? 0.4 : 0.7;
        const TemporalGraph layer = generate_random(n, 1, p, seed++);
        const StaticGraph g{n, layer.layer(1)};
        const TemporalGraph identical(n, 3,
                                      {layer.layer(1), layer.layer(1),
                                       layer.layer(1)});
        ++graphs;
        const bool brute = brute_three_colorable(g);
        if (solve_zero(identical, UniformBudget{2}).yes != brute) ++mismatches;
        if (solve_ab_coloring(g, 3, 1).yes != brute) ++mismatches;
    }
    const StaticGraph c5{5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}};
    const StaticGraph k4{4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
    const bool landmarks =
        solve_ab_coloring(c5, 5, 2).yes && !solve_ab_coloring(k4, 3, 1).yes;
    std::ostringstream detail;
    detail << graphs << " graphs, " << mismatches
           << " mismatches, five-cycle 5:2 " << (solve_ab_coloring(c5, 5, 2).yes ? "YES" : "NO")
           << ", complete-4 3:1 " << (solve_ab_coloring(k4, 3, 1).yes ? "YES" : "NO")
           << "; bar: >= 200 graphs, zero mismatches, YES and NO landmarks";
    report(graphs >= 200 && mismatches == 0 && landmarks,
           "identical layers equal graph coloring", detail.str());
}

// ---- 4: layer order is irrelevant at a zero length bound ----

void check_permutation_invariance() {
    long long pairs = 0, mismatches = 0, instances = 0;
    std::uint64_t seed = 4000;
    std::mt19937 shuffler(12345);
    for (int rep = 0; rep < 108; ++rep) {
        const int n = 2 + rep % 3;
        const int tau = 3 + rep % 3;
        const TemporalGraph g =
            generate_random(n, tau, rep % 2 == 0 ? 0.4 : 0.7, seed++);
        BudgetSpec budget = UniformBudget{1 + rep % 2};
        if (rep % 3 == 1) {
            NonUniformBudget nb;
            for (int v = 1; v <= n; ++v) nb.entries.emplace_back(v, 1 + v % 2);
            budget = nb;
        } else if (rep % 3 == 2) {
            MulticoloredBudget mc;
            mc.classes.push_back({1});
            mc.budgets.push_back(1);
            std::vector<Vertex> rest;
            for (int v = 2; v <= n; ++v) rest.push_back(v);
            mc.classes.push_back(rest);
            mc.budgets.push_back(n - 1);
            budget = mc;
        }
        const bool base = solve_zero(g, budget).yes;
        ++instances;
        std::vector<int> perm(tau);
        std::iota(perm.begin(), perm.end(), 1);
        for (int shot = 0; shot < 10; ++shot) {
            std::shuffle(perm.begin(), perm.end(), shuffler);
            ++pairs;
            if (solve_zero(permute_layers(g, perm), budget).yes != base)
                ++mismatches;
        }
    }
    std::ostringstream detail;
    detail << instances << " instances x 10 shuffles = " << pairs << " pairs, "
           << mismatches
           << " mismatches; bar: >= 100 instances, 10 shuffles each, zero mismatches";
    report(instances >= 100 && pairs >= instances * 10 && mismatches == 0,
           "layer order irrelevant at zero bound", detail.str());
}

// ---- 5: reduction round trips ----

StaticGraph random_static(int n, double p, std::uint64_t seed) {
    TemporalGraph layer = generate_random(n, 1, p, seed);
    return {n, layer.layer(1)};
}

void check_reduction_round_trips() {
    std::ostringstream detail;
    bool ok = true;

    {  // bipartization -> two identical layers
        long long sources = 0, mismatches = 0;
        std::uint64_t seed = 5000;
        for (double p : {0.3, 0.5, 0.8})
            for (int rep = 0; rep < 20; ++rep) {
                const StaticGraph g = random_static(4, p, seed++);
                ++sources;
                for (int s = 0; s <= 2; ++s) {
                    const ProblemInstance inst = reduce_oct_to_sum(g, s);
                    const bool brute = oct_brute_force(g, s).has_value();
                    const bool target =
                        oracle_solve(inst.graph, inst.budget, inst.objective).yes;
                    if (brute != target) ++mismatches;
                }
            }
        ok = ok && sources >= 50 && mismatches == 0;
        detail << "bipartization " << sources << " sources/" << mismatches
               << " mismatches, ";
    }

    {  // two layers -> clause deletion
        long long sources = 0, mismatches = 0;
        std::uint64_t seed = 5100;
        for (double p : {0.3, 0.6, 0.9})
            for (int rep = 0; rep < 20; ++rep) {
                const TemporalGraph g = generate_random(3, 2, p, seed++);
                ++sources;
                for (int ell = 0; ell <= 2; ++ell) {
                    const TwoCnfInstance f = reduce_sum_tau2_to_almost2sat(g, ell);
                    const bool source =
                        oracle_solve(g, UniformBudget{1},
                                     Objective{ObjectiveKind::SumLen, ell}).yes;
                    if (two_cnf_brute_force(f).has_value() != source) ++mismatches;
                }
            }
        ok = ok && sources >= 50 && mismatches == 0;
        detail << "clause-deletion " << sources << "/" << mismatches << ", ";
    }

    {  // unary bin packing -> class budgets
        const std::vector<std::vector<std::vector<int>>> partitions{
            {{}},
            {{1}},
            {{2}, {1, 1}},
            {{3}, {2, 1}, {1, 1, 1}},
            {{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}},
            {{5}, {4, 1}, {3, 2}, {3, 1, 1}, {2, 2, 1}, {2, 1, 1, 1},
             {1, 1, 1, 1, 1}},
            {{6}, {5, 1}, {4, 2}, {4, 1, 1}, {3, 3}, {3, 2, 1}, {3, 1, 1, 1},
             {2, 2, 2}, {2, 2, 1, 1}, {2, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1}}};
        std::vector<BinPackingInstance> sources;
        const auto add = [&](int beta, int max_b) {
            for (int b = 1; b <= max_b; ++b)
                for (int sum = 0; sum <= beta * b && sum < (int)partitions.size();
                     ++sum)
                    for (const auto& sizes : partitions[sum])
                        sources.push_back({sizes, beta, b});
        };
        add(1, 6);
        add(2, 2);
        add(3, 1);
        long long mismatches = 0;
        for (const BinPackingInstance& raw : sources) {
            const BinPackingInstance bp = normalize_bin_packing(raw);
            const ProblemInstance inst = reduce_binpacking_to_multicolored(bp);
            const bool brute = bin_packing_brute_force(bp).has_value();
            const bool target = oracle_solve(inst.graph, inst.budget,
                                             inst.objective, OracleConfig{36}).yes;
            if (brute != target) ++mismatches;
        }
        ok = ok && sources.size() >= 50 && mismatches == 0;
        detail << "bin-packing " << sources.size() << "/" << mismatches << ", ";
    }

    {  // class budgets -> per-vertex budgets
        long long sources = 0, mismatches = 0;
        std::uint64_t seed = 5200;
        for (double p : {0.3, 0.6, 0.9})
            for (int rep = 0; rep < 18; ++rep) {
                const TemporalGraph g = generate_random(3, 2, p, seed++);
                const MulticoloredBudget mc =
                    rep % 2 == 0
                        ? MulticoloredBudget{{{1, 2}, {3}}, {rep % 3, (rep / 2) % 2}}
                        : MulticoloredBudget{{{2}, {1, 3}}, {(rep / 3) % 2, rep % 3}};
                const ProblemInstance src{g, mc, {ObjectiveKind::MaxLen, 1}};
                const ProblemInstance out = reduce_multicolored_to_nonuniform(src);
                ++sources;
                const bool source =
                    oracle_solve(src.graph, src.budget, src.objective).yes;
                const bool target = oracle_solve(out.graph, out.budget,
                                                 out.objective, OracleConfig{40}).yes;
                if (source != target) ++mismatches;
            }
        ok = ok && sources >= 50 && mismatches == 0;
        detail << "class-to-vertex " << sources << "/" << mismatches << ", ";
    }

    {  // per-vertex budgets -> one uniform budget
        long long sources = 0, mismatches = 0;
        std::uint64_t seed = 5300;
        for (int tau = 1; tau <= 3; ++tau)
            for (double p : {0.4, 0.8, 1.0})
                for (int rep = 0; rep < 3; ++rep)
                    for (int k1 = 0; k1 <= 1; ++k1)
                        for (int k2 = 0; k2 <= 1; ++k2) {
                            const TemporalGraph g =
                                generate_random(2, tau, p, seed++);
                            const NonUniformBudget nb{{{1, k1}, {2, k2}}};
                            const ProblemInstance src{g, nb,
                                                      {ObjectiveKind::MaxLen, 1}};
                            const ProblemInstance out =
                                reduce_nonuniform_to_uniform(src);
                            ++sources;
                            const bool source = oracle_solve(src.graph, src.budget,
                                                             src.objective).yes;
                            const bool target =
                                oracle_solve(out.graph, out.budget, out.objective,
                                             OracleConfig{60}).yes;
                            if (source != target) ++mismatches;
                        }
        ok = ok && sources >= 50 && mismatches == 0;
        detail << "vertex-to-uniform " << sources << "/" << mismatches << ", ";
    }

    {  // the shipped four-item packing instance round-trips with a witness
        const BinPackingInstance shipped =
            parse_bin_packing(read_text_file(data_path("packing_4items.bp")));
        const BinPackingInstance bp = normalize_bin_packing(shipped);
        const auto packing = bin_packing_brute_force(bp);
        bool four_ok = packing.has_value();
        if (four_ok) {
            const ProblemInstance inst = reduce_binpacking_to_multicolored(bp);
            const ActivityTimeline t = packing_to_timeline(bp, *packing);
            four_ok = verify_timeline(inst.graph, t, inst.budget,
                                      inst.objective).valid();
            if (four_ok) {
                const std::vector<int> extracted = timeline_to_packing(bp, t);
                std::vector<int> load(bp.beta + 1, 0);
                for (std::size_t i = 0; i < extracted.size(); ++i) {
                    if (extracted[i] < 1 || extracted[i] > bp.beta) four_ok = false;
                    else load[extracted[i]] += bp.sizes[i];
                }
                for (int j = 1; j <= bp.beta; ++j)
                    if (load[j] != bp.bin_size) four_ok = false;
            }
        }
        ok = ok && four_ok;
        detail << "four-item packing witness "
               << (four_ok ? "YES+valid" : "failed");
    }

    report(ok, "reduction round trips",
           detail.str() +
               "; bar: >= 50 sources per transformation, zero mismatches, "
               "four-item instance YES with a valid extracted packing");
}

// ---- 6: helper vertices saturate their uniform budget ----

void check_helper_saturation() {
    long long witnesses = 0, off_count = 0;
    std::uint64_t seed = 6000;
    const auto count_helpers = [&](const ActivityTimeline& t, int n, int k) {
        int u1 = 0, u2 = 0;
        for (const IntervalAssignment& iv : t.entries()) {
            if (iv.v == n + 1) ++u1;
            if (iv.v == n + 2) ++u2;
        }
        ++witnesses;
        if (u1 != k || u2 != k) ++off_count;
    };
    for (int rep = 0; rep < 40; ++rep) {
        const int n = 2 + rep % 2;
        TemporalGraph g = generate_random(n, 1 + rep % 3, 0.5, seed++);
        NonUniformBudget nb;
        for (int v = 1; v <= n; ++v)
            nb.entries.emplace_back(v, (rep + v) % 2 == 0 ? 1 : 2);
        const ProblemInstance src{g, nb, {ObjectiveKind::MaxLen, 1}};
        const ProblemInstance out = reduce_nonuniform_to_uniform(src);
        const auto* uk = std::get_if<UniformBudget>(&out.budget);
        if (uk == nullptr) {
            ++off_count;
            continue;
        }
        // the constructed extension of a source witness
        const SolveOutcome source =
            oracle_solve(src.graph, src.budget, src.objective, OracleConfig{40});
        if (source.yes)
            count_helpers(nonuniform_witness_to_uniform(src, *source.witness),
                          n, uk->k);
        // and any witness the branching solver finds on its own
        const SolveOutcome target =
            solve_max_branching(out.graph, uk->k, out.objective.ell);
        if (target.yes) count_helpers(*target.witness, n, uk->k);
    }
    std::ostringstream detail;
    detail << witnesses << " witnesses, " << off_count
           << " with helpers off the cap; bar: every tested witness uses each "
              "helper vertex exactly its budget";
    report(witnesses > 0 && off_count == 0, "helper vertices saturate the budget",
           detail.str());
}

// ---- 7: performance envelopes ----

void check_performance() {
    bool ok = true;
    std::ostringstream detail;
    double worst_dp = 0.0;
    for (std::uint64_t seed : {101, 102, 103}) {
        const TemporalGraph g = generate_random(4, 200, 0.3, seed);
        const auto t0 = std::chrono::steady_clock::now();
        (void)solve_max_dp(g, 2, 2);
        worst_dp = std::max(worst_dp, seconds_since(t0));
    }
    ok = ok && worst_dp < 5.0;
    detail << "layer table n=4 tau=200: worst " << worst_dp << "s (bar 5 s); ";
    double worst_branch = 0.0;
    for (std::uint64_t seed : {201, 202, 203}) {
        const TemporalGraph g = generate_random(6, 50, 0.3, seed);
        const auto t0 = std::chrono::steady_clock::now();
        (void)solve_max_branching(g, 2, 1);
        worst_branch = std::max(worst_branch, seconds_since(t0));
    }
    ok = ok && worst_branch < 30.0;
    detail << "branching n=6 tau=50: worst " << worst_branch
           << "s (bar 30 s); smoke benchmarks only";
    report(ok, "performance envelopes", detail.str());
}

// ---- 8: asymptotic lower bounds are out of scope ----

void check_lower_bound_scope() {
    // Conditional lower-bound statements (no-polynomial-kernel and
    // ETH-style running-time bounds) are mathematical claims with nothing to
    // execute, so no check can exercise them. What can be executed is the
    // machinery those claims are built from: the instance transformations,
    // which the reduction round-trip check above runs in both directions.
    report(true, "asymptotic lower bounds out of scope",
           "nothing executable to reproduce; their constructions are exercised "
           "by the reduction round-trip check");
}

}  // namespace

int main() {
    check_demo_cli();
    check_solver_agreement();
    check_coloring_equivalence();
    check_permutation_invariance();
    check_reduction_round_trips();
    check_helper_saturation();
    check_performance();
    check_lower_bound_scope();
    if (failures == 0) {
        std::printf("all acceptance checks passed\n");
        return 0;
    }
    std::printf("%d acceptance check(s) failed\n", failures);
    return 1;
}
