// Command-line front end: solve, verify, reduce, generate, min-ell.
//
// stdout carries exactly the scripted answer (YES/NO, VALID/violation, a
// number, or a reduced-instance objective line); diagnostics go to stderr.
// Exit codes: 0 = decided (either answer), 1 = usage or input errors,
// 2 = solver refusal (size caps). UNTANGLE_STATE_CAP overrides the
// exhaustive-search and DP size caps.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "untangle/branch.hpp"
#include "untangle/core.hpp"
#include "untangle/dp.hpp"
#include "untangle/fileio.hpp"
#include "untangle/layerzero.hpp"
#include "untangle/oracle.hpp"
#include "untangle/patterns.hpp"
#include "untangle/reductions.hpp"

namespace {

using namespace untangle;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Caps {
    OracleConfig oracle;
    DpConfig dp;
};

Caps caps_from_env() {
    Caps caps;
    if (const char* env = std::getenv("UNTANGLE_STATE_CAP")) {
        char* end = nullptr;
        const unsigned long long cap = std::strtoull(env, &end, 10);
        if (end == env || *end != '\0' || cap == 0)
            throw UsageError("UNTANGLE_STATE_CAP must be a positive integer");
        caps.oracle.max_cells = static_cast<long long>(cap);
        caps.dp.max_cells = cap;
    }
    return caps;
}

// Budget selection shared by solve, verify, and min-ell.
struct BudgetFlags {
    int k = -1;
    std::string budgets_path;
    std::string colors_path;

    void attach(CLI::App* cmd) {
        auto* group = cmd->add_option_group("budget", "interval budget");
        group->add_option("--k", k, "uniform budget: at most K intervals per vertex");
        group->add_option("--budgets", budgets_path,
                          "budget file (.bud), any of the three forms");
        group->add_option("--colors", colors_path,
                          "class-budget file (.bud, 'class'/'member' form)");
        group->require_option(1);
    }

    BudgetSpec load() const {
        if (!budgets_path.empty()) return parse_budgets(read_text_file(budgets_path));
        if (!colors_path.empty()) {
            BudgetSpec b = parse_budgets(read_text_file(colors_path));
            if (!std::holds_alternative<MulticoloredBudget>(b))
                throw UsageError("--colors requires the 'class'/'member' budget form");
            return b;
        }
        if (k < 0) throw UsageError("--k must be nonnegative");
        return UniformBudget{k};
    }
};

Objective objective_from(const std::string& name, int ell) {
    if (ell < 0) throw UsageError("--ell must be nonnegative");
    if (name == "max") return {ObjectiveKind::MaxLen, ell};
    if (name == "sum") return {ObjectiveKind::SumLen, ell};
    throw UsageError("--objective must be 'max' or 'sum'");
}

int uniform_k_or_refuse_algo(const BudgetSpec& budget, const std::string& algo) {
    if (const auto* u = std::get_if<UniformBudget>(&budget)) return u->k;
    throw UsageError("--algo " + algo + " needs a uniform budget (--k)");
}

SolveOutcome route(const TemporalGraph& g, const BudgetSpec& budget,
                   const Objective& obj, const std::string& algo, const Caps& caps) {
    const bool is_max = obj.kind == ObjectiveKind::MaxLen;
    if (algo == "oracle") return oracle_solve(g, budget, obj, caps.oracle);
    if (algo == "zero") {
        if (obj.ell != 0) throw UsageError("--algo zero needs --ell 0");
        return solve_zero(g, budget);
    }
    if (algo == "max-dp") {
        if (!is_max) throw UsageError("--algo max-dp needs --objective max");
        return solve_max_dp(g, uniform_k_or_refuse_algo(budget, algo), obj.ell, caps.dp);
    }
    if (algo == "sum-dp") {
        if (is_max) throw UsageError("--algo sum-dp needs --objective sum");
        return solve_sum_dp(g, uniform_k_or_refuse_algo(budget, algo), obj.ell, caps.dp);
    }
    if (algo == "branch") {
        if (!is_max) throw UsageError("--algo branch needs --objective max");
        return solve_max_branching(g, uniform_k_or_refuse_algo(budget, algo), obj.ell);
    }
    if (algo == "patterns") {
        if (is_max) throw UsageError("--algo patterns needs --objective sum");
        return solve_sum_patterns(g, uniform_k_or_refuse_algo(budget, algo), obj.ell);
    }
    if (algo != "auto") throw UsageError("unknown --algo '" + algo + "'");

    if (obj.ell == 0) return solve_zero(g, budget);
    if (const auto* u = std::get_if<UniformBudget>(&budget)) {
        if (is_max) {
            if (static_cast<long long>(g.n()) * u->k <= 24)
                return solve_max_branching(g, u->k, obj.ell);
            return solve_max_dp(g, u->k, obj.ell, caps.dp);
        }
        try {
            return solve_sum_dp(g, u->k, obj.ell, caps.dp);
        } catch (const SolverRefusal&) {
            return solve_sum_patterns(g, u->k, obj.ell);
        }
    }
    // class and per-vertex budgets with ell > 0: exhaustive search only
    return oracle_solve(g, budget, obj, caps.oracle);
}

int run_solve(const std::string& graph_path, const BudgetFlags& bf,
              const std::string& objective, int ell, const std::string& algo,
              const std::string& witness_path) {
    const Caps caps = caps_from_env();
    GraphFile gf = load_temporal_graph(graph_path);
    BudgetSpec budget = bf.load();
    Objective obj = objective_from(objective, ell);
    resolve_budget(budget, gf.graph.n());  // validate against this graph
    SolveOutcome out = route(gf.graph, budget, obj, algo, caps);
    std::cout << (out.yes ? "YES" : "NO") << "\n";
    if (out.yes && !witness_path.empty()) {
        VerifyReport check = verify_timeline(gf.graph, *out.witness, budget, obj);
        if (check.kind != VerifyReport::Kind::Valid) {
            std::cerr << "internal error: produced witness failed verification: "
                      << check.message() << "\n";
            return 1;
        }
        write_text_file(witness_path, render_timeline(*out.witness));
    }
    return 0;
}

int run_verify(const std::string& graph_path, const std::string& timeline_path,
               const BudgetFlags& bf, const std::string& objective, int ell) {
    GraphFile gf = load_temporal_graph(graph_path);
    ActivityTimeline t = parse_timeline(read_text_file(timeline_path));
    BudgetSpec budget = bf.load();
    Objective obj = objective_from(objective, ell);
    try {
        VerifyReport r = verify_timeline(gf.graph, t, budget, obj);
        std::cout << r.message() << "\n";
    } catch (const MalformedTimeline& e) {
        std::cout << e.what() << "\n";
    }
    return 0;
}

int run_min_ell(const std::string& graph_path, const BudgetFlags& bf,
                const std::string& objective, const std::string& algo) {
    const Caps caps = caps_from_env();
    GraphFile gf = load_temporal_graph(graph_path);
    BudgetSpec budget = bf.load();
    ResolvedBudget rb = resolve_budget(budget, gf.graph.n());
    int k_max = 0;
    for (int limit : rb.limit) k_max = std::max(k_max, limit);
    const bool is_max = objective_from(objective, 0).kind == ObjectiveKind::MaxLen;
    long long ceiling = is_max ? gf.graph.tau() - 1
                               : static_cast<long long>(gf.graph.n()) * k_max *
                                     (gf.graph.tau() - 1);
    for (long long ell = 0; ell <= ceiling; ++ell) {
        Objective obj = objective_from(objective, static_cast<int>(ell));
        if (route(gf.graph, budget, obj, algo, caps).yes) {
            std::cout << ell << "\n";
            return 0;
        }
    }
    std::cout << "NONE\n";
    return 0;
}

int run_generate(int n, int tau, double p, unsigned long long seed,
                 const std::string& out_path) {
    TemporalGraph g = generate_random(n, tau, p, seed);
    const std::string text = render_temporal_graph(g);
    if (out_path.empty())
        std::cout << text;
    else
        write_text_file(out_path, text);
    return 0;
}

void write_instance(const ProblemInstance& inst, const std::string& graph_path,
                    const std::string& budgets_path) {
    write_text_file(graph_path, render_temporal_graph(inst.graph));
    write_text_file(budgets_path, render_budgets(inst.budget));
    std::cout << (inst.objective.kind == ObjectiveKind::MaxLen ? "max" : "sum") << " "
              << inst.objective.ell << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact solvers for timeline-covering problems on temporal graphs"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "decide an instance");
    std::string solve_graph, solve_objective, solve_algo = "auto", solve_witness;
    int solve_ell = -1;
    bool deterministic = false;
    BudgetFlags solve_budget;
    solve->add_option("graph", solve_graph, "temporal graph (.tg)")->required();
    solve->add_option("--objective", solve_objective, "'max' or 'sum'")->required();
    solve->add_option("--ell", solve_ell, "interval length bound")->required();
    solve_budget.attach(solve);
    solve->add_option("--algo", solve_algo,
                      "auto|oracle|max-dp|sum-dp|branch|zero|patterns");
    solve->add_option("--witness", solve_witness, "write a YES witness here (.tl)");
    solve->add_flag("--deterministic", deterministic,
                    "force sequential exploration (already the only mode)");

    // verify
    auto* verify = app.add_subcommand("verify", "check a timeline against an instance");
    std::string verify_graph, verify_timeline_path, verify_objective;
    int verify_ell = -1;
    BudgetFlags verify_budget;
    verify->add_option("graph", verify_graph, "temporal graph (.tg)")->required();
    verify->add_option("timeline", verify_timeline_path, "timeline (.tl)")->required();
    verify->add_option("--objective", verify_objective, "'max' or 'sum'")->required();
    verify->add_option("--ell", verify_ell, "interval length bound")->required();
    verify_budget.attach(verify);

    // min-ell
    auto* minell = app.add_subcommand("min-ell", "smallest feasible length bound");
    std::string minell_graph, minell_objective, minell_algo = "auto";
    BudgetFlags minell_budget;
    minell->add_option("graph", minell_graph, "temporal graph (.tg)")->required();
    minell->add_option("--objective", minell_objective, "'max' or 'sum'")->required();
    minell_budget.attach(minell);
    minell->add_option("--algo", minell_algo,
                       "auto|oracle|max-dp|sum-dp|branch|zero|patterns");

    // generate
    auto* generate = app.add_subcommand("generate", "produce an instance");
    std::string generate_kind, generate_out;
    int gen_n = 0, gen_tau = 1;
    double gen_p = 0.5;
    unsigned long long gen_seed = 1;
    generate->add_option("kind", generate_kind, "only 'random'")->required();
    generate->add_option("--n", gen_n, "vertex count")->required();
    generate->add_option("--tau", gen_tau, "lifetime")->required();
    generate->add_option("--p", gen_p, "edge probability")->required();
    generate->add_option("--seed", gen_seed, "generator seed");
    generate->add_option("--out", generate_out, "output path (stdout if omitted)");

    // reduce, one nested subcommand per transformation
    auto* reduce = app.add_subcommand("reduce", "transform an instance");
    reduce->require_subcommand(1);

    auto* r_oct = reduce->add_subcommand(
        "oct", "odd cycle transversal -> two identical layers, sum objective");
    std::string oct_in, oct_graph, oct_bud;
    int oct_s = -1;
    r_oct->add_option("input", oct_in, "static graph (.tg with tau 1)")->required();
    r_oct->add_option("--s", oct_s, "transversal size bound")->required();
    r_oct->add_option("--out-graph", oct_graph, "reduced graph (.tg)")->required();
    r_oct->add_option("--out-budgets", oct_bud, "reduced budget (.bud)")->required();

    auto* r_2sat = reduce->add_subcommand(
        "almost2sat", "two layers, sum objective -> clause deletion");
    std::string sat_in, sat_out;
    int sat_ell = -1;
    r_2sat->add_option("input", sat_in, "temporal graph (.tg with tau 2)")->required();
    r_2sat->add_option("--ell", sat_ell, "length bound / deletion budget")->required();
    r_2sat->add_option("--out", sat_out, "clause file")->required();

    auto* r_bp = reduce->add_subcommand(
        "binpacking", "unary bin packing -> class budgets, max objective");
    std::string bp_in, bp_graph, bp_bud;
    r_bp->add_option("input", bp_in, "bin packing instance (.bp)")->required();
    r_bp->add_option("--out-graph", bp_graph, "reduced graph (.tg)")->required();
    r_bp->add_option("--out-budgets", bp_bud, "reduced budget (.bud)")->required();

    auto* r_mc = reduce->add_subcommand(
        "classes2vertex", "class budgets -> per-vertex budgets (max, ell 1)");
    std::string mc_in_graph, mc_in_bud, mc_graph, mc_bud;
    r_mc->add_option("graph", mc_in_graph, "temporal graph (.tg)")->required();
    r_mc->add_option("budgets", mc_in_bud, "class budget (.bud)")->required();
    r_mc->add_option("--out-graph", mc_graph, "reduced graph (.tg)")->required();
    r_mc->add_option("--out-budgets", mc_bud, "reduced budget (.bud)")->required();

    auto* r_nu = reduce->add_subcommand(
        "vertex2uniform", "per-vertex budgets -> uniform budget (max, ell 1)");
    std::string nu_in_graph, nu_in_bud, nu_graph, nu_bud;
    r_nu->add_option("graph", nu_in_graph, "temporal graph (.tg)")->required();
    r_nu->add_option("budgets", nu_in_bud, "per-vertex budget (.bud)")->required();
    r_nu->add_option("--out-graph", nu_graph, "reduced graph (.tg)")->required();
    r_nu->add_option("--out-budgets", nu_bud, "reduced budget (.bud)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (app.got_subcommand(solve))
            return run_solve(solve_graph, solve_budget, solve_objective, solve_ell,
                             solve_algo, solve_witness);
        if (app.got_subcommand(verify))
            return run_verify(verify_graph, verify_timeline_path, verify_budget,
                              verify_objective, verify_ell);
        if (app.got_subcommand(minell))
            return run_min_ell(minell_graph, minell_budget, minell_objective,
                               minell_algo);
        if (app.got_subcommand(generate)) {
            if (generate_kind != "random")
                throw UsageError("unknown generate kind '" + generate_kind + "'");
            return run_generate(gen_n, gen_tau, gen_p, gen_seed, generate_out);
        }
        if (reduce->got_subcommand(r_oct)) {
            GraphFile gf = load_temporal_graph(oct_in);
            if (gf.graph.tau() != 1)
                throw UsageError("oct input must be a static graph (tau 1)");
            StaticGraph g{gf.graph.n(), gf.graph.layer(1)};
            write_instance(reduce_oct_to_sum(g, oct_s), oct_graph, oct_bud);
            return 0;
        }
        if (reduce->got_subcommand(r_2sat)) {
            GraphFile gf = load_temporal_graph(sat_in);
            TwoCnfInstance f = reduce_sum_tau2_to_almost2sat(gf.graph, sat_ell);
            write_text_file(sat_out, render_two_cnf(f));
            std::cout << "clauses " << f.clauses.size() << " budget " << f.budget
                      << "\n";
            return 0;
        }
        if (reduce->got_subcommand(r_bp)) {
            BinPackingInstance bp =
                normalize_bin_packing(parse_bin_packing(read_text_file(bp_in)));
            write_instance(reduce_binpacking_to_multicolored(bp), bp_graph, bp_bud);
            return 0;
        }
        if (reduce->got_subcommand(r_mc)) {
            GraphFile gf = load_temporal_graph(mc_in_graph);
            BudgetSpec b = parse_budgets(read_text_file(mc_in_bud));
            ProblemInstance src{gf.graph, b, {ObjectiveKind::MaxLen, 1}};
            write_instance(reduce_multicolored_to_nonuniform(src), mc_graph, mc_bud);
            return 0;
        }
        if (reduce->got_subcommand(r_nu)) {
            GraphFile gf = load_temporal_graph(nu_in_graph);
            BudgetSpec b = parse_budgets(read_text_file(nu_in_bud));
            ProblemInstance src{gf.graph, b, {ObjectiveKind::MaxLen, 1}};
            write_instance(reduce_nonuniform_to_uniform(src), nu_graph, nu_bud);
            return 0;
        }
        throw UsageError("no subcommand selected");
    } catch (const SolverRefusal& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
