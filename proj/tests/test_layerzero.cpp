#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "untangle/core.hpp"
#include "untangle/layerzero.hpp"
#include "untangle/oracle.hpp"
#include "untangle/reductions.hpp"

using namespace untangle;

namespace {

// Exhaustive 3-coloring check; n is small enough for 3^n assignments.
bool brute_three_colorable(const StaticGraph& g) {
    std::vector<int> color(g.n, 0);
    const auto ok = [&] {
        for (const Edge& e : g.edges)
            if (color[e.u - 1] == color[e.v - 1]) return false;
        return true;
    };
    long total = 1;
    for (int i = 0; i < g.n; ++i) total *= 3;
    for (long code = 0; code < total; ++code) {
        long c = code;
        for (int i = 0; i < g.n; ++i, c /= 3) color[i] = static_cast<int>(c % 3);
        if (ok()) return true;
    }
    return g.n == 0;
}

void check_coloring(const ColoringOutcome& out, const StaticGraph& g, int a, int b) {
    REQUIRE(out.yes);
    REQUIRE(out.colors.has_value());
    const auto& colors = *out.colors;
    REQUIRE(static_cast<int>(colors.size()) == g.n);
    for (const auto& cs : colors) {
        CHECK(static_cast<int>(cs.size()) == b);
        std::set<int> distinct(cs.begin(), cs.end());
        CHECK(static_cast<int>(distinct.size()) == b);
        for (int col : cs) {
            CHECK(col >= 1);
            CHECK(col <= a);
        }
    }
    for (const Edge& e : g.edges)
        for (int cu : colors[e.u - 1])
            CHECK(std::count(colors[e.v - 1].begin(), colors[e.v - 1].end(), cu) == 0);
}

}  // namespace

TEST_CASE("the profile groups identical layers and keeps their times") {
    LayerProfile single = build_layer_profile(testhelp::identical_edge_layers(3));
    REQUIRE(single.distinct.size() == 1);
    CHECK(single.distinct[0] == std::vector<Edge>{{1, 2}});
    CHECK(single.occurrences[0] == std::vector<TimeStep>{1, 2, 3});
    CHECK(single.multiplicity(0) == 3);

    // the demo instance repeats exactly one layer, at times 2 and 4
    LayerProfile demo = build_layer_profile(testhelp::demo_graph());
    REQUIRE(demo.distinct.size() == 8);
    const std::vector<Edge> repeated{{1, 2}, {1, 3}};
    int found = -1;
    for (std::size_t d = 0; d < demo.distinct.size(); ++d)
        if (demo.distinct[d] == repeated) found = static_cast<int>(d);
    REQUIRE(found >= 0);
    CHECK(demo.occurrences[found] == std::vector<TimeStep>{2, 4});

    // empty layers form a distinct entry of their own
    TemporalGraph gaps(2, 3, {{}, {{1, 2}}, {}});
    LayerProfile p = build_layer_profile(gaps);
    REQUIRE(p.distinct.size() == 2);
    CHECK(p.distinct[0].empty());
    CHECK(p.occurrences[0] == std::vector<TimeStep>{1, 3});
    CHECK(p.occurrences[1] == std::vector<TimeStep>{2});
}

TEST_CASE("expanding a cover assignment activates the chosen vertices") {
    LayerProfile p = build_layer_profile(testhelp::identical_edge_layers(3));
    // first two occurrences covered by vertex 1, the third by vertex 2
    CoverAssignment a{{{{0b01u, 2}, {0b10u, 1}}}};
    ActivityTimeline t = expand_cover_assignment(p, a);
    const std::vector<IntervalAssignment> want{{1, 1, 1}, {1, 2, 2}, {2, 3, 3}};
    CHECK(t.entries() == want);

    CHECK_THROWS_AS(expand_cover_assignment(p, CoverAssignment{{}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(expand_cover_assignment(p, CoverAssignment{{{{0b01u, 4}}}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(expand_cover_assignment(p, CoverAssignment{{{{0b01u, 2}}}}),
                    std::invalid_argument);
}

TEST_CASE("the assignment solver agrees with the exhaustive one") {
    std::uint64_t seed = 1;
    const Objective zero{ObjectiveKind::MaxLen, 0};
    int yes = 0;
    for (int n = 1; n <= 3; ++n)
        for (int tau = 1; tau <= 4; ++tau)
            for (double p : {0.4, 0.8})
                for (int rep = 0; rep < 3; ++rep) {
                    TemporalGraph g = generate_random(n, tau, p, seed++);
                    for (int k = 0; k <= 2; ++k) {
                        SolveOutcome z = solve_zero(g, UniformBudget{k});
                        CHECK(z.yes == oracle_solve(g, UniformBudget{k}, zero).yes);
                        if (z.yes) {
                            ++yes;
                            CHECK(verify_timeline(g, *z.witness, UniformBudget{k},
                                                  zero).valid());
                        }
                    }
                }
    CHECK(yes > 100);
}

TEST_CASE("per-vertex and per-class budgets are respected") {
    std::uint64_t seed = 400;
    const Objective zero{ObjectiveKind::SumLen, 0};
    int yes_nu = 0, yes_mc = 0;
    for (int rep = 0; rep < 12; ++rep) {
        TemporalGraph g = generate_random(3, 3, 0.6, seed++);
        NonUniformBudget nu{{{1, static_cast<int>(rep % 3)}, {2, 1}, {3, 2}}};
        SolveOutcome z = solve_zero(g, nu);
        CHECK(z.yes == oracle_solve(g, nu, zero).yes);
        if (z.yes) {
            ++yes_nu;
            CHECK(verify_timeline(g, *z.witness, nu, zero).valid());
        }
        MulticoloredBudget mc{{{1, 3}, {2}}, {static_cast<int>(rep % 4), 1}};
        SolveOutcome m = solve_zero(g, mc);
        CHECK(m.yes == oracle_solve(g, mc, zero).yes);
        if (m.yes) {
            ++yes_mc;
            CHECK(verify_timeline(g, *m.witness, mc, zero).valid());
        }
    }
    CHECK(yes_nu > 3);
    CHECK(yes_mc > 3);
}

TEST_CASE("layer order is irrelevant when the length bound is zero") {
    std::uint64_t seed = 777;
    for (int rep = 0; rep < 10; ++rep) {
        TemporalGraph g = generate_random(3, 4, 0.5, seed++);
        TemporalGraph rotated = permute_layers(g, {2, 3, 4, 1});
        TemporalGraph reversed = permute_layers(g, {4, 3, 2, 1});
        for (int k = 0; k <= 2; ++k) {
            const bool base = solve_zero(g, UniformBudget{k}).yes;
            CHECK(solve_zero(rotated, UniformBudget{k}).yes == base);
            CHECK(solve_zero(reversed, UniformBudget{k}).yes == base);
        }
    }
}

TEST_CASE("fractional coloring landmarks come out right") {
    StaticGraph c5{5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5}}};
    check_coloring(solve_ab_coloring(c5, 5, 2), c5, 5, 2);

    StaticGraph k4{4, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}};
    CHECK_FALSE(solve_ab_coloring(k4, 3, 1).yes);
    check_coloring(solve_ab_coloring(k4, 4, 1), k4, 4, 1);

    CHECK_THROWS_AS(solve_ab_coloring(k4, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(solve_ab_coloring(k4, 2, 0), std::invalid_argument);
}

TEST_CASE("(3:1)-colorability matches brute-force 3-coloring") {
    std::uint64_t seed = 90;
    int yes = 0;
    for (int rep = 0; rep < 30; ++rep) {
        TemporalGraph layer = generate_random(5, 1, 0.5, seed++);
        StaticGraph g{5, layer.layer(1)};
        ColoringOutcome out = solve_ab_coloring(g, 3, 1);
        CHECK(out.yes == brute_three_colorable(g));
        if (out.yes) {
            ++yes;
            check_coloring(out, g, 3, 1);
        }
    }
    CHECK(yes > 5);
}

TEST_CASE("timelines and colorings translate back and forth") {
    const int tau = 5, k = 2, n = 3;  // a = 5, b = 3
    const std::vector<std::vector<int>> colors{{1, 2, 3}, {1, 4, 5}, {2, 3, 4}};
    ActivityTimeline t = coloring_to_timeline(colors, tau, k);
    for (const IntervalAssignment& ia : t.entries()) CHECK(ia.a == ia.b);
    CHECK(timeline_to_coloring(t, n, tau, k) == colors);

    // under-used vertices are padded up to k activations before complementing
    ActivityTimeline sparse(std::vector<IntervalAssignment>{{1, 2, 2}});
    auto c = timeline_to_coloring(sparse, 2, 5, 2);
    for (const auto& cs : c) CHECK(cs.size() == 3);

    CHECK_THROWS_AS(timeline_to_coloring(
                        ActivityTimeline(std::vector<IntervalAssignment>{{1, 1, 2}}),
                        2, 5, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(timeline_to_coloring(
                        ActivityTimeline(std::vector<IntervalAssignment>{
                            {1, 1, 1}, {1, 2, 2}, {1, 3, 3}}),
                        2, 5, 2),
                    std::invalid_argument);
    CHECK_THROWS_AS(coloring_to_timeline({{1, 2}, {2, 2}}, 5, 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(coloring_to_timeline({{1, 2}, {2, 6}}, 5, 3),
                    std::invalid_argument);
    CHECK_THROWS_AS(coloring_to_timeline({{1, 2, 3}, {2, 3}}, 5, 3),
                    std::invalid_argument);
}

TEST_CASE("oversized vertex sets are refused, not mis-solved") {
    TemporalGraph wide(26, 1, {{}});
    CHECK_THROWS_AS(solve_zero(wide, UniformBudget{1}), SolverRefusal);
}
