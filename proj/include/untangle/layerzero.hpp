#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "untangle/core.hpp"

// Exact solver for ell = 0: every interval is a single activation (v, t, t),
// so only how many times each distinct layer occurs matters, not where. The
// instance collapses to an assignment problem: give every occurrence of each
// distinct edge set a vertex cover, spending each vertex (or class) at most
// its budget. Minimal covers suffice, since shrinking a cover only frees
// budget. Feasibility is decided by depth-first assignment over distinct
// layers (most frequent first) and covers (smallest first), pruning on
// forced demand: covers that every remaining occurrence must include.
//
// The same machinery answers (a : b)-coloring: a graph is (a : b)-colorable
// exactly when the temporal graph with a identical layers is coverable with
// k = a - b and ell = 0, via the complement map c(v) = [tau] minus the
// activation times of v.

namespace untangle {

struct LayerProfile {
    // distinct[d] is a normalized edge set; occurrences[d] the sorted time
    // steps carrying it; multiplicity(d) == occurrences[d].size().
    std::vector<std::vector<Edge>> distinct;
    std::vector<std::vector<TimeStep>> occurrences;
    int multiplicity(int d) const { return static_cast<int>(occurrences[d].size()); }
};

LayerProfile build_layer_profile(const TemporalGraph& g);

// How many occurrences of each distinct layer use which cover (vertex sets
// as bitmasks over 1..n, bit v-1 for vertex v). Counts are nonnegative and
// sum to the multiplicity per distinct layer.
struct CoverAssignment {
    std::vector<std::vector<std::pair<std::uint32_t, int>>> uses;
};

// Turns an assignment into the timeline that activates, for each occurrence
// time, exactly the vertices of its assigned cover.
ActivityTimeline expand_cover_assignment(const LayerProfile& profile,
                                         const CoverAssignment& assignment);

// Uniform and per-vertex budgets bound each vertex's activations; class
// budgets bound each class's total activations.
SolveOutcome solve_zero(const TemporalGraph& g, const BudgetSpec& budget);

// Timeline of zero-length intervals (at most k per vertex, times within
// 1..tau) -> b-fold coloring with colors from [tau], tau = a, b = tau - k:
// pad every vertex to exactly k activations, then c(v) is the complement of
// its activation times. Throws std::invalid_argument when t does not have
// the required shape.
std::vector<std::vector<int>> timeline_to_coloring(const ActivityTimeline& t, int n,
                                                   int tau, int k);

// Inverse map; every c[v-1] must hold tau - k distinct colors from [tau].
ActivityTimeline coloring_to_timeline(const std::vector<std::vector<int>>& c, int tau,
                                      int k);

struct ColoringOutcome {
    bool yes = false;
    // colors[v-1]: b distinct colors from [a], sets disjoint across edges.
    std::optional<std::vector<std::vector<int>>> colors;
};

// Decides whether g has an (a : b)-coloring, 1 <= b <= a.
ColoringOutcome solve_ab_coloring(const StaticGraph& g, int a, int b);

}  // namespace untangle
