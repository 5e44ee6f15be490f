#pragma once

#include <optional>

#include "untangle/core.hpp"

// Reference solver: plain depth-first search over partial timelines, written
// to be read and trusted rather than to be fast. It shares no recurrence,
// ordering trick, or data structure with the production solvers; every other
// solver is cross-checked against it.
//
// Search: find the first uncovered time-edge (smallest t, then lexicographic
// edge), and for each endpoint in order try every admissible interval that
// covers it, clipped to [max(1, t-ell), min(tau, t+ell)] under MaxLen and to
// the remaining sum budget under SumLen. No memoization, no dominance
// pruning; only budget counters cut branches.

namespace untangle {

struct OracleConfig {
    // Refuses (SolverRefusal) when n * tau exceeds this; exhaustive search
    // beyond desk scale is not worth waiting for.
    long long max_cells = 20;
};

SolveOutcome oracle_solve(const TemporalGraph& g, const BudgetSpec& budget,
                          const Objective& objective, const OracleConfig& cfg = {});

// Smallest ell for which the instance is YES, scanning ell = 0, 1, 2, ...;
// nullopt when no ell up to tau * n * k_max helps (none ever will: MaxLen
// caps at tau - 1 and SumLen at n * k_max * (tau - 1), both below the scan
// bound, so the scan stops early at the objective's natural ceiling).
std::optional<int> oracle_min_ell(const TemporalGraph& g, const BudgetSpec& budget,
                                  ObjectiveKind kind, const OracleConfig& cfg = {});

}  // namespace untangle
