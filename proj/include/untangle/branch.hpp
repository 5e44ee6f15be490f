#pragma once

#include "untangle/core.hpp"

// Branching solver for the MaxLen objective with uniform budgets. At each
// node: take the earliest layer that still has an edge, its lexicographically
// smallest edge {u, v}, and try activating u then v with the one canonical
// interval (w, i, min(i + ell, tau)). Activation deletes every edge the new
// interval covers, tracked on an undo stack so backtracking restores them in
// place; per-vertex counters enforce the budget. Leaves are exhausted graphs
// (YES) or edges with both endpoints out of budget (NO).

namespace untangle {

struct BranchStats {
    long long nodes = 0;   // calls, interior and leaf
    long long leaves = 0;  // nodes that decided YES or dead-ended
};

SolveOutcome solve_max_branching(const TemporalGraph& g, int k, int ell,
                                 BranchStats* stats = nullptr);

}  // namespace untangle
