#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "untangle/core.hpp"

// SumLen solver that separates a hypothetical solution into its
// positive-length intervals and a zero-length completion. The positive part
// is cheap to enumerate when ell is small: its intervals have total length
// at most ell, so they cluster into at most ell disjoint time windows each
// at most ell wide. The solver streams every such cluster sequence, deletes
// the edges the cluster already covers, charges the used intervals against
// the budgets, and asks the ell = 0 solver to finish the residual instance.

namespace untangle {

// One cluster: a window [start, end] of the lifetime and the intervals
// placed in it, with endpoints relative to the window (0 <= a < b <=
// end - start). Windows are tight: some interval starts at offset 0 and
// some interval ends at offset end - start.
struct SolutionPattern {
    TimeStep start = 0;
    TimeStep end = 0;
    std::vector<IntervalAssignment> intervals;  // sorted by (v, a, b)
};

// Clusters in time order with a gap between consecutive windows.
using PatternSequence = std::vector<SolutionPattern>;

// Streams every pattern sequence with total interval length <= ell and at
// most k intervals per vertex, the empty sequence first, in lexicographic
// order of the underlying absolute interval sets. The visitor returns false
// to stop early. Requires ell >= 1.
void enumerate_pattern_sequences(const TemporalGraph& g, int k, int ell,
                                 const std::function<bool(const PatternSequence&)>& visit);

// Deletes from every layer the edges covered by the sequence's intervals and
// charges each interval against its vertex's budget. budgets[v-1] is the
// per-vertex allowance; the sequence must fit (asserted).
std::pair<TemporalGraph, std::vector<int>> apply_patterns(
    const TemporalGraph& g, const std::vector<int>& budgets,
    const PatternSequence& seq);

// YES iff some sequence's residual instance is coverable at ell = 0. The
// witness is the sequence's intervals in absolute time plus the completion.
SolveOutcome solve_sum_patterns(const TemporalGraph& g, int k, int ell);

}  // namespace untangle
