#pragma once

#include <cstdint>

#include "untangle/core.hpp"

// Layer-by-layer dynamic programs over packed per-vertex states, one per
// objective. Both decide uniform-budget instances and reconstruct a witness
// from a per-layer predecessor journal.
//
// MaxLen state at layer i: per vertex a remaining-starts counter in 0..k and
// an age in {-1} u {0..ell} (-1 idle, otherwise the current interval has
// covered age+1 layers ending at i). A vertex may open a fresh interval at
// layer i only from age -1 or from the fully stretched age min(ell, i-2),
// which is the only shape a closed predecessor interval ever needs to take.
//
// SumLen state at layer i: per vertex an intervals-used counter in 0..k, the
// set S of vertices active at i, and the length budget spent so far. Keeping
// a vertex active across a layer boundary costs one unit of length;
// reopening costs one interval.
//
// Storage: boolean tables for layers i-1 and i only; reachable states of
// every layer append (state, predecessor) pairs to a journal used solely for
// witness walk-back. Tables are scanned in packed-integer order, so answers
// and witnesses are deterministic.

namespace untangle {

struct DpConfig {
    // Refuses (SolverRefusal) when tau * states_per_layer exceeds this.
    std::uint64_t max_cells = std::uint64_t(1) << 32;
};

SolveOutcome solve_max_dp(const TemporalGraph& g, int k, int ell,
                          const DpConfig& cfg = {});

SolveOutcome solve_sum_dp(const TemporalGraph& g, int k, int ell,
                          const DpConfig& cfg = {});

}  // namespace untangle
