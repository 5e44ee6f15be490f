#include "untangle/dp.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace untangle {

namespace {

using u64 = std::uint64_t;

// vc_ok[mask]: does the vertex set `mask` (bit v-1 for vertex v) cover every
// edge of layer t?
std::vector<char> cover_table(const TemporalGraph& g, TimeStep t) {
    const int n = g.n();
    std::vector<char> ok(std::size_t(1) << n, 1);
    for (std::size_t mask = 0; mask < ok.size(); ++mask)
        for (const Edge& e : g.layer(t))
            if (!((mask >> (e.u - 1)) & 1) && !((mask >> (e.v - 1)) & 1)) {
                ok[mask] = 0;
                break;
            }
    return ok;
}

// base^n, or nullopt when it exceeds cap.
std::optional<u64> pow_capped(u64 base, int n, u64 cap) {
    u64 r = 1;
    for (int i = 0; i < n; ++i) {
        if (base != 0 && r > cap / base) return std::nullopt;
        r *= base;
    }
    return r;
}

[[noreturn]] void refuse(const char* which, const TemporalGraph& g, u64 cap) {
    throw SolverRefusal(std::string(which) + " table for n=" + std::to_string(g.n()) +
                        " tau=" + std::to_string(g.tau()) + " exceeds cap " +
                        std::to_string(cap) + " cells");
}

u64 journal_lookup(const std::vector<std::pair<u64, u64>>& layer, u64 state) {
    auto it = std::lower_bound(layer.begin(), layer.end(), state,
                               [](const auto& p, u64 s) { return p.first < s; });
    return it->second;  // every walked state was journaled
}

// ---------------- MaxLen ----------------
//
// Per-vertex digit: counter kd in 0..k (intervals opened so far is at most
// kd) and age in -1..L (-1 idle; age a means the running interval covers
// layers i-a..i). Opening or going idle at layer i is only allowed from age
// -1 or from the fully stretched age min(L, i-2): a closed interval may as
// well have covered everything since its start, so only the stretched shape
// is ever needed, which keeps the state space one age per vertex.

struct MaxDp {
    const TemporalGraph& g;
    int n, tau, k, L;
    int PB;                  // per-vertex digit base (k+1)*(L+2)
    u64 states;
    std::vector<u64> pow;    // PB^j
    std::vector<char> prev, cur;
    std::vector<std::vector<std::pair<u64, u64>>> journal;  // per layer, sorted

    std::vector<int> kd, age;  // decoded predecessor digits
    std::vector<char> ok;      // cover table of the layer being filled
    u64 pred_state = 0;
    std::vector<std::pair<u64, u64>>* out = nullptr;

    MaxDp(const TemporalGraph& g, int k, int ell, const DpConfig& cfg)
        : g(g), n(g.n()), tau(g.tau()), k(k), L(std::min(ell, tau - 1)),
          PB((k + 1) * (L + 2)), journal(tau), kd(n), age(n) {
        auto s = pow_capped(PB, n, cfg.max_cells);
        if (!s || *s > cfg.max_cells / tau) refuse("MaxLen dp", g, cfg.max_cells);
        states = *s;
        pow.resize(n + 1);
        pow[0] = 1;
        for (int j = 0; j < n; ++j) pow[j + 1] = pow[j] * PB;
    }

    void decode(u64 s) {
        for (int j = 0; j < n; ++j) {
            int d = static_cast<int>(s % PB);
            s /= PB;
            kd[j] = d / (L + 2);
            age[j] = d % (L + 2) - 1;
        }
    }

    void stamp(u64 succ, std::size_t mask) {
        if (!cur[succ] && ok[mask]) {
            cur[succ] = 1;
            out->push_back({succ, pred_state});
        }
    }

    // Successor options of vertex j: continue the running interval, go (or
    // stay) idle, or open a fresh interval. m is the stretched age at the
    // predecessor layer.
    void expand(int j, int m, u64 succ, std::size_t mask) {
        if (j == n) {
            stamp(succ, mask);
            return;
        }
        const u64 base = pow[j];
        if (age[j] >= 0 && age[j] + 1 <= L)
            expand(j + 1, m, succ + base * (u64(kd[j]) * (L + 2) + age[j] + 2),
                   mask | (std::size_t(1) << j));
        if (age[j] == -1 || age[j] == m) {
            expand(j + 1, m, succ + base * (u64(kd[j]) * (L + 2) + 0), mask);
            if (kd[j] + 1 <= k)
                expand(j + 1, m, succ + base * (u64(kd[j] + 1) * (L + 2) + 1),
                       mask | (std::size_t(1) << j));
        }
    }

    SolveOutcome run() {
        prev.assign(states, 0);
        ok = cover_table(g, 1);
        // layer 1: ages in {-1, 0}, an age-0 vertex has an open interval
        for (u64 s = 0; s < states; ++s) {
            decode(s);
            bool valid = true;
            std::size_t mask = 0;
            for (int j = 0; j < n && valid; ++j) {
                if (age[j] > 0) valid = false;
                else if (age[j] == 0) {
                    if (kd[j] < 1) valid = false;
                    mask |= std::size_t(1) << j;
                }
            }
            if (valid && ok[mask]) prev[s] = 1;
        }

        for (int i = 2; i <= tau; ++i) {
            cur.assign(states, 0);
            ok = cover_table(g, i);
            out = &journal[i - 1];
            const int m = std::min(L, i - 2);
            for (u64 s = 0; s < states; ++s)
                if (prev[s]) {
                    decode(s);
                    pred_state = s;
                    expand(0, m, 0, 0);
                }
            std::sort(out->begin(), out->end());
            prev.swap(cur);
        }

        // final query: every counter at k, any age vector
        std::optional<u64> hit;
        {
            const u64 age_combos = pow_capped(L + 2, n, states).value();
            for (u64 c = 0; c < age_combos && !hit; ++c) {
                u64 cc = c;
                u64 s = 0;
                for (int j = 0; j < n; ++j) {
                    int a = static_cast<int>(cc % (L + 2)) - 1;
                    cc /= L + 2;
                    s += pow[j] * (u64(k) * (L + 2) + a + 1);
                }
                if (prev[s]) hit = s;
            }
        }
        if (!hit) return SolveOutcome::no();

        // walk the journal back, then read intervals off the age rows
        std::vector<u64> chain(tau);
        chain[tau - 1] = *hit;
        for (int i = tau - 1; i >= 1; --i)
            chain[i - 1] = journal_lookup(journal[i], chain[i]);
        std::vector<std::vector<int>> ages(tau, std::vector<int>(n));
        for (int i = 0; i < tau; ++i) {
            decode(chain[i]);
            ages[i] = age;
        }
        std::vector<IntervalAssignment> entries;
        for (int j = 0; j < n; ++j)
            for (int i = 1; i <= tau; ++i) {
                int a = ages[i - 1][j];
                if (a < 0) continue;
                const bool continues = i < tau && ages[i][j] == a + 1;
                if (!continues) entries.push_back({j + 1, i - a, i});
            }
        return SolveOutcome::yes_with(ActivityTimeline(std::move(entries)));
    }
};

// ---------------- SumLen ----------------
//
// State: per-vertex counter kd in 0..k, the set S of vertices active in the
// layer, and the length spent so far. Crossing a layer boundary while staying
// active costs one length unit; reopening costs one counter unit.

struct SumDp {
    const TemporalGraph& g;
    int n, tau, k;
    long long L;             // spendable length, clamped to the possible max
    u64 KB, SB, LB;          // counter-code base (k+1)^n, 1<<n, L+1
    u64 states;
    std::vector<u64> pow;    // (k+1)^j
    std::vector<char> prev, cur;
    std::vector<std::vector<std::pair<u64, u64>>> journal;

    std::vector<int> kd;
    std::size_t predS = 0;
    long long predL = 0;
    std::vector<char> ok;
    u64 pred_state = 0;
    std::vector<std::pair<u64, u64>>* out = nullptr;

    SumDp(const TemporalGraph& g, int k, int ell, const DpConfig& cfg)
        : g(g), n(g.n()), tau(g.tau()), k(k),
          L(std::min<long long>(ell, static_cast<long long>(n) * k * (tau - 1))),
          journal(tau), kd(n) {
        SB = u64(1) << n;
        LB = u64(L) + 1;
        auto kb = pow_capped(k + 1, n, cfg.max_cells);
        if (!kb) refuse("SumLen dp", g, cfg.max_cells);
        KB = *kb;
        if (n > 30 || KB > cfg.max_cells / SB || KB * SB > cfg.max_cells / LB ||
            KB * SB * LB > cfg.max_cells / tau)
            refuse("SumLen dp", g, cfg.max_cells);
        states = KB * SB * LB;
        pow.resize(n + 1);
        pow[0] = 1;
        for (int j = 0; j < n; ++j) pow[j + 1] = pow[j] * (k + 1);
    }

    u64 pack(u64 kcode, std::size_t S, long long l) const {
        return (kcode * SB + S) * LB + l;
    }

    void decode(u64 s) {
        predL = static_cast<long long>(s % LB);
        s /= LB;
        predS = static_cast<std::size_t>(s % SB);
        s /= SB;
        for (int j = 0; j < n; ++j) {
            kd[j] = static_cast<int>(s % (k + 1));
            s /= k + 1;
        }
    }

    // Options of vertex j: idle, reopen (counter +1), or extend the running
    // activity across the boundary (only if active before; length +1).
    void expand(int j, u64 kcode, std::size_t mask, long long cost) {
        if (j == n) {
            const u64 succ = pack(kcode, mask, predL + cost);
            if (!cur[succ] && ok[mask]) {
                cur[succ] = 1;
                out->push_back({succ, pred_state});
            }
            return;
        }
        expand(j + 1, kcode + pow[j] * u64(kd[j]), mask, cost);
        if (kd[j] + 1 <= k)
            expand(j + 1, kcode + pow[j] * u64(kd[j] + 1),
                   mask | (std::size_t(1) << j), cost);
        if (((predS >> j) & 1) && predL + cost + 1 <= L)
            expand(j + 1, kcode + pow[j] * u64(kd[j]),
                   mask | (std::size_t(1) << j), cost + 1);
    }

    SolveOutcome run() {
        prev.assign(states, 0);
        ok = cover_table(g, 1);
        for (u64 kcode = 0; kcode < KB; ++kcode) {
            u64 tmp = kcode;
            for (int j = 0; j < n; ++j) {
                kd[j] = static_cast<int>(tmp % (k + 1));
                tmp /= k + 1;
            }
            for (std::size_t S = 0; S < SB; ++S) {
                if (!ok[S]) continue;
                bool valid = true;
                for (int j = 0; j < n && valid; ++j)
                    if (((S >> j) & 1) && kd[j] < 1) valid = false;
                if (!valid) continue;
                for (long long l = 0; l < static_cast<long long>(LB); ++l)
                    prev[pack(kcode, S, l)] = 1;
            }
        }

        for (int i = 2; i <= tau; ++i) {
            cur.assign(states, 0);
            ok = cover_table(g, i);
            out = &journal[i - 1];
            for (u64 s = 0; s < states; ++s)
                if (prev[s]) {
                    decode(s);
                    pred_state = s;
                    expand(0, 0, 0, 0);
                }
            std::sort(out->begin(), out->end());
            prev.swap(cur);
        }

        std::optional<u64> hit;
        u64 kfull = 0;
        for (int j = 0; j < n; ++j) kfull += pow[j] * u64(k);
        for (std::size_t S = 0; S < SB && !hit; ++S)
            if (prev[pack(kfull, S, L)]) hit = pack(kfull, S, L);
        if (!hit) return SolveOutcome::no();

        std::vector<u64> chain(tau);
        chain[tau - 1] = *hit;
        for (int i = tau - 1; i >= 1; --i)
            chain[i - 1] = journal_lookup(journal[i], chain[i]);

        std::vector<std::size_t> sets(tau);
        std::vector<std::vector<int>> counters(tau, std::vector<int>(n));
        for (int i = 0; i < tau; ++i) {
            decode(chain[i]);
            sets[i] = predS;
            counters[i] = kd;
        }
        std::vector<IntervalAssignment> entries;
        for (int j = 0; j < n; ++j) {
            int start = 0;
            for (int i = 1; i <= tau; ++i) {
                if (!((sets[i - 1] >> j) & 1)) continue;
                const bool extended_in = i > 1 && ((sets[i - 2] >> j) & 1) &&
                                         counters[i - 1][j] == counters[i - 2][j];
                if (!extended_in) start = i;
                const bool extends_out = i < tau && ((sets[i] >> j) & 1) &&
                                         counters[i][j] == counters[i - 1][j];
                if (!extends_out) entries.push_back({j + 1, start, i});
            }
        }
        return SolveOutcome::yes_with(ActivityTimeline(std::move(entries)));
    }
};

}  // namespace

SolveOutcome solve_max_dp(const TemporalGraph& g, int k, int ell, const DpConfig& cfg) {
    if (k < 0 || ell < 0) throw std::invalid_argument("budget and bound must be nonnegative");
    if (g.n() > 30) refuse("MaxLen dp", g, cfg.max_cells);
    return MaxDp(g, k, ell, cfg).run();
}

SolveOutcome solve_sum_dp(const TemporalGraph& g, int k, int ell, const DpConfig& cfg) {
    if (k < 0 || ell < 0) throw std::invalid_argument("budget and bound must be nonnegative");
    if (g.n() > 30) refuse("SumLen dp", g, cfg.max_cells);
    return SumDp(g, k, ell, cfg).run();
}

}  // namespace untangle
