#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

// Core domain types for activity timelines on temporal graphs.
//
// Conventions used across the whole library:
//  - vertices are 1-based ints in [1, n]
//  - time steps are 1-based ints in [1, tau]
//  - edges are unordered pairs stored normalized as u < v
//  - an interval assignment (v, a, b) means v is active at every t in [a, b];
//    its length is b - a, so zero-length intervals are single activations

namespace untangle {

using Vertex = int;
using TimeStep = int;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    auto operator<=>(const Edge&) const = default;
};

// Thrown by solvers that refuse an instance instead of risking a wrong or
// unbounded computation (size caps, state-space caps). Never used for a
// decided answer.
struct SolverRefusal : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown by verify_timeline when the timeline itself is ill-formed for the
// graph (out-of-range vertex or time step). Distinct from a coverage or
// budget violation, which is a verdict, not an error.
struct MalformedTimeline : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Edge sets per layer, normalized: u < v, sorted, no duplicates, no loops.
// Empty layers are legal. Immutable after construction.
class TemporalGraph {
public:
    // Accepts layers in any edge order/orientation; normalizes and validates.
    // Throws std::invalid_argument on loops, duplicate edges within a layer,
    // out-of-range endpoints, or layers.size() != tau.
    TemporalGraph(int n, int tau, std::vector<std::vector<Edge>> layers);

    int n() const { return n_; }
    int tau() const { return tau_; }
    const std::vector<Edge>& layer(TimeStep t) const { return layers_[t - 1]; }
    const std::vector<std::vector<Edge>>& layers() const { return layers_; }

    bool operator==(const TemporalGraph&) const = default;

private:
    int n_;
    int tau_;
    std::vector<std::vector<Edge>> layers_;
};

struct IntervalAssignment {
    Vertex v = 0;
    TimeStep a = 0;
    TimeStep b = 0;
    int length() const { return b - a; }
    auto operator<=>(const IntervalAssignment&) const = default;
};

// A set of interval assignments, kept sorted by (v, a, b) with duplicates
// collapsed, so equal timelines compare equal.
class ActivityTimeline {
public:
    ActivityTimeline() = default;
    explicit ActivityTimeline(std::vector<IntervalAssignment> entries);

    const std::vector<IntervalAssignment>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }

    bool operator==(const ActivityTimeline&) const = default;

private:
    std::vector<IntervalAssignment> entries_;
};

// Budget shapes: one global per-vertex bound, explicit per-vertex bounds, or
// per-class bounds over a partition of the vertex set.
struct UniformBudget {
    int k = 0;
    bool operator==(const UniformBudget&) const = default;
};

struct NonUniformBudget {
    // One entry per vertex, listed explicitly; resolve_budget checks the
    // entries form exactly {1..n}.
    std::vector<std::pair<Vertex, int>> entries;
    bool operator==(const NonUniformBudget&) const = default;
};

struct MulticoloredBudget {
    // classes[i] lists the members of class i+1; budgets[i] is its bound.
    // resolve_budget checks the classes partition {1..n}.
    std::vector<std::vector<Vertex>> classes;
    std::vector<int> budgets;
    bool operator==(const MulticoloredBudget&) const = default;
};

using BudgetSpec = std::variant<UniformBudget, NonUniformBudget, MulticoloredBudget>;

// Budget resolved against a concrete vertex count: vertex -> group, group ->
// bound. Uniform and per-vertex budgets get one group per vertex; class
// budgets get one group per class.
struct ResolvedBudget {
    std::vector<int> group_of;  // size n+1, index 0 unused
    std::vector<int> limit;     // size = number of groups
    int groups() const { return static_cast<int>(limit.size()); }
};

// Throws std::invalid_argument when the spec does not fit the vertex count
// (missing/duplicate vertices, negative bounds, non-partition classes).
ResolvedBudget resolve_budget(const BudgetSpec& budget, int n);

enum class ObjectiveKind { MaxLen, SumLen };

struct Objective {
    ObjectiveKind kind = ObjectiveKind::MaxLen;
    int ell = 0;
    bool operator==(const Objective&) const = default;
};

// MaxLen: largest interval length in t; SumLen: total length. Empty -> 0.
long long objective_value(const ActivityTimeline& t, ObjectiveKind kind);

struct SolveOutcome {
    bool yes = false;
    std::optional<ActivityTimeline> witness;  // present iff yes

    static SolveOutcome no() { return {}; }
    static SolveOutcome yes_with(ActivityTimeline t) {
        return {true, std::move(t)};
    }
};

// Verdict of verify_timeline. Valid, or the earliest violation: uncovered
// time-edges are searched by smallest time step then lexicographic edge;
// budget checks run afterwards by smallest vertex/class; the objective check
// runs last. The message is stable, one line, suitable for CLI output.
struct VerifyReport {
    enum class Kind {
        Valid,
        UncoveredTimeEdge,
        BudgetExceeded,
        ClassBudgetExceeded,
        ObjectiveExceeded,
    };
    Kind kind = Kind::Valid;
    TimeStep t = 0;    // UncoveredTimeEdge
    Edge edge{};       // UncoveredTimeEdge
    int subject = 0;   // vertex id or class id for budget violations
    long long value = 0;  // offending count or objective value
    long long bound = 0;  // the bound that was exceeded

    bool valid() const { return kind == Kind::Valid; }
    std::string message() const;
};

// Checks that the active vertices of t form a vertex cover of every layer,
// that per-vertex (or per-class) interval counts respect the budget, and that
// the objective value is at most objective.ell. Throws MalformedTimeline on
// out-of-range entries; malformed budgets throw std::invalid_argument.
VerifyReport verify_timeline(const TemporalGraph& g, const ActivityTimeline& t,
                             const BudgetSpec& budget, const Objective& objective);

// Layer i of the result is layer perm[i-1] of g; perm must be a bijection on
// {1..tau} (else std::invalid_argument).
TemporalGraph permute_layers(const TemporalGraph& g, const std::vector<int>& perm);

// A full problem instance; what solvers and reductions pass around.
struct ProblemInstance {
    TemporalGraph graph;
    BudgetSpec budget;
    Objective objective;
};

// Simple undirected static graph, 1-based vertices. Normalized on use, not
// on construction; helpers that consume one normalize to u < v first.
struct StaticGraph {
    int n = 0;
    std::vector<Edge> edges;
};

// Orients every edge u < v, sorts, drops duplicates; throws
// std::invalid_argument on loops or out-of-range endpoints.
StaticGraph normalize_static(StaticGraph g);

}  // namespace untangle
