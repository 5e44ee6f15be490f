#include "untangle/core.hpp"

#include <algorithm>
#include <sstream>

namespace untangle {

namespace {

std::string edge_str(const Edge& e) {
    std::ostringstream os;
    os << "{" << e.u << "," << e.v << "}";
    return os.str();
}

}  // namespace

TemporalGraph::TemporalGraph(int n, int tau, std::vector<std::vector<Edge>> layers)
    : n_(n), tau_(tau), layers_(std::move(layers)) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    if (tau < 1) throw std::invalid_argument("lifetime must be at least 1");
    if (static_cast<int>(layers_.size()) != tau)
        throw std::invalid_argument("layer count does not match lifetime");
    for (auto& layer : layers_) {
        for (auto& e : layer) {
            if (e.u > e.v) std::swap(e.u, e.v);
            if (e.u == e.v) throw std::invalid_argument("loop edge " + edge_str(e));
            if (e.u < 1 || e.v > n)
                throw std::invalid_argument("edge endpoint out of range: " + edge_str(e));
        }
        std::sort(layer.begin(), layer.end());
        if (std::adjacent_find(layer.begin(), layer.end()) != layer.end())
            throw std::invalid_argument("duplicate edge within a layer");
    }
}

ActivityTimeline::ActivityTimeline(std::vector<IntervalAssignment> entries)
    : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end());
    entries_.erase(std::unique(entries_.begin(), entries_.end()), entries_.end());
}

ResolvedBudget resolve_budget(const BudgetSpec& budget, int n) {
    ResolvedBudget r;
    r.group_of.assign(n + 1, -1);
    if (const auto* u = std::get_if<UniformBudget>(&budget)) {
        if (u->k < 0) throw std::invalid_argument("budget must be nonnegative");
        r.limit.assign(n, u->k);
        for (Vertex v = 1; v <= n; ++v) r.group_of[v] = v - 1;
        return r;
    }
    if (const auto* nu = std::get_if<NonUniformBudget>(&budget)) {
        r.limit.assign(n, -1);
        for (auto [v, k] : nu->entries) {
            if (v < 1 || v > n)
                throw std::invalid_argument("budget names vertex " + std::to_string(v) +
                                            " outside 1.." + std::to_string(n));
            if (k < 0) throw std::invalid_argument("budget must be nonnegative");
            if (r.limit[v - 1] != -1)
                throw std::invalid_argument("vertex " + std::to_string(v) +
                                            " listed twice in budget");
            r.limit[v - 1] = k;
            r.group_of[v] = v - 1;
        }
        for (Vertex v = 1; v <= n; ++v)
            if (r.limit[v - 1] == -1)
                throw std::invalid_argument("vertex " + std::to_string(v) +
                                            " missing from budget");
        return r;
    }
    const auto& mc = std::get<MulticoloredBudget>(budget);
    if (mc.classes.size() != mc.budgets.size())
        throw std::invalid_argument("class count does not match budget count");
    for (std::size_t i = 0; i < mc.classes.size(); ++i) {
        if (mc.budgets[i] < 0) throw std::invalid_argument("budget must be nonnegative");
        if (mc.classes[i].empty())
            throw std::invalid_argument("class " + std::to_string(i + 1) + " is empty");
        for (Vertex v : mc.classes[i]) {
            if (v < 1 || v > n)
                throw std::invalid_argument("class member " + std::to_string(v) +
                                            " outside 1.." + std::to_string(n));
            if (r.group_of[v] != -1)
                throw std::invalid_argument("vertex " + std::to_string(v) +
                                            " appears in two classes");
            r.group_of[v] = static_cast<int>(i);
        }
        r.limit.push_back(mc.budgets[i]);
    }
    for (Vertex v = 1; v <= n; ++v)
        if (r.group_of[v] == -1)
            throw std::invalid_argument("vertex " + std::to_string(v) +
                                        " belongs to no class");
    return r;
}

long long objective_value(const ActivityTimeline& t, ObjectiveKind kind) {
    long long acc = 0;
    for (const auto& iv : t.entries()) {
        long long len = iv.length();
        if (kind == ObjectiveKind::MaxLen)
            acc = std::max(acc, len);
        else
            acc += len;
    }
    return acc;
}

std::string VerifyReport::message() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Valid:
            os << "VALID";
            break;
        case Kind::UncoveredTimeEdge:
            os << "uncovered edge " << edge_str(edge) << " at time " << t;
            break;
        case Kind::BudgetExceeded:
            os << "vertex " << subject << " uses " << value << " intervals, budget "
               << bound;
            break;
        case Kind::ClassBudgetExceeded:
            os << "class " << subject << " uses " << value << " intervals, budget "
               << bound;
            break;
        case Kind::ObjectiveExceeded:
            os << "objective value " << value << " exceeds bound " << bound;
            break;
    }
    return os.str();
}

VerifyReport verify_timeline(const TemporalGraph& g, const ActivityTimeline& t,
                             const BudgetSpec& budget, const Objective& objective) {
    const int n = g.n();
    const int tau = g.tau();
    for (const auto& iv : t.entries()) {
        if (iv.v < 1 || iv.v > n)
            throw MalformedTimeline("interval names vertex " + std::to_string(iv.v) +
                                    " outside 1.." + std::to_string(n));
        if (iv.a < 1 || iv.b > tau || iv.a > iv.b)
            throw MalformedTimeline("interval [" + std::to_string(iv.a) + "," +
                                    std::to_string(iv.b) + "] of vertex " +
                                    std::to_string(iv.v) + " outside 1.." +
                                    std::to_string(tau));
    }
    ResolvedBudget rb = resolve_budget(budget, n);

    // active[v][t] counting via interval sweep would be overkill; sizes here
    // are small, so test each time-edge against the sorted entry list.
    std::vector<std::vector<char>> active(n + 1, std::vector<char>(tau + 1, 0));
    for (const auto& iv : t.entries())
        for (TimeStep s = iv.a; s <= iv.b; ++s) active[iv.v][s] = 1;

    for (TimeStep s = 1; s <= tau; ++s)
        for (const Edge& e : g.layer(s))
            if (!active[e.u][s] && !active[e.v][s]) {
                VerifyReport r;
                r.kind = VerifyReport::Kind::UncoveredTimeEdge;
                r.t = s;
                r.edge = e;
                return r;
            }

    std::vector<long long> used(rb.groups(), 0);
    for (const auto& iv : t.entries()) ++used[rb.group_of[iv.v]];
    const bool by_class = std::holds_alternative<MulticoloredBudget>(budget);
    for (int gidx = 0; gidx < rb.groups(); ++gidx)
        if (used[gidx] > rb.limit[gidx]) {
            VerifyReport r;
            r.kind = by_class ? VerifyReport::Kind::ClassBudgetExceeded
                              : VerifyReport::Kind::BudgetExceeded;
            r.subject = gidx + 1;
            r.value = used[gidx];
            r.bound = rb.limit[gidx];
            return r;
        }

    long long val = objective_value(t, objective.kind);
    if (val > objective.ell) {
        VerifyReport r;
        r.kind = VerifyReport::Kind::ObjectiveExceeded;
        r.value = val;
        r.bound = objective.ell;
        return r;
    }
    return {};
}

StaticGraph normalize_static(StaticGraph g) {
    for (auto& e : g.edges) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u == e.v)
            throw std::invalid_argument("loop edge at vertex " + std::to_string(e.u));
        if (e.u < 1 || e.v > g.n)
            throw std::invalid_argument("edge endpoint outside 1.." + std::to_string(g.n));
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

TemporalGraph permute_layers(const TemporalGraph& g, const std::vector<int>& perm) {
    const int tau = g.tau();
    if (static_cast<int>(perm.size()) != tau)
        throw std::invalid_argument("permutation length does not match lifetime");
    std::vector<char> seen(tau + 1, 0);
    for (int p : perm) {
        if (p < 1 || p > tau || seen[p])
            throw std::invalid_argument("not a permutation of 1.." + std::to_string(tau));
        seen[p] = 1;
    }
    std::vector<std::vector<Edge>> layers;
    layers.reserve(tau);
    for (int i = 0; i < tau; ++i) layers.push_back(g.layer(perm[i]));
    return TemporalGraph(g.n(), tau, std::move(layers));
}

}  // namespace untangle
