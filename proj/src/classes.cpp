#include "tg/classes.hpp"

#include <algorithm>

#include "tg/transform.hpp"

namespace tg {

namespace {

void require_normalized_trimmed_dag(const TransitionGraph& g) {
    require_valid(g);
    for (std::size_t ei = 0; ei < g.edges.size(); ++ei)
        if (g.edges[ei].label.count() > 1)
            throw Error("edge " + std::to_string(ei) +
                        " carries a label of size > 1; run normalize first");
    if (!is_acyclic(g)) throw Error("graph is not acyclic; run the DAG conversion first");
    if (!(trim(g) == g)) throw Error("graph is not trimmed; run trim first");
}

// reach[v] = vertices reachable from v, including v itself.
std::vector<IndexSet> reachability(const TransitionGraph& g) {
    auto order = topological_order(g);
    Adjacency adj(g);
    std::vector<IndexSet> reach(g.vertex_count);
    for (auto it = order->rbegin(); it != order->rend(); ++it) {
        std::size_t v = *it;
        reach[v].insert(v);
        for (std::size_t ei : adj.out[v]) reach[v] |= reach[g.edges[ei].target];
    }
    return reach;
}

}  // namespace

bool is_write_once(const TransitionGraph& g) {
    require_normalized_trimmed_dag(g);
    std::vector<IndexSet> reach = reachability(g);
    for (std::size_t a = 0; a < g.edges.size(); ++a) {
        if (g.edges[a].label.empty()) continue;
        for (std::size_t b = a + 1; b < g.edges.size(); ++b) {
            if (!(g.edges[a].label == g.edges[b].label)) continue;
            // In a trimmed DAG, head-to-tail reachability is the same as
            // co-occurrence on an (s,t)-path.
            if (reach[g.edges[a].target].contains(g.edges[b].source) ||
                reach[g.edges[b].target].contains(g.edges[a].source))
                return false;
        }
    }
    return true;
}

ClassificationReport classify(const TransitionGraph& g) {
    require_normalized_trimmed_dag(g);
    std::vector<IndexSet> reach = reachability(g);

    // Precedence digraph on variables: arc i -> j when some (s,t)-path places
    // an i-labeled edge strictly before a j-labeled one. A self-arc is a
    // repeated variable.
    std::vector<IndexSet> arcs(g.universe_size);
    bool self_arc = false;
    bool identity_ok = true;
    for (std::size_t a = 0; a < g.edges.size(); ++a) {
        if (g.edges[a].label.empty()) continue;
        std::size_t va = g.edges[a].label.max_index();
        for (std::size_t b = 0; b < g.edges.size(); ++b) {
            if (a == b || g.edges[b].label.empty()) continue;
            if (!reach[g.edges[a].target].contains(g.edges[b].source)) continue;
            std::size_t vb = g.edges[b].label.max_index();
            arcs[va].insert(vb);
            if (va == vb) self_arc = true;
            if (va >= vb) identity_ok = false;
        }
    }

    ClassificationReport report;
    report.is_write_once = !self_arc;
    report.is_streaming_under_identity_order = identity_ok;

    // Topological sort of the precedence digraph, smallest index first.
    std::vector<std::size_t> indegree(g.universe_size, 0);
    for (std::size_t v = 0; v < g.universe_size; ++v)
        arcs[v].for_each([&](std::size_t w) { ++indegree[w]; });
    IndexSet placed;
    std::vector<std::size_t> order;
    order.reserve(g.universe_size);
    while (order.size() < g.universe_size) {
        std::size_t pick = g.universe_size;
        for (std::size_t v = 0; v < g.universe_size; ++v)
            if (indegree[v] == 0 && !placed.contains(v)) {
                pick = v;
                break;
            }
        if (pick == g.universe_size) break;  // cycle
        placed.insert(pick);
        order.push_back(pick);
        arcs[pick].for_each([&](std::size_t w) { --indegree[w]; });
    }
    if (order.size() == g.universe_size && !self_arc) report.adaptive_order = std::move(order);
    return report;
}

CountingFunction counting_function(const TransitionGraph& g, const LabelSet& restriction) {
    if (!is_write_once(g)) throw Error("graph is not write-once");

    CountingFunction cf;
    cf.values.assign(g.vertex_count, CountingFunction::kUnreachable);
    cf.values[g.initial] = 0;
    auto order = topological_order(g);
    Adjacency adj(g);
    for (std::size_t v : *order) {
        if (cf.values[v] == CountingFunction::kUnreachable) continue;
        for (std::size_t ei : adj.out[v]) {
            const TgEdge& e = g.edges[ei];
            if (!e.label.subset_of(restriction)) continue;
            std::int64_t candidate = cf.values[v] + static_cast<std::int64_t>(e.label.count());
            cf.values[e.target] = std::max(cf.values[e.target], candidate);
        }
    }
    return cf;
}

bool evaluate_write_once(const TransitionGraph& g, const Assignment& x) {
    if (x.universe_size != g.universe_size)
        throw Error("assignment has " + std::to_string(x.universe_size) +
                    " variables, graph universe is " + std::to_string(g.universe_size));
    CountingFunction cf = counting_function(g, x.units);
    return cf.value(g.terminal) == static_cast<std::int64_t>(x.units.count());
}

}  // namespace tg
