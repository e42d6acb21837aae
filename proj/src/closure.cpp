#include "tg/closure.hpp"

#include <algorithm>
#include <unordered_set>

#include "tg/pairs.hpp"
#include "tg/transform.hpp"

namespace tg {

namespace {

void require_trimmed_dag(const TransitionGraph& g) {
    require_valid(g);
    if (!is_acyclic(g)) throw Error("graph is not acyclic; run the DAG conversion first");
    if (!(trim(g) == g))
        throw Error("graph is not trimmed; run trim first (closure quantifies over "
                    "paths through every vertex)");
}

std::string describe_set(const LabelSet& s) {
    std::string out = "{";
    bool first = true;
    s.for_each([&](std::size_t i) {
        if (!first) out += ",";
        out += std::to_string(i);
        first = false;
    });
    return out + "}";
}

std::string describe_vertices(const IndexSet& s) { return describe_set(s); }

}  // namespace

TransitionGraph closure(const TransitionGraph& g) {
    require_trimmed_dag(g);
    TransitionGraph out = g;
    for (std::size_t var = 0; var < g.universe_size; ++var) {
        auto avoids = [var](const TgEdge& e) { return !e.label.contains(var); };
        IndexSet fwd = reachable_from(g, g.initial, avoids);
        IndexSet bwd = reaching_to(g, g.terminal, avoids);
        for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
            if (!fwd.contains(g.edges[ei].source)) out.edges[ei].label.insert(var);
            if (!bwd.contains(g.edges[ei].target)) out.edges[ei].label.insert(var);
        }
    }
    return out;
}

bool is_closed(const TransitionGraph& g) {
    TransitionGraph c = closure(g);
    for (std::size_t ei = 0; ei < g.edges.size(); ++ei)
        if (!(c.edges[ei].label == g.edges[ei].label)) return false;
    return true;
}

namespace {

// Expands (vertex, collected-label) states with parent links so violations
// can name a concrete path prefix. `on_state` sees each distinct state once;
// `on_step` sees each (state, outgoing edge) pair once.
struct PrefixWalk {
    struct Node {
        std::size_t vertex;
        LabelSet collected;
        std::size_t parent;    // index into nodes, or npos for the root
        std::size_t via_edge;  // edge into this state
    };
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    std::vector<Node> nodes;

    std::vector<std::size_t> path_to(std::size_t idx) const {
        std::vector<std::size_t> edges;
        while (nodes[idx].parent != npos) {
            edges.push_back(nodes[idx].via_edge);
            idx = nodes[idx].parent;
        }
        std::reverse(edges.begin(), edges.end());
        return edges;
    }

    template <typename OnState, typename OnStep>
    std::uint64_t run(const TransitionGraph& g, Budget budget, OnState&& on_state,
                      OnStep&& on_step) {
        Adjacency adj(g);
        std::vector<std::unordered_set<LabelSet, LabelSetHash>> seen(g.vertex_count);
        std::uint64_t states = 0;
        std::vector<std::size_t> stack;

        nodes.push_back({g.initial, {}, npos, npos});
        stack.push_back(0);
        while (!stack.empty()) {
            std::size_t idx = stack.back();
            stack.pop_back();
            const Node node = nodes[idx];
            if (!seen[node.vertex].insert(node.collected).second) continue;
            if (++states > budget.max_states)
                throw BudgetExceeded("state budget of " + std::to_string(budget.max_states) +
                                         " exceeded while checking path structure",
                                     budget.max_states);
            on_state(idx, node.vertex, node.collected);
            for (std::size_t ei : adj.out[node.vertex]) {
                const TgEdge& e = g.edges[ei];
                on_step(idx, node.collected, ei);
                LabelSet next = node.collected | e.label;
                if (!seen[e.target].contains(next)) {
                    nodes.push_back({e.target, std::move(next), idx, ei});
                    stack.push_back(nodes.size() - 1);
                }
            }
        }
        return states;
    }
};

bool inclusion_comparable(const IndexSet& a, const IndexSet& b) {
    return a.subset_of(b) || b.subset_of(a);
}

enum class FamilyShape { P3Free, CliqueGraph };

StructureReport check_structure(const TransitionGraph& g, FamilyShape shape, Budget budget) {
    require_trimmed_dag(g);
    auto order = pair_universe_order(g.universe_size);
    if (!order)
        throw Error("universe size " + std::to_string(g.universe_size) +
                    " is not a pair count C(n,2); structure checks need a "
                    "pair-indexed universe");
    std::size_t n = *order;

    AcceptedFamily fam = enumerate_accepted(g, budget);
    for (const LabelSet& s : fam.accepted) {
        if (shape == FamilyShape::P3Free && !is_p3_free(s, n))
            throw Error("accepted set " + describe_set(s) +
                        " decodes to a label graph that is not P3-free");
        if (shape == FamilyShape::CliqueGraph && !is_clique_graph(s, n))
            throw Error("accepted set " + describe_set(s) +
                        " decodes to a label graph that is not a clique graph");
    }

    StructureReport report;
    report.label_vertex_count = n;

    // Per-edge label shape, and the cliques used by the path checks below.
    std::vector<CliqueDecomposition> edge_cliques(g.edges.size());
    for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
        edge_cliques[ei] = clique_decomposition(LabelGraph::decode(g.edges[ei].label, n));
        const CliqueDecomposition& dec = edge_cliques[ei];
        if (!dec.components_complete)
            report.violations.push_back(
                {ei, {}, "edge " + std::to_string(ei) + " label " +
                             describe_set(g.edges[ei].label) +
                             " is not P3-free: component " +
                             describe_vertices(dec.offending_component) + " is incomplete"});
        else if (shape == FamilyShape::CliqueGraph && dec.cliques.size() > 1)
            report.violations.push_back(
                {ei, {}, "edge " + std::to_string(ei) + " label " +
                             describe_set(g.edges[ei].label) +
                             " decodes to more than one non-trivial clique"});
    }

    PrefixWalk walk;
    report.states_visited = walk.run(
        g, budget,
        [&](std::size_t idx, std::size_t, const LabelSet& collected) {
            CliqueDecomposition dec = clique_decomposition(LabelGraph::decode(collected, n));
            if (!dec.components_complete)
                report.violations.push_back({std::nullopt, walk.path_to(idx),
                                             "path prefix label " + describe_set(collected) +
                                                 " is not P3-free: component " +
                                                 describe_vertices(dec.offending_component) +
                                                 " is incomplete"});
            else if (shape == FamilyShape::CliqueGraph && dec.cliques.size() > 1)
                report.violations.push_back({std::nullopt, walk.path_to(idx),
                                             "path prefix label " + describe_set(collected) +
                                                 " decodes to more than one non-trivial "
                                                 "clique"});
        },
        [&](std::size_t idx, const LabelSet& collected, std::size_t ei) {
            CliqueDecomposition pre = clique_decomposition(LabelGraph::decode(collected, n));
            const CliqueDecomposition& next = edge_cliques[ei];
            if (!pre.components_complete || !next.components_complete)
                return;  // already reported above
            for (const IndexSet& a : pre.cliques) {
                for (const IndexSet& b : next.cliques) {
                    bool ok = shape == FamilyShape::CliqueGraph
                                  ? inclusion_comparable(a, b)
                                  : (!a.intersects(b) || inclusion_comparable(a, b));
                    if (!ok)
                        report.violations.push_back(
                            {ei, walk.path_to(idx),
                             "cliques " + describe_vertices(a) + " of path prefix " +
                                 describe_set(collected) + " and " + describe_vertices(b) +
                                 " of edge " + std::to_string(ei) + " are " +
                                 (shape == FamilyShape::CliqueGraph
                                      ? "not inclusion-comparable"
                                      : "overlapping but not inclusion-comparable")});
                }
            }
        });
    return report;
}

}  // namespace

StructureReport check_p3free_structure(const TransitionGraph& g, Budget budget) {
    return check_structure(g, FamilyShape::P3Free, budget);
}

StructureReport check_clique_structure(const TransitionGraph& g, Budget budget) {
    return check_structure(g, FamilyShape::CliqueGraph, budget);
}

}  // namespace tg
