#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tg/core.hpp"

namespace tg {

// Closure of the labeling function. The label of an edge (u, v) grows by
// every variable that occurs on all paths from the initial vertex to u, and
// by every variable that occurs on all paths from v to the terminal vertex.
// Computed per variable: delete the edges carrying it, then a vertex picks
// the variable up exactly when it becomes unreachable in the reduced graph.
//
// Requires a trimmed DAG (Error otherwise): on dead vertices the phrase
// "on all paths" would be vacuous. Preserves the represented function and is
// idempotent.
TransitionGraph closure(const TransitionGraph& g);

// True iff closure(g) leaves every label unchanged.
bool is_closed(const TransitionGraph& g);

struct StructureViolation {
    // Offending edge index, if the violation names one.
    std::optional<std::size_t> edge;
    // An (initial, x)-path prefix witnessing the violation, as edge indices.
    std::vector<std::size_t> path_edges;
    std::string detail;
};

struct StructureReport {
    std::vector<StructureViolation> violations;
    std::uint64_t states_visited = 0;
    // Vertex count n of the decoded label graphs.
    std::size_t label_vertex_count = 0;

    bool passed() const { return violations.empty(); }
};

// Structural facts that hold on every closed graph whose accepted sets all
// decode to P3-free label graphs: each edge label is P3-free, each path
// prefix label is P3-free, and the maximal cliques of a prefix label and of
// any edge leaving its endpoint are pairwise disjoint or inclusion-comparable.
//
// Preconditions checked here: trimmed DAG, pair-indexed universe, and an
// accepted family of P3-free sets (Error naming the offending set otherwise).
// Closedness of the labeling is the caller's contract; on a graph with a
// tampered label the facts above simply fail and are reported.
StructureReport check_p3free_structure(const TransitionGraph& g, Budget budget = {});

// Same scheme for accepted families dominated by the clique-graph indicator:
// each edge label and each path prefix label decodes to a clique graph, and
// the non-trivial clique of a prefix is inclusion-comparable with the
// non-trivial clique of any edge leaving its endpoint (so the prefix cliques
// along every path form a chain).
StructureReport check_clique_structure(const TransitionGraph& g, Budget budget = {});

}  // namespace tg
