#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tg/errors.hpp"
#include "tg/label_set.hpp"

namespace tg {

// An assignment of n Boolean variables, kept as its unit set (the positions
// holding 1).
struct Assignment {
    std::size_t universe_size = 0;
    LabelSet units;

    static Assignment from_bits(const std::vector<bool>& bits);
    // Accepts a string of '0'/'1' characters, index 0 leftmost.
    static Assignment from_string(std::string_view bits);
    static Assignment from_units(std::size_t universe_size, LabelSet units);
    static Assignment all_ones(std::size_t universe_size);

    bool bit(std::size_t i) const { return units.contains(i); }
    std::string to_string() const;

    bool operator==(const Assignment&) const = default;
};

// One directed edge of a transition graph with its subset-valued label.
struct TgEdge {
    std::size_t source = 0;
    std::size_t target = 0;
    LabelSet label;

    bool operator==(const TgEdge&) const = default;
};

// A transition graph: directed multigraph with an initial vertex, a terminal
// vertex, and subset-valued edge labels. Loops and parallel edges are allowed
// in the general form; evaluation and enumeration require a DAG.
//
// The size of the graph is its edge count. Edge order is part of the value:
// it identifies parallel edges and fixes file output.
struct TransitionGraph {
    std::size_t universe_size = 0;
    std::size_t vertex_count = 0;
    std::size_t initial = 0;
    std::size_t terminal = 0;
    std::vector<TgEdge> edges;

    std::size_t size() const { return edges.size(); }

    bool operator==(const TransitionGraph&) const = default;
};

// A path given as a sequence of edge indices. Consecutive edges must be
// incident; the empty sequence stands for the trivial path.
struct PathRef {
    std::vector<std::size_t> edge_indices;
};

// The accepted set of a Boolean function, listed explicitly: the unit sets of
// all assignments mapped to 1.
struct AcceptedFamily {
    std::size_t universe_size = 0;
    std::set<LabelSet> accepted;

    bool operator==(const AcceptedFamily&) const = default;
};

// Cap on visited (vertex, collected-set) states for the exponential-in-the-
// worst-case searches. Exceeding it raises BudgetExceeded.
struct Budget {
    std::uint64_t max_states = 10'000'000;
};

// --- Structural checks -------------------------------------------------

// Returns human-readable descriptions of every invariant violation; empty
// means the graph is well-formed. Violations are data, not failures.
std::vector<std::string> validate(const TransitionGraph& g);

// Throws Error if validate(g) reports anything.
void require_valid(const TransitionGraph& g);

bool is_acyclic(const TransitionGraph& g);

// Topological order of the vertices, or nullopt for cyclic graphs.
std::optional<std::vector<std::size_t>> topological_order(const TransitionGraph& g);

// Out-/in-edge indices per vertex.
struct Adjacency {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::vector<std::size_t>> in;

    explicit Adjacency(const TransitionGraph& g);
};

// Vertices reachable from `start` along edges satisfying `use_edge`
// (all edges when the predicate is empty).
IndexSet reachable_from(const TransitionGraph& g, std::size_t start,
                        const std::function<bool(const TgEdge&)>& use_edge = {});

// Vertices from which `goal` is reachable, same edge filter.
IndexSet reaching_to(const TransitionGraph& g, std::size_t goal,
                     const std::function<bool(const TgEdge&)>& use_edge = {});

// --- Semantics ----------------------------------------------------------

// Union of the edge labels along the path. Throws Error on out-of-range or
// non-incident edge sequences.
LabelSet label_set_of_path(const TransitionGraph& g, const PathRef& p);

// True iff some (initial, terminal)-path P has label set exactly equal to the
// unit set of x. Requires a DAG; edges whose label is not a subset of the
// unit set are ignored; memoizes (vertex, collected-set) states. Worst-case
// exponential in the number of ones of x.
bool evaluate(const TransitionGraph& g, const Assignment& x, Budget budget = {});

// The set of label sets of all (initial, terminal)-paths, deduplicated.
// Requires a DAG; depth-first traversal with (vertex, collected-set)
// deduplication under the state budget.
AcceptedFamily enumerate_accepted(const TransitionGraph& g, Budget budget = {});

// True iff the two graphs represent the same function. Requires equal
// universes (Error otherwise) and DAG inputs.
bool equivalent(const TransitionGraph& g1, const TransitionGraph& g2, Budget budget = {});

// True iff g's accepted sets are all accepted by f (g is dominated by f).
// Throws Error on universe mismatch.
bool function_dominates(const AcceptedFamily& f, const AcceptedFamily& g);

// The one-edge-per-accepted-set graph: two vertices, one (s,t) edge per
// member labeled by that member. Its size equals the family size, which is
// the uniform upper bound on minimal size.
TransitionGraph make_trivial_graph(const AcceptedFamily& f);

}  // namespace tg
