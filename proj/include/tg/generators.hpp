#pragma once

#include <set>
#include <string>
#include <vector>

#include "tg/bp.hpp"
#include "tg/core.hpp"

namespace tg {

// A nondeterministic one-pass streaming algorithm over n input bits:
// transitions are (state, state, bit) triples, accepting at the end of the
// stream in one of the accepting states.
struct StreamingTransition {
    std::size_t from = 0;
    std::size_t to = 0;
    bool bit = false;
};

struct StreamingAlgorithmSpec {
    std::size_t state_count = 0;
    std::size_t initial_state = 0;
    std::vector<std::size_t> accepting_states;
    std::vector<StreamingTransition> transitions;
    std::size_t input_length = 0;
};

// Layered conversion of a streaming algorithm into a transition graph:
// state copies per position, one edge per transition per layer ({i} labels on
// 1-transitions, empty on 0-transitions), empty edges from accepting copies
// at the last layer into the terminal. The result is trimmed and classifies
// as streaming under the identity order; its size is at most
// input_length * |transitions| + |accepting|.
TransitionGraph from_streaming_algorithm(const StreamingAlgorithmSpec& a);

// Parity of n >= 1 inputs, via the two-state parity automaton. Size <= 4n+1.
TransitionGraph xor_graph(std::size_t n);

// At least k of n inputs set, via the count automaton. Size O(n^2).
TransitionGraph threshold_graph(std::size_t n, std::size_t k);

// Exactly k of n inputs set.
TransitionGraph slice_graph(std::size_t n, std::size_t k);

// Any symmetric function, given the set of accepted 1-counts (subset of
// [0, n]).
TransitionGraph symmetric_graph(std::size_t n, const std::set<std::size_t>& accepted_counts);

// The equality-with-weight-check function over 4n variables: two words x, y
// of 2n bits each, accepted when x has weight n and y = x. Variables are
// indexed x_i -> i-1 and y_i -> 2n+i-1, so the natural left-to-right reading
// of x then y is the identity order. The graph reads the words in the
// alternating order x_1, y_1, x_2, y_2, ..., which makes it adaptively
// streaming but (for n >= 2) not streaming under the identity order.
// Size O(n^2), against C(2n, n) accepted assignments.
TransitionGraph eq_graph(std::size_t n);

// All clique graphs on n vertices (one non-trivial clique plus isolated
// vertices), over the pair-indexed universe. Every vertex subset of size <= 1
// collapses to the empty label graph, so the family has exactly 2^n - n
// members.
AcceptedFamily clique_family(std::size_t n);

// The one-edge-per-member graph of clique_family(n).
TransitionGraph clique_indicator_graph(std::size_t n);

// All P3-free graphs on n vertices (disjoint unions of cliques), enumerated
// by brute force over the 2^C(n,2) assignments; intended for n <= 6.
AcceptedFamily p3f_family(std::size_t n);

// Polynomial-size graph for the complement of the P3-free indicator: one
// branch per (middle, {endpoint pair}) triple writes the two wing pairs, then
// chooses the remaining pairs freely, never writing the closing pair.
TransitionGraph not_p3f_graph(std::size_t n);

// Simulation of a monotone branching program: the program's edges keep their
// variables as singleton labels and a full-assignment chain of n two-edge
// choices is appended after the terminal. Size |b| + 2n. Error when the
// program uses negated literals.
TransitionGraph from_monotone_bp(const BranchingProgram& b);

// The O(n^3) branching program for the P3-free indicator: a chain over all
// n(n-1)(n-2) ordered triples (p, q, r) with three parallel edges checking
// not x_{pq}, not x_{qr}, or x_{rp}.
BranchingProgram p3f_branching_program(std::size_t n);

// CNF formula with DIMACS-style literals: nonzero ints, |lit| in [1, n].
struct CnfFormula {
    std::size_t variable_count = 0;
    std::vector<std::vector<int>> clauses;
};

std::vector<std::string> validate(const CnfFormula& c);

struct SatReduction {
    TransitionGraph graph;
    Assignment target;
};

// The satisfiability reduction: a chain with one vertex per CNF variable and
// two parallel edges per step, each labeled by the clause indices that the
// corresponding polarity satisfies. The returned all-ones target assignment
// evaluates to true on the graph iff the formula is satisfiable. Exactly
// 2 * variable_count edges. Empty clauses are permitted; their index appears
// on no edge, making the instance unsatisfiable.
SatReduction sat_reduction(const CnfFormula& c);

}  // namespace tg
