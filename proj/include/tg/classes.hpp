#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "tg/core.hpp"

namespace tg {

// Where a graph sits in the chain of restricted classes:
// streaming under the identity order => adaptively streaming => write-once.
struct ClassificationReport {
    // Along every (s,t)-path the non-empty labels strictly increase.
    bool is_streaming_under_identity_order = false;
    // A variable order witnessing adaptive streaming, when one exists.
    std::optional<std::vector<std::size_t>> adaptive_order;
    // No (s,t)-path repeats a variable.
    bool is_write_once = false;
};

// Maximum path-label cardinality per vertex, computed over the subgraph
// surviving a restriction. Unreachable vertices carry the sentinel.
struct CountingFunction {
    static constexpr std::int64_t kUnreachable = std::numeric_limits<std::int64_t>::min();
    std::vector<std::int64_t> values;

    std::int64_t value(std::size_t vertex) const { return values[vertex]; }
};

// The class operations require a trimmed DAG whose labels are empty or
// singletons (Error otherwise, instructing normalization).

// True iff no (s,t)-path carries the same variable twice: for each pair of
// equal non-empty labels, neither edge's head may reach the other's tail.
bool is_write_once(const TransitionGraph& g);

// Full class detection. The adaptive order is found by topologically sorting
// the variable precedence digraph (arc i -> j when some path places an
// i-labeled edge strictly before a j-labeled one); smallest index first among
// ties, absent when the digraph has a cycle or a variable repeats.
ClassificationReport classify(const TransitionGraph& g);

// Deletes the edges whose label is not inside `restriction`, then evaluates
//   value(initial) = 0,  value(v) = max over surviving edges (u, v) of
//   value(u) + |label(u, v)|
// in topological order. Requires a write-once graph (Error otherwise).
CountingFunction counting_function(const TransitionGraph& g, const LabelSet& restriction);

// Polynomial-time evaluation on write-once graphs: the assignment is
// accepted iff the restricted counting function reaches the terminal with
// value equal to the number of ones.
bool evaluate_write_once(const TransitionGraph& g, const Assignment& x);

}  // namespace tg
