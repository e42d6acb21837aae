#pragma once

#include "tg/core.hpp"

namespace tg {

// Removes every vertex that lies on no (initial, terminal)-walk and compacts
// vertex ids, preserving relative order. The initial and terminal vertices
// are always retained, so a graph with no such walk comes back edgeless.
// Accepts cyclic input; preserves the represented function.
TransitionGraph trim(const TransitionGraph& g);

// Replaces every edge labeled by a set of size k >= 2 with a chain of k fresh
// edges carrying the singletons in increasing index order. Fresh vertices are
// appended after the existing ids in edge order; chains replace their edge in
// place, so relative edge order is preserved. Equivalence-preserving.
TransitionGraph normalize_singletons(const TransitionGraph& g);

// Equivalent DAG of an arbitrary transition graph. Acyclic input is returned
// unchanged, which keeps trim/normalize/to_dag idempotent on their own
// output. Cyclic input is unrolled into L+1 layers, L = (universe+1)*vertices:
// every edge is replicated between consecutive layers and empty-labeled skip
// edges pad the terminal's copies, so the result accepts exactly the label
// sets of (initial, terminal)-walks. The unrolled graph is trimmed.
TransitionGraph to_dag(const TransitionGraph& g);

}  // namespace tg
