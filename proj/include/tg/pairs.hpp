#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "tg/label_set.hpp"

namespace tg {

// Variables indexed by unordered pairs {i, j}, i < j, over [0, n). The
// variable of {i, j} sits at the lexicographic rank of (i, j). A label set
// over such a universe decodes to an undirected "label graph" on n vertices.

inline std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j);
std::pair<std::size_t, std::size_t> pair_from_index(std::size_t n, std::size_t index);

// The n >= 2 with C(n,2) = universe_size, if one exists.
std::optional<std::size_t> pair_universe_order(std::size_t universe_size);

// Adjacency view of the label graph encoded by a pair-indexed label set.
struct LabelGraph {
    std::size_t n = 0;
    std::vector<IndexSet> adjacency;

    static LabelGraph decode(const LabelSet& label, std::size_t n);
};

// Maximal cliques of a label graph whose components are all complete
// (equivalently, of a P3-free graph). Only non-trivial cliques (>= 2
// vertices) are listed. If some component with an edge is not complete the
// decomposition fails and `offending_component` holds its vertex set.
struct CliqueDecomposition {
    bool components_complete = true;
    std::vector<IndexSet> cliques;
    IndexSet offending_component;
};

CliqueDecomposition clique_decomposition(const LabelGraph& lg);

// P3-free: no induced path on three vertices; equivalently every connected
// component is a clique.
bool is_p3_free(const LabelSet& label, std::size_t n);

// Clique graph: at most one non-trivial component, and that one complete.
bool is_clique_graph(const LabelSet& label, std::size_t n);

}  // namespace tg
