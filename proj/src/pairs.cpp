#include "tg/pairs.hpp"

#include "tg/errors.hpp"

namespace tg {

std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    if (i == j || j >= n) throw Error("invalid vertex pair for pair-indexed universe");
    // Rank of (i, j) in lexicographic order over i < j.
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::pair<std::size_t, std::size_t> pair_from_index(std::size_t n, std::size_t index) {
    if (index >= pair_count(n)) throw Error("pair index out of range");
    std::size_t i = 0;
    std::size_t row = n - 1;
    while (index >= row) {
        index -= row;
        --row;
        ++i;
    }
    return {i, i + 1 + index};
}

std::optional<std::size_t> pair_universe_order(std::size_t universe_size) {
    for (std::size_t n = 2;; ++n) {
        std::size_t c = pair_count(n);
        if (c == universe_size) return n;
        if (c > universe_size) return std::nullopt;
    }
}

LabelGraph LabelGraph::decode(const LabelSet& label, std::size_t n) {
    LabelGraph lg;
    lg.n = n;
    lg.adjacency.assign(n, {});
    label.for_each([&](std::size_t idx) {
        auto [i, j] = pair_from_index(n, idx);
        lg.adjacency[i].insert(j);
        lg.adjacency[j].insert(i);
    });
    return lg;
}

CliqueDecomposition clique_decomposition(const LabelGraph& lg) {
    CliqueDecomposition dec;
    IndexSet visited;
    for (std::size_t v = 0; v < lg.n; ++v) {
        if (visited.contains(v) || lg.adjacency[v].empty()) continue;
        // Collect v's connected component.
        IndexSet component;
        std::vector<std::size_t> stack{v};
        component.insert(v);
        while (!stack.empty()) {
            std::size_t u = stack.back();
            stack.pop_back();
            lg.adjacency[u].for_each([&](std::size_t w) {
                if (!component.contains(w)) {
                    component.insert(w);
                    stack.push_back(w);
                }
            });
        }
        visited |= component;
        std::size_t size = component.count();
        bool complete = true;
        component.for_each([&](std::size_t u) {
            if (lg.adjacency[u].count() != size - 1) complete = false;
        });
        if (!complete) {
            dec.components_complete = false;
            dec.offending_component = component;
            return dec;
        }
        dec.cliques.push_back(component);
    }
    return dec;
}

bool is_p3_free(const LabelSet& label, std::size_t n) {
    return clique_decomposition(LabelGraph::decode(label, n)).components_complete;
}

bool is_clique_graph(const LabelSet& label, std::size_t n) {
    CliqueDecomposition dec = clique_decomposition(LabelGraph::decode(label, n));
    return dec.components_complete && dec.cliques.size() <= 1;
}

}  // namespace tg
