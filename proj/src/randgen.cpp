#include "tg/randgen.hpp"

#include <algorithm>

#include "tg/classes.hpp"
#include "tg/transform.hpp"

namespace tg {

LabelSet random_label_set(Rng& rng, std::size_t universe_size, std::size_t max_card) {
    LabelSet s;
    if (universe_size == 0) return s;
    std::size_t card = rng.below(max_card + 1);
    for (std::size_t i = 0; i < card; ++i) s.insert(rng.below(universe_size));
    return s;
}

AcceptedFamily random_family(Rng& rng, std::size_t universe_size, std::size_t max_members) {
    AcceptedFamily f;
    f.universe_size = universe_size;
    std::size_t members = rng.below(max_members + 1);
    for (std::size_t i = 0; i < members; ++i)
        f.accepted.insert(random_label_set(rng, universe_size, universe_size));
    return f;
}

TransitionGraph random_transition_graph(Rng& rng, const RandomGraphOptions& opts) {
    TransitionGraph g;
    g.universe_size = opts.universe_size;
    g.vertex_count = 1 + rng.below(opts.max_vertices);
    g.initial = rng.below(g.vertex_count);
    g.terminal = rng.below(g.vertex_count);
    std::size_t edges = rng.below(opts.max_edges + 1);
    for (std::size_t i = 0; i < edges; ++i) {
        std::size_t u = rng.below(g.vertex_count);
        std::size_t v = rng.below(g.vertex_count);
        if (!opts.allow_cycles) {
            if (g.vertex_count < 2) continue;
            while (v == u) v = rng.below(g.vertex_count);
            if (u > v) std::swap(u, v);
        }
        g.edges.push_back({u, v, random_label_set(rng, opts.universe_size,
                                                  opts.max_label_card)});
    }
    return g;
}

TransitionGraph random_trimmed_dag(Rng& rng, const RandomGraphOptions& opts) {
    RandomGraphOptions dag_opts = opts;
    dag_opts.allow_cycles = false;
    TransitionGraph best;
    for (int attempt = 0; attempt < 16; ++attempt) {
        TransitionGraph g = random_transition_graph(rng, dag_opts);
        if (g.vertex_count >= 2) {
            g.initial = 0;
            g.terminal = g.vertex_count - 1;
        }
        TransitionGraph t = trim(g);
        if (t.size() > best.size() || attempt == 0) best = std::move(t);
        if (best.size() >= 2) break;
    }
    return best;
}

TransitionGraph random_write_once_graph(Rng& rng, const RandomGraphOptions& opts) {
    RandomGraphOptions wo_opts = opts;
    wo_opts.max_label_card = 1;
    for (int attempt = 0; attempt < 200; ++attempt) {
        TransitionGraph g = random_trimmed_dag(rng, wo_opts);
        if (g.size() < 2) continue;
        if (is_write_once(g)) return g;
    }
    // Rejection ran dry; a chain with distinct labels is always write-once.
    TransitionGraph chain;
    chain.universe_size = opts.universe_size;
    chain.vertex_count = opts.universe_size + 1;
    chain.initial = 0;
    chain.terminal = opts.universe_size;
    for (std::size_t i = 0; i < opts.universe_size; ++i)
        chain.edges.push_back({i, i + 1, rng.chance(70) ? LabelSet::single(i) : LabelSet{}});
    return chain;
}

BranchingProgram random_branching_program(Rng& rng, const RandomBpOptions& opts) {
    BranchingProgram b;
    b.variable_count = 1 + rng.below(opts.max_variables);
    b.vertex_count = 2 + rng.below(std::max<std::size_t>(1, opts.max_vertices - 1));
    b.initial = 0;
    b.terminal = b.vertex_count - 1;
    std::size_t edges = 1 + rng.below(opts.max_edges);
    for (std::size_t i = 0; i < edges; ++i) {
        std::size_t u = rng.below(b.vertex_count - 1);
        std::size_t v = u + 1 + rng.below(b.vertex_count - u - 1);
        BpLiteral lit{rng.below(b.variable_count), !opts.monotone && rng.chance(40)};
        b.edges.push_back({u, v, lit});
    }
    return b;
}

CnfFormula random_cnf(Rng& rng, std::size_t max_variables, std::size_t max_clauses) {
    CnfFormula c;
    c.variable_count = 1 + rng.below(max_variables);
    std::size_t clauses = rng.below(max_clauses + 1);
    for (std::size_t j = 0; j < clauses; ++j) {
        std::vector<int> clause;
        std::size_t len = 1 + rng.below(3);
        for (std::size_t l = 0; l < len; ++l) {
            int var = 1 + static_cast<int>(rng.below(c.variable_count));
            clause.push_back(rng.chance(50) ? var : -var);
        }
        c.clauses.push_back(std::move(clause));
    }
    return c;
}

}  // namespace tg
