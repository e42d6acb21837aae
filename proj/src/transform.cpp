#include "tg/transform.hpp"

namespace tg {

TransitionGraph trim(const TransitionGraph& g) {
    require_valid(g);
    IndexSet fwd = reachable_from(g, g.initial);
    IndexSet bwd = reaching_to(g, g.terminal);
    IndexSet keep = fwd & bwd;
    keep.insert(g.initial);
    keep.insert(g.terminal);

    std::vector<std::size_t> remap(g.vertex_count, 0);
    std::size_t next = 0;
    for (std::size_t v = 0; v < g.vertex_count; ++v)
        if (keep.contains(v)) remap[v] = next++;

    TransitionGraph out;
    out.universe_size = g.universe_size;
    out.vertex_count = next;
    out.initial = remap[g.initial];
    out.terminal = remap[g.terminal];
    for (const TgEdge& e : g.edges) {
        // An edge with both endpoints on (s,t)-walks lies on one itself.
        if (fwd.contains(e.source) && bwd.contains(e.source) && fwd.contains(e.target) &&
            bwd.contains(e.target))
            out.edges.push_back({remap[e.source], remap[e.target], e.label});
    }
    return out;
}

TransitionGraph normalize_singletons(const TransitionGraph& g) {
    require_valid(g);
    TransitionGraph out;
    out.universe_size = g.universe_size;
    out.vertex_count = g.vertex_count;
    out.initial = g.initial;
    out.terminal = g.terminal;
    for (const TgEdge& e : g.edges) {
        if (e.label.count() <= 1) {
            out.edges.push_back(e);
            continue;
        }
        std::vector<std::size_t> indices = e.label.to_vector();
        std::size_t prev = e.source;
        for (std::size_t k = 0; k + 1 < indices.size(); ++k) {
            std::size_t fresh = out.vertex_count++;
            out.edges.push_back({prev, fresh, LabelSet::single(indices[k])});
            prev = fresh;
        }
        out.edges.push_back({prev, e.target, LabelSet::single(indices.back())});
    }
    return out;
}

TransitionGraph to_dag(const TransitionGraph& g) {
    require_valid(g);
    if (is_acyclic(g)) return g;

    // Any realizable label set is realized by a walk shorter than L: between
    // consecutive label acquisitions a loop-erased segment suffices.
    std::size_t layers = (g.universe_size + 1) * g.vertex_count;
    auto copy_id = [&](std::size_t v, std::size_t layer) {
        return layer * g.vertex_count + v;
    };

    TransitionGraph out;
    out.universe_size = g.universe_size;
    out.vertex_count = (layers + 1) * g.vertex_count;
    out.initial = copy_id(g.initial, 0);
    out.terminal = copy_id(g.terminal, layers);
    for (std::size_t k = 0; k < layers; ++k)
        for (const TgEdge& e : g.edges)
            out.edges.push_back({copy_id(e.source, k), copy_id(e.target, k + 1), e.label});
    for (std::size_t k = 0; k < layers; ++k)
        out.edges.push_back({copy_id(g.terminal, k), copy_id(g.terminal, k + 1), {}});
    return trim(out);
}

}  // namespace tg
