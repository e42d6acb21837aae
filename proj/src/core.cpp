#include "tg/core.hpp"

#include <algorithm>
#include <unordered_set>

namespace tg {

Assignment Assignment::from_bits(const std::vector<bool>& bits) {
    Assignment a;
    a.universe_size = bits.size();
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits[i]) a.units.insert(i);
    return a;
}

Assignment Assignment::from_string(std::string_view bits) {
    Assignment a;
    a.universe_size = bits.size();
    for (std::size_t i = 0; i < bits.size(); ++i) {
        char c = bits[i];
        if (c == '1')
            a.units.insert(i);
        else if (c != '0')
            throw Error("assignment string must consist of '0' and '1'");
    }
    return a;
}

Assignment Assignment::from_units(std::size_t universe_size, LabelSet units) {
    if (!units.empty() && units.max_index() >= universe_size)
        throw Error("unit set index out of range for universe size " +
                    std::to_string(universe_size));
    return Assignment{universe_size, std::move(units)};
}

Assignment Assignment::all_ones(std::size_t universe_size) {
    Assignment a;
    a.universe_size = universe_size;
    for (std::size_t i = 0; i < universe_size; ++i) a.units.insert(i);
    return a;
}

std::string Assignment::to_string() const {
    std::string s(universe_size, '0');
    units.for_each([&](std::size_t i) { s[i] = '1'; });
    return s;
}

std::vector<std::string> validate(const TransitionGraph& g) {
    std::vector<std::string> out;
    if (g.vertex_count == 0) out.push_back("graph has no vertices");
    if (g.initial >= g.vertex_count)
        out.push_back("initial vertex " + std::to_string(g.initial) + " out of range");
    if (g.terminal >= g.vertex_count)
        out.push_back("terminal vertex " + std::to_string(g.terminal) + " out of range");
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const TgEdge& e = g.edges[i];
        if (e.source >= g.vertex_count)
            out.push_back("edge " + std::to_string(i) + ": source " +
                          std::to_string(e.source) + " out of range");
        if (e.target >= g.vertex_count)
            out.push_back("edge " + std::to_string(i) + ": target " +
                          std::to_string(e.target) + " out of range");
        if (!e.label.empty() && e.label.max_index() >= g.universe_size)
            out.push_back("edge " + std::to_string(i) + ": label index " +
                          std::to_string(e.label.max_index()) +
                          " out of range for universe " + std::to_string(g.universe_size));
    }
    return out;
}

void require_valid(const TransitionGraph& g) {
    auto violations = validate(g);
    if (violations.empty()) return;
    std::string msg = "invalid transition graph:";
    for (const auto& v : violations) msg += " [" + v + "]";
    throw Error(msg);
}

Adjacency::Adjacency(const TransitionGraph& g)
    : out(g.vertex_count), in(g.vertex_count) {
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        out[g.edges[i].source].push_back(i);
        in[g.edges[i].target].push_back(i);
    }
}

std::optional<std::vector<std::size_t>> topological_order(const TransitionGraph& g) {
    std::vector<std::size_t> indegree(g.vertex_count, 0);
    for (const TgEdge& e : g.edges) ++indegree[e.target];
    Adjacency adj(g);

    std::vector<std::size_t> order;
    order.reserve(g.vertex_count);
    std::vector<std::size_t> ready;
    for (std::size_t v = 0; v < g.vertex_count; ++v)
        if (indegree[v] == 0) ready.push_back(v);
    while (!ready.empty()) {
        std::size_t v = ready.back();
        ready.pop_back();
        order.push_back(v);
        for (std::size_t ei : adj.out[v])
            if (--indegree[g.edges[ei].target] == 0) ready.push_back(g.edges[ei].target);
    }
    if (order.size() != g.vertex_count) return std::nullopt;
    return order;
}

bool is_acyclic(const TransitionGraph& g) { return topological_order(g).has_value(); }

namespace {

IndexSet sweep(std::size_t vertex_count, std::size_t start,
               const std::vector<std::vector<std::size_t>>& next,
               const std::vector<TgEdge>& edges, bool forward,
               const std::function<bool(const TgEdge&)>& use_edge) {
    IndexSet seen;
    if (start >= vertex_count) return seen;
    std::vector<std::size_t> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (std::size_t ei : next[v]) {
            const TgEdge& e = edges[ei];
            if (use_edge && !use_edge(e)) continue;
            std::size_t w = forward ? e.target : e.source;
            if (!seen.contains(w)) {
                seen.insert(w);
                stack.push_back(w);
            }
        }
    }
    return seen;
}

}  // namespace

IndexSet reachable_from(const TransitionGraph& g, std::size_t start,
                        const std::function<bool(const TgEdge&)>& use_edge) {
    Adjacency adj(g);
    return sweep(g.vertex_count, start, adj.out, g.edges, true, use_edge);
}

IndexSet reaching_to(const TransitionGraph& g, std::size_t goal,
                     const std::function<bool(const TgEdge&)>& use_edge) {
    Adjacency adj(g);
    return sweep(g.vertex_count, goal, adj.in, g.edges, false, use_edge);
}

LabelSet label_set_of_path(const TransitionGraph& g, const PathRef& p) {
    LabelSet acc;
    for (std::size_t k = 0; k < p.edge_indices.size(); ++k) {
        std::size_t ei = p.edge_indices[k];
        if (ei >= g.edges.size())
            throw Error("path refers to edge " + std::to_string(ei) + " out of range");
        if (k > 0 && g.edges[p.edge_indices[k - 1]].target != g.edges[ei].source)
            throw Error("path edges " + std::to_string(p.edge_indices[k - 1]) + " and " +
                        std::to_string(ei) + " are not incident");
        acc |= g.edges[ei].label;
    }
    return acc;
}

namespace {

struct State {
    std::size_t vertex;
    LabelSet collected;
};

// Depth-first expansion of (vertex, collected-set) states from the initial
// vertex. `allowed` restricts traversal to edges with label inside it;
// `useful` restricts to vertices that can still reach the terminal. Calls
// `at_terminal` for each state at the terminal vertex; a true return stops
// the walk early.
template <typename F>
void walk_states(const TransitionGraph& g, const LabelSet* allowed, Budget budget,
                 F&& at_terminal) {
    require_valid(g);
    if (!is_acyclic(g))
        throw Error("graph is not acyclic; run the DAG conversion first");

    auto edge_ok = [&](const TgEdge& e) {
        return !allowed || e.label.subset_of(*allowed);
    };
    IndexSet useful = reaching_to(g, g.terminal, edge_ok);
    if (!useful.contains(g.initial)) return;

    Adjacency adj(g);
    std::vector<std::unordered_set<LabelSet, LabelSetHash>> seen(g.vertex_count);
    std::uint64_t states = 0;

    std::vector<State> stack;
    stack.push_back({g.initial, {}});
    while (!stack.empty()) {
        State st = std::move(stack.back());
        stack.pop_back();
        if (!seen[st.vertex].insert(st.collected).second) continue;
        if (++states > budget.max_states)
            throw BudgetExceeded("state budget of " + std::to_string(budget.max_states) +
                                     " visited (vertex, collected-set) states exceeded",
                                 budget.max_states);
        if (st.vertex == g.terminal && at_terminal(st.collected)) return;
        for (std::size_t ei : adj.out[st.vertex]) {
            const TgEdge& e = g.edges[ei];
            if (!edge_ok(e) || !useful.contains(e.target)) continue;
            LabelSet next = st.collected | e.label;
            if (!seen[e.target].contains(next)) stack.push_back({e.target, std::move(next)});
        }
    }
}

}  // namespace

bool evaluate(const TransitionGraph& g, const Assignment& x, Budget budget) {
    if (x.universe_size != g.universe_size)
        throw Error("assignment has " + std::to_string(x.universe_size) +
                    " variables, graph universe is " + std::to_string(g.universe_size));
    bool found = false;
    walk_states(g, &x.units, budget, [&](const LabelSet& collected) {
        if (collected == x.units) {
            found = true;
            return true;
        }
        return false;
    });
    return found;
}

AcceptedFamily enumerate_accepted(const TransitionGraph& g, Budget budget) {
    AcceptedFamily fam;
    fam.universe_size = g.universe_size;
    walk_states(g, nullptr, budget, [&](const LabelSet& collected) {
        fam.accepted.insert(collected);
        return false;
    });
    return fam;
}

bool equivalent(const TransitionGraph& g1, const TransitionGraph& g2, Budget budget) {
    if (g1.universe_size != g2.universe_size)
        throw Error("universe sizes differ: " + std::to_string(g1.universe_size) + " vs " +
                    std::to_string(g2.universe_size));
    return enumerate_accepted(g1, budget) == enumerate_accepted(g2, budget);
}

bool function_dominates(const AcceptedFamily& f, const AcceptedFamily& g) {
    if (f.universe_size != g.universe_size)
        throw Error("universe sizes differ: " + std::to_string(f.universe_size) + " vs " +
                    std::to_string(g.universe_size));
    return std::includes(f.accepted.begin(), f.accepted.end(), g.accepted.begin(),
                         g.accepted.end());
}

TransitionGraph make_trivial_graph(const AcceptedFamily& f) {
    TransitionGraph g;
    g.universe_size = f.universe_size;
    g.vertex_count = 2;
    g.initial = 0;
    g.terminal = 1;
    for (const LabelSet& s : f.accepted) g.edges.push_back({0, 1, s});
    return g;
}

}  // namespace tg
