#include "tg/bp.hpp"

namespace tg {

namespace {

bool bp_is_acyclic(const BranchingProgram& b) {
    std::vector<std::size_t> indegree(b.vertex_count, 0);
    std::vector<std::vector<std::size_t>> out(b.vertex_count);
    for (const BpEdge& e : b.edges) {
        ++indegree[e.target];
        out[e.source].push_back(e.target);
    }
    std::vector<std::size_t> ready;
    for (std::size_t v = 0; v < b.vertex_count; ++v)
        if (indegree[v] == 0) ready.push_back(v);
    std::size_t seen = 0;
    while (!ready.empty()) {
        std::size_t v = ready.back();
        ready.pop_back();
        ++seen;
        for (std::size_t w : out[v])
            if (--indegree[w] == 0) ready.push_back(w);
    }
    return seen == b.vertex_count;
}

}  // namespace

std::vector<std::string> validate(const BranchingProgram& b) {
    std::vector<std::string> out;
    if (b.vertex_count == 0) out.push_back("program has no vertices");
    if (b.initial >= b.vertex_count)
        out.push_back("initial vertex " + std::to_string(b.initial) + " out of range");
    if (b.terminal >= b.vertex_count)
        out.push_back("terminal vertex " + std::to_string(b.terminal) + " out of range");
    for (std::size_t i = 0; i < b.edges.size(); ++i) {
        const BpEdge& e = b.edges[i];
        if (e.source >= b.vertex_count)
            out.push_back("edge " + std::to_string(i) + ": source " +
                          std::to_string(e.source) + " out of range");
        if (e.target >= b.vertex_count)
            out.push_back("edge " + std::to_string(i) + ": target " +
                          std::to_string(e.target) + " out of range");
        if (e.literal.variable >= b.variable_count)
            out.push_back("edge " + std::to_string(i) + ": variable " +
                          std::to_string(e.literal.variable) + " out of range");
    }
    if (out.empty() && !bp_is_acyclic(b)) out.push_back("program graph is not acyclic");
    return out;
}

void require_valid(const BranchingProgram& b) {
    auto violations = validate(b);
    if (violations.empty()) return;
    std::string msg = "invalid branching program:";
    for (const auto& v : violations) msg += " [" + v + "]";
    throw Error(msg);
}

bool bp_evaluate(const BranchingProgram& b, const Assignment& x) {
    require_valid(b);
    if (x.universe_size != b.variable_count)
        throw Error("assignment has " + std::to_string(x.universe_size) +
                    " variables, program expects " + std::to_string(b.variable_count));

    std::vector<std::vector<std::size_t>> on(b.vertex_count);
    for (const BpEdge& e : b.edges)
        if (x.bit(e.literal.variable) != e.literal.negated) on[e.source].push_back(e.target);

    IndexSet seen;
    std::vector<std::size_t> stack{b.initial};
    seen.insert(b.initial);
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        if (v == b.terminal) return true;
        for (std::size_t w : on[v])
            if (!seen.contains(w)) {
                seen.insert(w);
                stack.push_back(w);
            }
    }
    return false;
}

bool bp_is_monotone(const BranchingProgram& b) {
    for (const BpEdge& e : b.edges)
        if (e.literal.negated) return false;
    return true;
}

}  // namespace tg
