#pragma once

#include <string>
#include <vector>

#include "tg/core.hpp"

namespace tg {

struct BpLiteral {
    std::size_t variable = 0;
    bool negated = false;

    bool operator==(const BpLiteral&) const = default;
};

struct BpEdge {
    std::size_t source = 0;
    std::size_t target = 0;
    BpLiteral literal;

    bool operator==(const BpEdge&) const = default;
};

// Nondeterministic branching program: a DAG whose edges carry literals. An
// assignment switches on the edges whose literal it satisfies; the program
// accepts when the terminal is reachable from the initial vertex through
// switched-on edges.
struct BranchingProgram {
    std::size_t variable_count = 0;
    std::size_t vertex_count = 0;
    std::size_t initial = 0;
    std::size_t terminal = 0;
    std::vector<BpEdge> edges;

    std::size_t size() const { return edges.size(); }

    bool operator==(const BranchingProgram&) const = default;
};

std::vector<std::string> validate(const BranchingProgram& b);
void require_valid(const BranchingProgram& b);

// Single reachability sweep over the assignment graph.
bool bp_evaluate(const BranchingProgram& b, const Assignment& x);

// True iff no edge carries a negated literal.
bool bp_is_monotone(const BranchingProgram& b);

}  // namespace tg
