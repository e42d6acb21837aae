#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "tg/bp.hpp"
#include "tg/core.hpp"
#include "tg/generators.hpp"

namespace tg {

// Text formats. All three are ASCII with LF line endings; '#' starts a
// comment that runs to the end of the line; blank lines are ignored.
//
//   tg 1                          nbp 1                      tt 1
//   universe <n>                  vars <n>                   vars <n>
//   vertices <V>                  vertices <V>               <bitstring>
//   initial <id>                  initial <id>               ...
//   terminal <id>                 terminal <id>
//   edge <u> <v> <labels>         edge <u> <v> <+i|-i>
//
// Edge labels are '-' for the empty set or comma-separated strictly
// increasing zero-based indices without spaces. Truth-table lines are
// accepted assignments as n-character bitstrings, index 0 leftmost.
//
// Printing is canonical (fields in the order above, edges in list order,
// truth-table rows sorted), so print -> parse -> print is byte-identical.
// Parsers check syntax only; range violations are validate()'s business.

TransitionGraph parse_transition_graph(std::istream& in);
TransitionGraph parse_transition_graph(const std::string& text);
std::string print_transition_graph(const TransitionGraph& g);

AcceptedFamily parse_truth_table(std::istream& in);
AcceptedFamily parse_truth_table(const std::string& text);
std::string print_truth_table(const AcceptedFamily& f);

BranchingProgram parse_branching_program(std::istream& in);
BranchingProgram parse_branching_program(const std::string& text);
std::string print_branching_program(const BranchingProgram& b);

// Standard DIMACS CNF: 'c' comment lines, a 'p cnf <vars> <clauses>' header,
// then whitespace-separated literals with 0 terminating each clause.
CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs(const std::string& text);
std::string print_dimacs(const CnfFormula& c);

enum class FileKind { TransitionGraph, BranchingProgram, TruthTable };

// Reads the header line of one of the three formats.
FileKind sniff_kind(const std::string& text);

// GraphViz DOT text. The initial vertex is drawn as a square, the terminal
// doubly circled; edge labels render as index sets, or as i-j pair names when
// a pair order n is given (requires universe == C(n,2)). Byte-stable for a
// fixed input.
std::string export_dot(const TransitionGraph& g,
                       std::optional<std::size_t> pair_order = std::nullopt);
std::string export_dot(const BranchingProgram& b);

}  // namespace tg
