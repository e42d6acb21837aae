#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tg/core.hpp"

namespace tg {

struct SearchStats {
    // Labelings fully checked against the target.
    std::uint64_t candidates = 0;
    // Structures and labelings discarded by pruning or canonical dedup.
    std::uint64_t pruned = 0;
};

struct MinDcOptions {
    // Largest label cardinality tried besides singletons and the empty label.
    // Recorded in the result: exactness claims are scoped by it.
    std::size_t label_cap = 3;
    unsigned jobs = 1;
    // Disable only for the canonicalization soundness check.
    bool canonicalize = true;
    // Cap on enumerated structures plus estimated labelings; exceeding it
    // stops the search with an explicit partial result.
    std::uint64_t candidate_budget = 200'000'000;
};

struct MinSearchResult {
    AcceptedFamily target;
    std::optional<std::size_t> minimal_size;
    std::optional<TransitionGraph> witness;
    // Largest edge count k for which the candidate space was exhausted.
    std::size_t exhausted_up_to = 0;
    std::size_t label_cap = 0;
    bool budget_exhausted = false;
    SearchStats stats;
};

// Smallest size of a transition graph representing the target family, by
// exhaustive enumeration of trimmed DAG candidates of increasing edge count.
// Candidates have distinct initial and terminal vertices (an edgeless graph
// accepts nothing), at most k+1 vertices in topological order, and labels
// drawn from the subsets (up to label_cap elements) of the union of the
// target's accepted sets. Once every k < |target| is exhausted, the one-edge-per-
// member graph settles the answer at |target|, so slices of that size are
// never enumerated. Deterministic for fixed inputs, independent of jobs;
// among equal-size witnesses the first in canonical enumeration order is
// returned.
MinSearchResult min_dc(const AcceptedFamily& target, std::size_t max_edges,
                       const MinDcOptions& opts = {});

struct SubfamilyResult {
    std::uint64_t member_mask = 0;  // over the target's sorted member list
    std::size_t family_size = 0;
    std::optional<std::size_t> minimal_size;
    bool verified = false;  // search completed within budget
    bool hard = false;      // minimal_size == family_size
};

struct UniformHardnessReport {
    bool uniformly_hard = false;
    // False when some subfamily search hit the budget.
    bool complete = false;
    std::vector<SubfamilyResult> subfamilies;
};

// Runs min_dc on every subfamily g of f with max edges min(max_edges, |g|)
// and reports whether each needs exactly |g| edges.
UniformHardnessReport verify_uniform_hardness(const AcceptedFamily& f,
                                              std::size_t max_edges,
                                              const MinDcOptions& opts = {});

struct UpperBoundRow {
    std::string family;
    std::size_t n = 0;
    std::size_t construction_size = 0;
    std::uint64_t accepted_count = 0;
    bool streaming = false;
    bool adaptive = false;
    bool write_once = false;
};

// Numeric demonstration of the constructions' upper bounds: the generator's
// edge count against the size of the accepted set, plus class flags of the
// (normalized) construction. Supported families: xor, thr, slice, eq, clique;
// thr and slice require k.
UpperBoundRow upper_bound_report(const std::string& family, std::size_t n,
                                 std::optional<std::size_t> k = std::nullopt);

}  // namespace tg
