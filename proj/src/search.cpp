#include "tg/search.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "tg/classes.hpp"
#include "tg/generators.hpp"
#include "tg/transform.hpp"

namespace tg {

namespace {

// Label order used for witness tie-breaking: first differing index decides,
// the set containing it sorts later. Matches LabelSet's ordering.
bool label_mask_less(std::uint64_t a, std::uint64_t b) {
    std::uint64_t diff = a ^ b;
    if (!diff) return false;
    return (b >> std::countr_zero(diff)) & 1u;
}

struct Structure {
    std::size_t vertex_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // sorted (u, v), u < v
};

// All m vertices on a path from 0 to m-1 (edges ascend, so one forward and
// one backward sweep suffice).
bool structure_trimmed(const Structure& s) {
    std::size_t m = s.vertex_count;
    std::vector<char> fwd(m, 0), bwd(m, 0);
    fwd[0] = 1;
    for (const auto& [u, v] : s.edges)
        if (fwd[u]) fwd[v] = 1;
    bwd[m - 1] = 1;
    for (auto it = s.edges.rbegin(); it != s.edges.rend(); ++it)
        if (bwd[it->second]) bwd[it->first] = 1;
    for (std::size_t v = 0; v < m; ++v)
        if (!fwd[v] || !bwd[v]) return false;
    return true;
}

std::uint64_t structure_path_count(const Structure& s) {
    std::vector<std::uint64_t> paths(s.vertex_count, 0);
    paths[0] = 1;
    for (const auto& [u, v] : s.edges) paths[v] += paths[u];
    return paths[s.vertex_count - 1];
}

// Keep only the lexicographically least sorted edge list over all
// relabelings of the middle vertices that keep every edge ascending.
bool structure_canonical(const Structure& s) {
    std::size_t m = s.vertex_count;
    if (m <= 3) return true;
    std::vector<std::size_t> perm(m - 2);
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = i + 1;
    std::vector<std::pair<std::size_t, std::size_t>> relabeled(s.edges.size());
    while (std::next_permutation(perm.begin(), perm.end())) {
        auto map = [&](std::size_t v) {
            if (v == 0 || v == m - 1) return v;
            return perm[v - 1];
        };
        bool ascending = true;
        for (std::size_t i = 0; i < s.edges.size(); ++i) {
            relabeled[i] = {map(s.edges[i].first), map(s.edges[i].second)};
            if (relabeled[i].first >= relabeled[i].second) {
                ascending = false;
                break;
            }
        }
        if (!ascending) continue;
        std::sort(relabeled.begin(), relabeled.end());
        if (relabeled < s.edges) return false;
    }
    return true;
}

struct SliceContext {
    std::vector<std::uint64_t> target_masks;  // sorted numerically
    std::uint64_t max_target_card = 0;
    std::vector<std::uint64_t> pool;  // candidate labels in tie-break order
    bool canonicalize = true;
};

// Enumerates every (0, m-1)-path of the labeled structure; each path's label
// union must be a target set, and all target sets must be met.
bool labels_accept(const Structure& s, const std::vector<std::uint64_t>& labels,
                   const SliceContext& ctx,
                   const std::vector<std::vector<std::size_t>>& out) {
    std::uint64_t covered = 0;
    const std::uint64_t all = (ctx.target_masks.size() == 64)
                                  ? ~std::uint64_t{0}
                                  : (std::uint64_t{1} << ctx.target_masks.size()) - 1;
    // Iterative DFS over (vertex, collected mask) path states.
    std::vector<std::pair<std::size_t, std::uint64_t>> stack{{0, 0}};
    while (!stack.empty()) {
        auto [v, mask] = stack.back();
        stack.pop_back();
        if (v == s.vertex_count - 1) {
            auto it = std::lower_bound(ctx.target_masks.begin(), ctx.target_masks.end(), mask);
            if (it == ctx.target_masks.end() || *it != mask) return false;
            covered |= std::uint64_t{1} << (it - ctx.target_masks.begin());
            continue;
        }
        for (std::size_t ei : out[v])
            stack.push_back({s.edges[ei].second, mask | labels[ei]});
    }
    return covered == all;
}

struct StructureOutcome {
    bool found = false;
    std::vector<std::uint64_t> witness_labels;
    std::uint64_t candidates = 0;
    std::uint64_t pruned = 0;
};

// Tries every labeling of one structure in tie-break order; the first
// accepted labeling wins.
StructureOutcome search_structure(const Structure& s, const SliceContext& ctx) {
    StructureOutcome outcome;
    std::size_t k = s.edges.size();
    std::vector<std::vector<std::size_t>> out(s.vertex_count);
    for (std::size_t ei = 0; ei < k; ++ei) out[s.edges[ei].first].push_back(ei);

    std::vector<std::size_t> choice(k, 0);
    std::vector<std::uint64_t> labels(k, 0);

    auto check = [&]() {
        // Prune: the heaviest path must reach the largest target set.
        std::vector<std::uint64_t> best(s.vertex_count, 0);
        for (std::size_t ei = 0; ei < k; ++ei) {
            const auto& [u, v] = s.edges[ei];
            best[v] = std::max(
                best[v], best[u] + static_cast<std::uint64_t>(std::popcount(labels[ei])));
        }
        if (best[s.vertex_count - 1] < ctx.max_target_card) {
            ++outcome.pruned;
            return false;
        }
        ++outcome.candidates;
        return labels_accept(s, labels, ctx, out);
    };

    auto assign = [&](auto&& self, std::size_t depth) -> bool {
        if (depth == k) return check();
        // Parallel edges between the same vertices take nondecreasing label
        // indices; other orders are permutations of the same graph.
        std::size_t start = 0;
        if (ctx.canonicalize && depth > 0 && s.edges[depth] == s.edges[depth - 1])
            start = choice[depth - 1];
        for (std::size_t c = start; c < ctx.pool.size(); ++c) {
            choice[depth] = c;
            labels[depth] = ctx.pool[c];
            if (self(self, depth + 1)) return true;
        }
        return false;
    };
    outcome.found = assign(assign, 0);
    if (outcome.found) outcome.witness_labels = labels;
    return outcome;
}

TransitionGraph build_witness(const Structure& s, const std::vector<std::uint64_t>& labels,
                              std::size_t universe_size) {
    TransitionGraph g;
    g.universe_size = universe_size;
    g.vertex_count = s.vertex_count;
    g.initial = 0;
    g.terminal = s.vertex_count - 1;
    for (std::size_t ei = 0; ei < s.edges.size(); ++ei)
        g.edges.push_back(
            {s.edges[ei].first, s.edges[ei].second, LabelSet::from_mask(labels[ei])});
    return g;
}

// Sorted multisets of ascending vertex pairs over [0, m).
void enumerate_structures(std::size_t m, std::size_t k, std::uint64_t limit,
                          std::uint64_t& emitted, bool& limited,
                          std::vector<Structure>& out) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = u + 1; v < m; ++v) pairs.emplace_back(u, v);

    std::vector<std::size_t> pick(k, 0);
    auto rec = [&](auto&& self, std::size_t depth, std::size_t from) -> bool {
        if (depth == k) {
            if (++emitted > limit) {
                limited = true;
                return false;
            }
            Structure s;
            s.vertex_count = m;
            for (std::size_t i = 0; i < k; ++i) s.edges.push_back(pairs[pick[i]]);
            out.push_back(std::move(s));
            return true;
        }
        for (std::size_t p = from; p < pairs.size(); ++p) {
            pick[depth] = p;
            if (!self(self, depth + 1, p)) return false;
        }
        return true;
    };
    rec(rec, 0, 0);
}

std::uint64_t saturating_pow(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
    std::uint64_t result = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (result > cap / std::max<std::uint64_t>(base, 1)) return cap;
        result *= base;
    }
    return result;
}

}  // namespace

MinSearchResult min_dc(const AcceptedFamily& target, std::size_t max_edges,
                       const MinDcOptions& opts) {
    if (target.universe_size > 64)
        throw Error("exhaustive search supports universes up to 64 variables");
    if (target.accepted.size() > 64)
        throw Error("exhaustive search supports targets with up to 64 accepted sets");

    MinSearchResult result;
    result.target = target;
    result.label_cap = opts.label_cap;

    SliceContext ctx;
    ctx.canonicalize = opts.canonicalize;
    std::uint64_t supp = 0;
    for (const LabelSet& s : target.accepted) {
        ctx.target_masks.push_back(s.low_mask());
        supp |= s.low_mask();
        ctx.max_target_card = std::max(ctx.max_target_card,
                                       static_cast<std::uint64_t>(s.count()));
    }
    std::sort(ctx.target_masks.begin(), ctx.target_masks.end());

    // Labels outside the union of accepted sets can never sit on an accepting
    // path of a trimmed graph; the pool is the subsets of that union up to
    // the cardinality cap.
    for (std::uint64_t sub = supp;; sub = (sub - 1) & supp) {
        if (static_cast<std::size_t>(std::popcount(sub)) <= opts.label_cap)
            ctx.pool.push_back(sub);
        if (sub == 0) break;
    }
    std::sort(ctx.pool.begin(), ctx.pool.end(), label_mask_less);

    auto finish_found = [&](std::size_t k, TransitionGraph witness) {
        result.minimal_size = k;
        result.witness = std::move(witness);
        result.exhausted_up_to = std::max(result.exhausted_up_to, k);
        return result;
    };
    // Candidates have distinct initial and terminal vertices, so a graph
    // with no edges accepts nothing; only the empty family needs zero edges.
    if (target.accepted.empty())
        return finish_found(0, TransitionGraph{target.universe_size, 2, 0, 1, {}});

    std::uint64_t work = 0;
    std::size_t target_size = target.accepted.size();
    std::size_t exhaustive_cap = std::min(max_edges, target_size - 1);

    for (std::size_t k = 1; k <= exhaustive_cap; ++k) {
        // Phase 1: structures, filtered cheaply.
        std::vector<Structure> structures;
        bool limited = false;
        for (std::size_t m = 2; m <= k + 1; ++m) {
            std::vector<Structure> raw;
            enumerate_structures(m, k, opts.candidate_budget, work, limited, raw);
            if (limited) break;
            for (Structure& s : raw) {
                if (!structure_trimmed(s)) {
                    ++result.stats.pruned;
                    continue;
                }
                if (structure_path_count(s) < target_size) {
                    ++result.stats.pruned;
                    continue;
                }
                if (opts.canonicalize && !structure_canonical(s)) {
                    ++result.stats.pruned;
                    continue;
                }
                structures.push_back(std::move(s));
            }
        }
        if (limited) {
            result.budget_exhausted = true;
            result.exhausted_up_to = k - 1;
            return result;
        }

        // Phase 2: refuse the slice when the labeling estimate blows the
        // budget; a partial slice would not be an exhaustive answer.
        std::uint64_t estimate = 0;
        for (const Structure& s : structures) {
            estimate += saturating_pow(ctx.pool.size(), s.edges.size(),
                                       opts.candidate_budget);
            if (estimate >= opts.candidate_budget) break;
        }
        if (work + estimate > opts.candidate_budget) {
            result.budget_exhausted = true;
            result.exhausted_up_to = k - 1;
            return result;
        }

        // Phase 3: labelings, full slice, parallel over structures.
        std::vector<StructureOutcome> outcomes(structures.size());
        unsigned jobs = std::max(1u, opts.jobs);
        jobs = static_cast<unsigned>(
            std::min<std::size_t>(jobs, std::max<std::size_t>(1, structures.size())));
        if (jobs == 1 || structures.size() <= 1) {
            for (std::size_t i = 0; i < structures.size(); ++i)
                outcomes[i] = search_structure(structures[i], ctx);
        } else {
            std::vector<std::thread> workers;
            for (unsigned w = 0; w < jobs; ++w)
                workers.emplace_back([&, w] {
                    for (std::size_t i = w; i < structures.size(); i += jobs)
                        outcomes[i] = search_structure(structures[i], ctx);
                });
            for (auto& t : workers) t.join();
        }

        std::optional<std::size_t> first_hit;
        for (std::size_t i = 0; i < structures.size(); ++i) {
            result.stats.candidates += outcomes[i].candidates;
            result.stats.pruned += outcomes[i].pruned;
            work += outcomes[i].candidates + outcomes[i].pruned;
            if (!first_hit && outcomes[i].found) first_hit = i;
        }
        if (first_hit)
            return finish_found(k, build_witness(structures[*first_hit],
                                                 outcomes[*first_hit].witness_labels,
                                                 target.universe_size));
        result.exhausted_up_to = k;
    }

    if (max_edges >= target_size) {
        // Everything below |target| is exhausted and the trivial graph
        // attains |target|.
        result.minimal_size = target_size;
        result.witness = make_trivial_graph(target);
        result.exhausted_up_to = std::max(result.exhausted_up_to, exhaustive_cap);
    }
    return result;
}

UniformHardnessReport verify_uniform_hardness(const AcceptedFamily& f,
                                              std::size_t max_edges,
                                              const MinDcOptions& opts) {
    if (f.accepted.size() > 16)
        throw Error("uniform hardness check enumerates all subfamilies; "
                    "supported up to 16 accepted sets");
    std::vector<LabelSet> members(f.accepted.begin(), f.accepted.end());

    UniformHardnessReport report;
    report.uniformly_hard = true;
    report.complete = true;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << members.size()); ++mask) {
        AcceptedFamily sub;
        sub.universe_size = f.universe_size;
        for (std::size_t i = 0; i < members.size(); ++i)
            if (mask >> i & 1) sub.accepted.insert(members[i]);

        MinSearchResult r = min_dc(sub, std::min(max_edges, sub.accepted.size()), opts);
        SubfamilyResult sr;
        sr.member_mask = mask;
        sr.family_size = sub.accepted.size();
        sr.minimal_size = r.minimal_size;
        sr.verified = !r.budget_exhausted && r.minimal_size.has_value();
        sr.hard = sr.verified && *r.minimal_size == sr.family_size;
        if (!sr.verified) report.complete = false;
        if (!sr.hard) report.uniformly_hard = false;
        report.subfamilies.push_back(std::move(sr));
    }
    report.uniformly_hard = report.uniformly_hard && report.complete;
    return report;
}

namespace {

std::uint64_t binomial(std::size_t n, std::size_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t result = 1;
    for (std::size_t i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return result;
}

}  // namespace

UpperBoundRow upper_bound_report(const std::string& family, std::size_t n,
                                 std::optional<std::size_t> k) {
    UpperBoundRow row;
    row.n = n;
    TransitionGraph g;
    if (family == "xor") {
        row.family = "xor";
        g = xor_graph(n);
        row.accepted_count = n >= 1 ? (std::uint64_t{1} << (n - 1)) : 0;
    } else if (family == "thr") {
        if (!k) throw Error("thr needs a threshold parameter k");
        row.family = "thr(k=" + std::to_string(*k) + ")";
        g = threshold_graph(n, *k);
        for (std::size_t c = *k; c <= n; ++c) row.accepted_count += binomial(n, c);
    } else if (family == "slice") {
        if (!k) throw Error("slice needs a parameter k");
        row.family = "slice(k=" + std::to_string(*k) + ")";
        g = slice_graph(n, *k);
        row.accepted_count = binomial(n, *k);
    } else if (family == "eq") {
        row.family = "eq";
        g = eq_graph(n);
        row.accepted_count = binomial(2 * n, n);
    } else if (family == "clique") {
        row.family = "clique";
        g = clique_indicator_graph(n);
        row.accepted_count = (std::uint64_t{1} << n) - n;
    } else {
        throw Error("unknown report family '" + family +
                    "' (expected xor, thr, slice, eq, or clique)");
    }
    row.construction_size = g.size();
    ClassificationReport cls = classify(trim(normalize_singletons(g)));
    row.streaming = cls.is_streaming_under_identity_order;
    row.adaptive = cls.adaptive_order.has_value();
    row.write_once = cls.is_write_once;
    return row;
}

}  // namespace tg
