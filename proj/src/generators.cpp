#include "tg/generators.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "tg/pairs.hpp"
#include "tg/transform.hpp"

namespace tg {

TransitionGraph from_streaming_algorithm(const StreamingAlgorithmSpec& a) {
    if (a.state_count == 0) throw Error("streaming algorithm has no states");
    if (a.initial_state >= a.state_count)
        throw Error("initial state " + std::to_string(a.initial_state) + " out of range");
    for (std::size_t q : a.accepting_states)
        if (q >= a.state_count)
            throw Error("accepting state " + std::to_string(q) + " out of range");
    for (const StreamingTransition& t : a.transitions)
        if (t.from >= a.state_count || t.to >= a.state_count)
            throw Error("transition references a state out of range");

    std::size_t n = a.input_length;
    auto copy_id = [&](std::size_t q, std::size_t i) { return i * a.state_count + q; };

    TransitionGraph g;
    g.universe_size = n;
    g.vertex_count = a.state_count * (n + 1) + 1;
    g.initial = copy_id(a.initial_state, 0);
    g.terminal = a.state_count * (n + 1);
    for (std::size_t i = 1; i <= n; ++i)
        for (const StreamingTransition& t : a.transitions) {
            LabelSet label;
            if (t.bit) label.insert(i - 1);
            g.edges.push_back({copy_id(t.from, i - 1), copy_id(t.to, i), std::move(label)});
        }
    std::vector<std::size_t> accepting = a.accepting_states;
    std::sort(accepting.begin(), accepting.end());
    accepting.erase(std::unique(accepting.begin(), accepting.end()), accepting.end());
    for (std::size_t q : accepting) g.edges.push_back({copy_id(q, n), g.terminal, {}});
    return trim(g);
}

TransitionGraph xor_graph(std::size_t n) {
    if (n == 0) throw Error("xor_graph requires n >= 1");
    StreamingAlgorithmSpec parity;
    parity.state_count = 2;  // running parity of the ones read so far
    parity.initial_state = 0;
    parity.accepting_states = {1};
    parity.transitions = {{0, 0, false}, {0, 1, true}, {1, 1, false}, {1, 0, true}};
    parity.input_length = n;
    return from_streaming_algorithm(parity);
}

namespace {

TransitionGraph count_automaton_graph(std::size_t n, const std::set<std::size_t>& accepted) {
    StreamingAlgorithmSpec counter;
    counter.state_count = n + 1;  // state c = number of ones read so far
    counter.initial_state = 0;
    counter.accepting_states.assign(accepted.begin(), accepted.end());
    for (std::size_t c = 0; c <= n; ++c) {
        counter.transitions.push_back({c, c, false});
        if (c < n) counter.transitions.push_back({c, c + 1, true});
    }
    counter.input_length = n;
    return from_streaming_algorithm(counter);
}

}  // namespace

TransitionGraph threshold_graph(std::size_t n, std::size_t k) {
    if (k > n) throw Error("threshold_graph requires 0 <= k <= n");
    std::set<std::size_t> accepted;
    for (std::size_t c = k; c <= n; ++c) accepted.insert(c);
    return count_automaton_graph(n, accepted);
}

TransitionGraph slice_graph(std::size_t n, std::size_t k) {
    if (k > n) throw Error("slice_graph requires 0 <= k <= n");
    return count_automaton_graph(n, {k});
}

TransitionGraph symmetric_graph(std::size_t n, const std::set<std::size_t>& accepted_counts) {
    for (std::size_t c : accepted_counts)
        if (c > n) throw Error("accepted count " + std::to_string(c) + " exceeds n");
    return count_automaton_graph(n, accepted_counts);
}

TransitionGraph eq_graph(std::size_t n) {
    if (n == 0) throw Error("eq_graph requires n >= 1");
    std::size_t width = 2 * n;  // positions per word
    auto x_var = [&](std::size_t i) { return i; };            // position i, 0-based
    auto y_var = [&](std::size_t i) { return width + i; };

    // Layered construction in the alternating reading order. Between
    // positions the state is the count of ones so far; in the middle of a
    // position it also holds the pending x bit.
    TransitionGraph g;
    g.universe_size = 2 * width;

    std::map<std::pair<std::size_t, std::size_t>, std::size_t> count_state;  // (pos, c)
    std::map<std::tuple<std::size_t, std::size_t, bool>, std::size_t> pending_state;
    auto vertex = [&](auto& m, auto key) {
        auto [it, fresh] = m.try_emplace(key, g.vertex_count);
        if (fresh) ++g.vertex_count;
        return it->second;
    };

    g.initial = vertex(count_state, std::make_pair(std::size_t{0}, std::size_t{0}));
    for (std::size_t i = 0; i < width; ++i) {
        for (std::size_t c = 0; c <= std::min(i, n); ++c) {
            auto from = count_state.find({i, c});
            if (from == count_state.end()) continue;
            for (bool bit : {false, true}) {
                if (bit && c == n) continue;  // weight would exceed n
                LabelSet xl;
                if (bit) xl.insert(x_var(i));
                std::size_t mid = vertex(pending_state, std::make_tuple(i, c, bit));
                g.edges.push_back({from->second, mid, std::move(xl)});
                LabelSet yl;
                if (bit) yl.insert(y_var(i));
                std::size_t next = vertex(count_state, std::make_pair(i + 1, c + (bit ? 1 : 0)));
                g.edges.push_back({mid, next, std::move(yl)});
            }
        }
    }
    auto final_state = count_state.find({width, n});
    std::size_t t = g.vertex_count++;
    g.terminal = t;
    if (final_state != count_state.end()) g.edges.push_back({final_state->second, t, {}});
    return trim(g);
}

AcceptedFamily clique_family(std::size_t n) {
    if (n < 2) throw Error("clique_family requires n >= 2");
    AcceptedFamily fam;
    fam.universe_size = pair_count(n);
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << n); ++subset) {
        LabelSet pairs;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if ((subset >> i & 1) && (subset >> j & 1))
                    pairs.insert(pair_index(n, i, j));
        fam.accepted.insert(std::move(pairs));
    }
    return fam;
}

TransitionGraph clique_indicator_graph(std::size_t n) {
    return make_trivial_graph(clique_family(n));
}

namespace {

// Triple scan: a label graph is P3-free iff no vertex triple spans exactly
// two of its three pairs. Independent of the component-based test used by
// the closure checkers.
bool p3_free_by_triples(std::uint64_t assignment, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                int present = ((assignment >> pair_index(n, i, j)) & 1) +
                              ((assignment >> pair_index(n, i, k)) & 1) +
                              ((assignment >> pair_index(n, j, k)) & 1);
                if (present == 2) return false;
            }
    return true;
}

}  // namespace

AcceptedFamily p3f_family(std::size_t n) {
    if (n < 2) throw Error("p3f_family requires n >= 2");
    std::size_t u = pair_count(n);
    if (u >= 30) throw Error("p3f_family enumerates all assignments; use n <= 6");
    AcceptedFamily fam;
    fam.universe_size = u;
    for (std::uint64_t x = 0; x < (std::uint64_t{1} << u); ++x)
        if (p3_free_by_triples(x, n)) fam.accepted.insert(LabelSet::from_mask(x));
    return fam;
}

TransitionGraph not_p3f_graph(std::size_t n) {
    if (n < 3) throw Error("not_p3f_graph requires n >= 3");
    TransitionGraph g;
    g.universe_size = pair_count(n);
    g.vertex_count = 2;  // 0 = initial, 1 = terminal
    g.initial = 0;
    g.terminal = 1;

    // One branch per induced path i-j-k (middle j, endpoints i < k): write
    // the two wing pairs, then choose every other pair freely; the closing
    // pair {i,k} is never written.
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            if (i == j) continue;
            for (std::size_t k = i + 1; k < n; ++k) {
                if (k == j) continue;
                std::size_t wing1 = pair_index(n, i, j);
                std::size_t wing2 = pair_index(n, j, k);
                std::size_t closing = pair_index(n, i, k);

                std::size_t a = g.vertex_count++;
                std::size_t b = g.vertex_count++;
                g.edges.push_back({0, a, LabelSet::single(wing1)});
                g.edges.push_back({a, b, LabelSet::single(wing2)});
                std::size_t prev = b;
                for (std::size_t p = 0; p < g.universe_size; ++p) {
                    if (p == wing1 || p == wing2 || p == closing) continue;
                    std::size_t next = g.vertex_count++;
                    g.edges.push_back({prev, next, {}});
                    g.edges.push_back({prev, next, LabelSet::single(p)});
                    prev = next;
                }
                g.edges.push_back({prev, 1, {}});
            }
        }
    return g;
}

TransitionGraph from_monotone_bp(const BranchingProgram& b) {
    require_valid(b);
    if (!bp_is_monotone(b)) throw Error("branching program uses negated literals");

    TransitionGraph g;
    g.universe_size = b.variable_count;
    g.vertex_count = b.vertex_count + b.variable_count;
    g.initial = b.initial;
    for (const BpEdge& e : b.edges)
        g.edges.push_back({e.source, e.target, LabelSet::single(e.literal.variable)});
    // Full-assignment chain hanging off the program's terminal: step i either
    // skips or writes variable i-1, so any superset of a computation's
    // variable set is realizable.
    std::size_t prev = b.terminal;
    for (std::size_t i = 0; i < b.variable_count; ++i) {
        std::size_t next = b.vertex_count + i;
        g.edges.push_back({prev, next, {}});
        g.edges.push_back({prev, next, LabelSet::single(i)});
        prev = next;
    }
    g.terminal = prev;
    return g;
}

BranchingProgram p3f_branching_program(std::size_t n) {
    if (n < 3) throw Error("p3f_branching_program requires n >= 3");
    BranchingProgram b;
    b.variable_count = pair_count(n);
    b.vertex_count = 1;
    b.initial = 0;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            if (q == p) continue;
            for (std::size_t r = 0; r < n; ++r) {
                if (r == p || r == q) continue;
                std::size_t link = b.vertex_count++;
                b.edges.push_back({link - 1, link, {pair_index(n, p, q), true}});
                b.edges.push_back({link - 1, link, {pair_index(n, q, r), true}});
                b.edges.push_back({link - 1, link, {pair_index(n, r, p), false}});
            }
        }
    b.terminal = b.vertex_count - 1;
    return b;
}

std::vector<std::string> validate(const CnfFormula& c) {
    std::vector<std::string> out;
    for (std::size_t j = 0; j < c.clauses.size(); ++j) {
        if (c.clauses[j].empty())
            out.push_back("clause " + std::to_string(j) + " is empty");
        for (int lit : c.clauses[j]) {
            std::size_t v = static_cast<std::size_t>(lit < 0 ? -lit : lit);
            if (lit == 0 || v > c.variable_count)
                out.push_back("clause " + std::to_string(j) + ": literal " +
                              std::to_string(lit) + " out of range");
        }
    }
    return out;
}

SatReduction sat_reduction(const CnfFormula& c) {
    for (const auto& violation : validate(c))
        if (violation.find("literal") != std::string::npos) throw Error(violation);

    std::size_t n = c.variable_count;
    std::size_t m = c.clauses.size();

    TransitionGraph g;
    g.universe_size = m;
    g.vertex_count = n + 1;
    g.initial = 0;
    g.terminal = n;
    for (std::size_t i = 1; i <= n; ++i) {
        LabelSet negative, positive;
        for (std::size_t j = 0; j < m; ++j)
            for (int lit : c.clauses[j]) {
                if (lit == -static_cast<int>(i)) negative.insert(j);
                if (lit == static_cast<int>(i)) positive.insert(j);
            }
        g.edges.push_back({i - 1, i, std::move(negative)});
        g.edges.push_back({i - 1, i, std::move(positive)});
    }
    return {std::move(g), Assignment::all_ones(m)};
}

}  // namespace tg
