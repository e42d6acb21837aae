#pragma once

#include <cstdint>
#include <random>

#include "tg/bp.hpp"
#include "tg/core.hpp"
#include "tg/generators.hpp"

namespace tg {

// Seeded generator for random test values. Draws raw mt19937_64 output and
// reduces by modulo, so a seed produces the same values on every platform
// (the standard distributions do not guarantee that).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform-ish value in [0, n); n >= 1.
    std::size_t below(std::size_t n) { return static_cast<std::size_t>(next() % n); }

    // True with probability roughly percent/100.
    bool chance(unsigned percent) { return next() % 100 < percent; }

private:
    std::mt19937_64 engine_;
};

struct RandomGraphOptions {
    std::size_t universe_size = 4;
    std::size_t max_vertices = 6;
    std::size_t max_edges = 10;
    std::size_t max_label_card = 2;  // 1 gives singleton/empty labels
    bool allow_cycles = false;       // when set, loops and back edges may appear
};

LabelSet random_label_set(Rng& rng, std::size_t universe_size, std::size_t max_card);

AcceptedFamily random_family(Rng& rng, std::size_t universe_size, std::size_t max_members);

// Arbitrary graph per the options; may be cyclic, untrimmed, or even lack
// (s,t)-paths. Useful for exercising transforms and parsers.
TransitionGraph random_transition_graph(Rng& rng, const RandomGraphOptions& opts);

// Random DAG passed through trim. Retries a few times to avoid an edgeless
// result but may still return a degenerate graph.
TransitionGraph random_trimmed_dag(Rng& rng, const RandomGraphOptions& opts);

// Random trimmed singleton-labeled DAG that passes the write-once check;
// falls back to a labeled chain when rejection sampling runs dry.
TransitionGraph random_write_once_graph(Rng& rng, const RandomGraphOptions& opts);

struct RandomBpOptions {
    std::size_t max_variables = 5;
    std::size_t max_vertices = 6;
    std::size_t max_edges = 10;
    bool monotone = false;
};

BranchingProgram random_branching_program(Rng& rng, const RandomBpOptions& opts);

CnfFormula random_cnf(Rng& rng, std::size_t max_variables, std::size_t max_clauses);

}  // namespace tg
