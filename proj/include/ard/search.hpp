#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ard/bytes.hpp"
#include "ard/distortion.hpp"
#include "ard/pareto.hpp"
#include "ard/rng.hpp"

namespace ard {

// Tunables of the genetic search. Defaults follow the reference
// configuration: alpha = 4, small mutations with probability 1/4, geometric
// block lengths with mean 5, Gaussian byte mutation with sigma = 10.
// Offspring count, parent selection and deduplication are scheduling choices
// exposed here.
struct SearchConfig {
    double alpha = 4.0;
    double small_mutation_prob = 0.25;
    double geometric_mean = 5.0;
    double gaussian_sigma = 10.0;
    std::uint32_t offspring_per_iteration = 32;
    double crossover_fraction = 0.5;
    std::uint64_t seed = 0;
    std::uint64_t max_iterations = 1000;

    // Checkpointing: write every `checkpoint_every` iterations (0 = off) to
    // `checkpoint_path` (atomically, temp file + rename).
    std::uint64_t checkpoint_every = 0;
    std::string checkpoint_path;

    // Stop early after this many iterations without any change to the front
    // trade-offs (0 = off). The counter is not part of checkpoints; resumed
    // runs restart it.
    std::uint64_t stagnation_window = 0;

    // Wall-clock budget in seconds (0 = off). Runs limited this way are not
    // reproducible; use iteration budgets for that.
    double max_wall_seconds = 0.0;

    // Restricted representation alphabet (empty = all 256 byte values). Used
    // to search the same space as the exhaustive oracle.
    std::vector<std::uint8_t> alphabet;
};

// Recombination: x = x1 x2 x3 with |x1| uniform on {0..|x|} and |x2|
// geometric with the configured mean (truncated to what remains); y is split
// proportionally and the result is x1 y2 x3.
Bytes crossover(BytesView x, BytesView y, Rng& rng, const SearchConfig& config);

// Deterministic core of crossover with pinned split lengths.
Bytes crossover_with_splits(BytesView x, BytesView y, std::size_t len1, std::size_t len2);

// Single-position mutation chosen by the metric: uniform byte replacement
// (hamming), rounded N(0, sigma) delta clamped to [0,255] (euclidean), or a
// random change/insert/delete (edit).
Bytes small_mutation(BytesView x, Metric metric, Rng& rng, const SearchConfig& config);

// Block mutation: split as in crossover, train an order-3 PPM model on x1 and
// replace x2 with an equally long sample from it.
Bytes ppm_block_mutation(BytesView x, Rng& rng, const SearchConfig& config);

// Small mutation with probability `small_mutation_prob`, PPM block mutation
// otherwise.
Bytes mutate(BytesView x, Metric metric, Rng& rng, const SearchConfig& config);

// Probability of dropping the i-th (1-based) positive-weakness candidate out
// of n, ordered by (weakness, g1): 1 / (1 + (n/(i-1/2) - 1)^alpha).
double drop_probability(std::uint64_t i, std::uint64_t n, double alpha);

// Keeps every zero-weakness member; positive-weakness members are ordered by
// (weakness, g1) and dropped independently with drop_probability.
void select(Pool& pool, const SearchConfig& config, Rng& rng);

// One iteration: generate offspring (crossover_fraction via crossover of two
// uniformly drawn parents, the rest via mutation of one), evaluate, union
// into the pool with payload deduplication, then select.
void step(Pool& pool, const Bytes& x, Metric metric, const Bytes& side_info,
          const SearchConfig& config, Rng& rng);

struct RunResult {
    Pool pool;                        // full surviving pool
    Pool reduced;                     // zero-weakness members
    std::vector<FrontPoint> front;    // curves of the reduced pool
    std::uint64_t iterations = 0;     // iterations actually executed
};

// Full search: pool initialized with the input object, iterated to the
// configured budget, checkpoints on the configured cadence.
RunResult run(const Bytes& x, Metric metric, const Bytes& side_info, const SearchConfig& config);

// Continue a search from a restored pool and generator state.
RunResult run_from(Pool pool, Rng rng, std::uint64_t start_iteration, const Bytes& x,
                   Metric metric, const Bytes& side_info, const SearchConfig& config);

// Line-oriented checkpoint:
//   ard-checkpoint v1 <seed> <iteration> <rng-state-hex>
//   <hex payload> <g1 bits, 9 decimal places> <g2>
// one candidate per line, in pool order. An empty payload is written as "-".
struct Checkpoint {
    std::uint64_t seed = 0;
    std::uint64_t iteration = 0;
    std::string rng_state_hex;
    Pool pool;
};

void write_checkpoint(const std::string& path, const Checkpoint& checkpoint);
Checkpoint read_checkpoint(const std::string& path);

// Re-evaluate a restored pool against the experiment inputs. Stored rates are
// rounded to 9 decimals, so trade-offs are recomputed at full precision and
// checked against the file; a mismatch means the checkpoint does not belong
// to these inputs.
Pool rebuild_pool(const Checkpoint& checkpoint, const Bytes& x, Metric metric,
                  const Bytes& side_info);

// Evaluate one representation against the experiment inputs.
Candidate evaluate(Bytes payload, const Bytes& x, Metric metric, const Bytes& side_info,
                   Provenance provenance);

}  // namespace ard
