#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <unordered_map>
#include <vector>

#include "ard/bytes.hpp"
#include "ard/rng.hpp"

namespace ard {

// Simplified order-3 PPM over bytes, used only as a structure-aware sampler
// for the block mutation operator. Escape weights are count-proportional
// (one unit per distinct symbol in the context); the escape chain ends in a
// uniform distribution over the alphabet, so every replacement block has
// strictly positive probability.
class PpmModel {
public:
    static constexpr int kMaxOrder = 3;

    // An empty alphabet means all 256 byte values.
    explicit PpmModel(std::vector<std::uint8_t> alphabet = {});

    // Count every context of order <= 3 in the source. The tail of the last
    // trained source is kept as the initial sampling context.
    void train(BytesView source);

    // Total probability of emitting `symbol` after `context` (last <= 3
    // bytes), summed over all escape paths.
    double probability(BytesView context, std::uint8_t symbol) const;

    std::uint8_t sample_symbol(BytesView context, Rng& rng) const;

    const Bytes& initial_context() const { return initial_context_; }
    const std::vector<std::uint8_t>& alphabet() const { return alphabet_; }

private:
    using ContextCounts = std::map<std::uint8_t, std::uint32_t>;

    const ContextCounts* lookup(int order, BytesView context) const;

    std::vector<std::uint8_t> alphabet_;
    ContextCounts order0_;
    std::array<std::unordered_map<std::uint32_t, ContextCounts>, kMaxOrder + 1> contexts_;
    Bytes initial_context_;
};

PpmModel ppm_train(BytesView context_source, std::vector<std::uint8_t> alphabet = {});

// Sample `length` bytes autoregressively, starting from the model's trained
// tail as context.
Bytes ppm_sample(const PpmModel& model, std::size_t length, Rng& rng);

}  // namespace ard
