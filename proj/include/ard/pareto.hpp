#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ard/bytes.hpp"
#include "ard/distortion.hpp"

namespace ard {

// Trade-off of a representation: g1 is the (conditional) codelength in bits,
// g2 the raw distortion to the input object.
struct TradeOff {
    double rate_bits = 0.0;
    std::uint64_t distortion = 0;

    friend bool operator==(const TradeOff&, const TradeOff&) = default;
};

// a dominates b under the componentwise partial order (reflexive: equal
// trade-offs dominate each other).
inline bool dominates(const TradeOff& a, const TradeOff& b) {
    return a.rate_bits <= b.rate_bits && a.distortion <= b.distortion;
}

enum class Provenance { input, crossover, mutation };

struct Candidate {
    Bytes payload;
    TradeOff tradeoff;
    Provenance provenance = Provenance::input;
};

using Pool = std::vector<Candidate>;

// Weakness of each pool member: the number of members that strictly dominate
// it (dominate with a different trade-off). Equal trade-offs therefore do not
// weaken each other. O(m log m): sort by g1, then count smaller g2 values
// with an order-statistics structure.
std::vector<std::uint32_t> weakness_all(const Pool& pool);

// Members with weakness zero, in pool order. Non-empty for non-empty pools
// and leaves the induced trade-off profile unchanged.
Pool reduce(const Pool& pool);

// L'_y(x) = L_A(y|z) + L_D(coded distortion) + log2 |sphere|. The coded
// distortion is the raw metric value (squared radius for euclidean); the
// sphere dimension is |x| for hamming/euclidean and |y| for edit, and the
// sphere alphabet is the experiment's representation alphabet (256 for
// unrestricted byte objects, 2 for binary-valued experiments).
double three_part_codelength(BytesView y, BytesView x, Metric metric, BytesView side_info,
                             std::uint32_t alphabet_size = 256);

// Variant reusing a cached trade-off, for pools whose candidates already
// carry their evaluation.
double three_part_codelength_cached(const TradeOff& tradeoff, std::size_t x_len,
                                    std::size_t y_len, Metric metric,
                                    std::uint32_t alphabet_size = 256);

struct FrontPoint {
    double rate_bits = 0.0;
    std::uint64_t distortion = 0;  // raw value
    double three_part_bits = 0.0;
    std::optional<std::uint64_t> distortion_to_original;  // raw, evaluation only
    Bytes payload;
};

// Front points of a pool, sorted by rate; the distortion column is
// non-increasing. Duplicated trade-offs collapse to one point whose
// representative payload is the lexicographically smallest, so the output is
// a canonical function of the trade-off set. When an original object is
// supplied (controlled denoising experiments) each point also carries its
// distortion to it.
std::vector<FrontPoint> curves(const Pool& pool, BytesView x, Metric metric, BytesView side_info,
                               const Bytes* original = nullptr, std::uint32_t alphabet_size = 256);

// Lowest-rate point among those minimizing the three-part codelength (ties
// within 1e-6 bits).
FrontPoint minimal_sufficient_statistic(const std::vector<FrontPoint>& points);

}  // namespace ard
