#pragma once

#include <cstdint>
#include <vector>

#include "ard/bytes.hpp"
#include "ard/distortion.hpp"
#include "ard/pareto.hpp"

namespace ard {

// Exhaustive ground truth for tiny instances: enumerate the whole
// representation space and return the exact Pareto front. Serves as the
// correctness oracle for the genetic search.

struct OracleLimit {
    std::uint64_t max_total_enumeration = 1ull << 24;
};

// The representation space is all strings over `alphabet` (sorted, deduped)
// of length |x| for hamming/euclidean, or of any length in [0, |x|] for edit.
// An empty alphabet means the symbols occurring in x. Throws when the space
// exceeds the limit, naming the required size.
std::vector<FrontPoint> exhaustive_front(const Bytes& x, Metric metric, const Bytes& side_info,
                                         std::vector<std::uint8_t> alphabet = {},
                                         const OracleLimit& limit = {});

}  // namespace ard
