#pragma once

#include <cstdint>

#include "ard/bytes.hpp"

namespace ard {

// Idealized block-sorting compressor. It never produces codewords, only
// codelengths in bits, which may be fractional. The pipeline is
//
//     input -> BWT (whole input as one block) -> move-to-front
//           -> adaptive zero-run / symbol model
//
// plus log2(n+1) bits for the BWT primary index. The decoder is assumed to
// know the input length, matching the convention that a literal description
// of n bytes costs exactly 8n bits.

struct BwtResult {
    Bytes last_column;
    std::uint64_t primary_index = 0;  // row of the original rotation
};

// Burrows-Wheeler transform of the full input, rotation-sort convention
// without a sentinel. Equal rotations (periodic inputs) are ordered by
// rotation start index so the transform is a total, deterministic function.
BwtResult bwt(BytesView input);

// Inverse transform, used to validate bwt in tests.
Bytes bwt_inverse(const BwtResult& transformed);

// Move-to-front ranks against a recency list initialized to 0..255.
Bytes mtf(BytesView input);
Bytes mtf_inverse(BytesView ranks);

// Idealized codelength of the full pipeline, in bits. Deterministic; empty
// input costs exactly 0 bits.
double codelength(BytesView input);

// L_A(zy) - L_A(z), clamped at zero. L_A is not a true complexity, so the
// difference can be (rarely) negative; clamp events are counted for
// diagnostics.
double conditional_codelength(BytesView y, BytesView z);

std::uint64_t conditional_clamp_count();
void reset_conditional_clamp_count();

}  // namespace ard
