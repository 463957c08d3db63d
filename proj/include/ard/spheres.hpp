#pragma once

#include <cstdint>

#include "ard/bytes.hpp"

namespace ard {

// Log2 sizes of distortion spheres S_y(a) = { x : d(x,y) = a }. The Hamming
// sphere size is exact; the Euclidean and edit values are upper bounds. These
// price the "noise" part of the three-part code.

enum class Exactness { exact, upper_bound };

struct SphereLog {
    double log2_size = 0.0;
    Exactness exactness = Exactness::exact;
};

// log2 [ C(n,a) * (sigma-1)^a ], exact (via lgamma).
SphereLog log_hamming_sphere(std::int64_t n, std::int64_t a, std::uint32_t alphabet_size);

// Upper bound on log2 |{ v in Z^n : sum v_i^2 = a_sq }| with entries in
// [-255, 255]. Uses the Gaussian-shape bound n*log2(S) + (n/2)*log2(e) with
// S = sum_{delta=-255..255} exp(-delta^2 n / (2 a_sq)), refined for a_sq < n
// by splitting off the forced zero entries: |S(n,a)| <= C(n, n-a_sq) *
// |S(a_sq, a)|.
SphereLog log_euclid_sphere_bound(std::int64_t n, std::int64_t a_sq);

// Upper bound on the edit sphere around a string of length n: the number of
// copy/replace/insert/delete programs at cost a, relaxed to
// (#terms) * (largest multinomial term) * sigma^a.
SphereLog log_edit_sphere_bound(std::int64_t n, std::int64_t a, std::uint32_t alphabet_size);

// Index of the largest multinomial term in the edit-sphere sum,
// floor((2(a-n) + 1 + sqrt(4(n^2+n+a^2+a)+1)) / 4), clamped into the valid
// summation range [max(0, a-n), a].
std::int64_t edit_max_term_index(std::int64_t n, std::int64_t a);

// Universal code for a distortion value d >= 0:
// L_D(d) = log2(d+1) + 2*log2(log2(d+2)+1). Monotone and Kraft-summable.
double universal_int_codelength(std::int64_t d);

// log2 C(n, k) via lgamma; helper shared with tests and the oracle.
double log2_binomial(std::int64_t n, std::int64_t k);

}  // namespace ard
