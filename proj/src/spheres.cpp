#include "ard/spheres.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ard {

namespace {

constexpr double kLog2E = 1.4426950408889634074;  // log2(e)

double log2_factorial(std::int64_t n) { return std::lgamma(static_cast<double>(n) + 1.0) * kLog2E; }

double log2_multinomial(std::int64_t total, std::int64_t k1, std::int64_t k2, std::int64_t k3) {
    return log2_factorial(total) - log2_factorial(k1) - log2_factorial(k2) - log2_factorial(k3);
}

// Gaussian-shape bound for integer vectors of dimension n at squared radius
// a_sq >= 1, entries in [-255, 255].
double euclid_gaussian_bound(std::int64_t n, std::int64_t a_sq) {
    double s = 1.0;
    const double scale = static_cast<double>(n) / (2.0 * static_cast<double>(a_sq));
    for (int delta = 1; delta <= 255; ++delta)
        s += 2.0 * std::exp(-static_cast<double>(delta) * delta * scale);
    return static_cast<double>(n) * std::log2(s) + 0.5 * static_cast<double>(n) * kLog2E;
}

}  // namespace

double log2_binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) throw std::domain_error("log2_binomial: k out of range");
    return log2_factorial(n) - log2_factorial(k) - log2_factorial(n - k);
}

SphereLog log_hamming_sphere(std::int64_t n, std::int64_t a, std::uint32_t alphabet_size) {
    if (alphabet_size < 2) throw std::domain_error("hamming sphere: alphabet size must be >= 2");
    if (a < 0 || a > n) throw std::domain_error("hamming sphere: radius out of [0, n]");
    const double bits =
        log2_binomial(n, a) + static_cast<double>(a) * std::log2(static_cast<double>(alphabet_size) - 1.0);
    return {bits, Exactness::exact};
}

SphereLog log_euclid_sphere_bound(std::int64_t n, std::int64_t a_sq) {
    if (n < 1) throw std::domain_error("euclid sphere: dimension must be >= 1");
    if (a_sq < 0) throw std::domain_error("euclid sphere: squared radius must be >= 0");
    if (a_sq == 0) return {0.0, Exactness::exact};

    double bound = euclid_gaussian_bound(n, a_sq);
    if (a_sq < n) {
        // At squared radius a_sq < n at least z = n - a_sq entries are zero;
        // choosing their positions and bounding the rest in dimension a_sq is
        // tighter at low distortion. One level is enough: the inner dimension
        // equals the squared radius, so the next split would remove nothing.
        const std::int64_t z = n - a_sq;
        const double refined = log2_binomial(n, z) + euclid_gaussian_bound(a_sq, a_sq);
        bound = std::min(bound, refined);
    }
    return {bound, Exactness::upper_bound};
}

std::int64_t edit_max_term_index(std::int64_t n, std::int64_t a) {
    if (n < 0 || a < 0) throw std::domain_error("edit sphere: n and a must be >= 0");
    const std::int64_t lo = std::max<std::int64_t>(0, a - n);
    const double nn = static_cast<double>(n);
    const double aa = static_cast<double>(a);
    const double value =
        (2.0 * (aa - nn) + 1.0 + std::sqrt(4.0 * (nn * nn + nn + aa * aa + aa) + 1.0)) / 4.0;
    const std::int64_t index = static_cast<std::int64_t>(std::floor(value));
    return std::clamp(index, lo, a);
}

SphereLog log_edit_sphere_bound(std::int64_t n, std::int64_t a, std::uint32_t alphabet_size) {
    if (n < 0 || a < 0) throw std::domain_error("edit sphere: n and a must be >= 0");
    if (alphabet_size < 1) throw std::domain_error("edit sphere: alphabet size must be >= 1");
    if (a == 0) return {0.0, Exactness::exact};

    // A program with i insertions, a-i replacements and n-a+i copies has
    // length n+i; terms are multinomials over those roles. Replace the sum by
    // (#terms) * (largest term).
    const std::int64_t lo = std::max<std::int64_t>(0, a - n);
    const std::int64_t i = edit_max_term_index(n, a);
    const double largest = log2_multinomial(n + i, i, n - a + i, a - i);
    const double terms = static_cast<double>(a - lo + 1);
    const double bits =
        std::log2(terms) + largest + static_cast<double>(a) * std::log2(static_cast<double>(alphabet_size));
    return {bits, Exactness::upper_bound};
}

double universal_int_codelength(std::int64_t d) {
    if (d < 0) throw std::domain_error("universal code: value must be >= 0");
    const double dd = static_cast<double>(d);
    return std::log2(dd + 1.0) + 2.0 * std::log2(std::log2(dd + 2.0) + 1.0);
}

}  // namespace ard
