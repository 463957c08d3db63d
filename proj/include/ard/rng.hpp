#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ard {

// xoshiro256** with splitmix64 seeding. The search needs a generator whose
// state serializes to a short hex string for checkpoints and whose output is
// identical on every platform, which rules out the standard <random>
// distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto& word : state_) {
            // splitmix64
            x += 0x9e3779b97f4a7c15ull;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
            word = z ^ (z >> 31);
        }
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform integer in [0, bound), bound >= 1. Rejection keeps it unbiased.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    // Uniform in [0, 1), 53-bit resolution.
    double real() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // Uniform in (0, 1]; never zero, safe under log().
    double real_pos() { return (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53; }

    // N(0, sigma) via Box-Muller. No spare caching: one draw, two words.
    double gaussian(double sigma) {
        const double u1 = real_pos();
        const double u2 = real();
        return sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    // Geometric on {0,1,2,...} with the given mean; P(k) = p(1-p)^k where
    // p = 1/(1+mean).
    std::uint64_t geometric(double mean) {
        const double p = 1.0 / (1.0 + mean);
        const double u = real_pos();
        const double k = std::floor(std::log(u) / std::log1p(-p));
        if (k < 0) return 0;
        if (k > 1e18) return static_cast<std::uint64_t>(1e18);
        return static_cast<std::uint64_t>(k);
    }

    std::string state_hex() const {
        static const char digits[] = "0123456789abcdef";
        std::string out;
        out.reserve(64);
        for (std::uint64_t word : state_)
            for (int shift = 60; shift >= 0; shift -= 4)
                out.push_back(digits[(word >> shift) & 0xf]);
        return out;
    }

    static Rng from_state_hex(const std::string& hex) {
        if (hex.size() != 64) throw std::invalid_argument("rng state must be 64 hex chars");
        Rng rng(0);
        for (int w = 0; w < 4; ++w) {
            std::uint64_t word = 0;
            for (int i = 0; i < 16; ++i) {
                const char c = hex[static_cast<std::size_t>(w) * 16 + i];
                std::uint64_t v;
                if (c >= '0' && c <= '9') v = static_cast<std::uint64_t>(c - '0');
                else if (c >= 'a' && c <= 'f') v = static_cast<std::uint64_t>(c - 'a' + 10);
                else if (c >= 'A' && c <= 'F') v = static_cast<std::uint64_t>(c - 'A' + 10);
                else throw std::invalid_argument("invalid rng state hex");
                word = word << 4 | v;
            }
            rng.state_[w] = word;
        }
        return rng;
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    std::array<std::uint64_t, 4> state_{};
};

}  // namespace ard
