#include "ard/oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

#include "ard/codec.hpp"
#include "ard/pareto.hpp"

namespace ard {

namespace {

// sigma^length with saturation well above any usable limit.
std::uint64_t saturating_power(std::uint64_t base, std::uint64_t exponent) {
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < exponent; ++i) {
        if (result > (1ull << 62) / base) return 1ull << 63;
        result *= base;
    }
    return result;
}

}  // namespace

std::vector<FrontPoint> exhaustive_front(const Bytes& x, Metric metric, const Bytes& side_info,
                                         std::vector<std::uint8_t> alphabet,
                                         const OracleLimit& limit) {
    if (alphabet.empty()) alphabet.assign(x.begin(), x.end());
    std::sort(alphabet.begin(), alphabet.end());
    alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());
    if (alphabet.empty()) alphabet.push_back(0);
    const std::uint64_t sigma = alphabet.size();

    const std::size_t n = x.size();
    std::vector<std::size_t> lengths;
    if (metric == Metric::edit) {
        for (std::size_t l = 0; l <= n; ++l) lengths.push_back(l);
    } else {
        lengths.push_back(n);
    }

    std::uint64_t total = 0;
    for (std::size_t l : lengths) {
        const std::uint64_t count = saturating_power(sigma, l);
        total = (total > (1ull << 62) - count) ? (1ull << 63) : total + count;
    }
    if (total > limit.max_total_enumeration)
        throw std::invalid_argument(
            "exhaustive_front: representation space has " + std::to_string(total) +
            " candidates, above the limit of " + std::to_string(limit.max_total_enumeration));

    // Best rate seen at each exact distortion value, with the first (lex
    // smallest) achiever as representative.
    std::map<std::uint64_t, std::pair<double, Bytes>> best;
    for (std::size_t l : lengths) {
        Bytes candidate(l, alphabet[0]);
        std::vector<std::size_t> digits(l, 0);
        bool done = false;
        while (!done) {
            const double rate = conditional_codelength(candidate, side_info);
            const std::uint64_t dist = distortion(metric, x, candidate);
            auto it = best.find(dist);
            if (it == best.end()) {
                best.emplace(dist, std::make_pair(rate, candidate));
            } else if (rate < it->second.first) {
                it->second = {rate, candidate};
            }
            // advance the odometer to the next string in lexicographic order
            done = true;
            for (std::size_t pos = l; pos-- > 0;) {
                if (++digits[pos] < sigma) {
                    candidate[pos] = alphabet[digits[pos]];
                    done = false;
                    break;
                }
                digits[pos] = 0;
                candidate[pos] = alphabet[0];
            }
        }
    }

    // Sweep distortion ascending; a point survives only with a strictly
    // better rate than everything at lower distortion.
    std::vector<FrontPoint> front;
    double best_rate = std::numeric_limits<double>::infinity();
    for (const auto& [dist, entry] : best) {
        if (entry.first < best_rate) {
            FrontPoint p;
            p.rate_bits = entry.first;
            p.distortion = dist;
            p.three_part_bits =
                three_part_codelength_cached(TradeOff{entry.first, dist}, n, entry.second.size(),
                                             metric, static_cast<std::uint32_t>(sigma));
            p.payload = entry.second;
            front.push_back(std::move(p));
            best_rate = entry.first;
        }
    }
    std::sort(front.begin(), front.end(),
              [](const FrontPoint& a, const FrontPoint& b) { return a.rate_bits < b.rate_bits; });
    return front;
}

}  // namespace ard
