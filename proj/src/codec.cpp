#include "ard/codec.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cmath>
#include <cstring>
#include <numeric>
#include <utility>
#include <vector>

namespace ard {

namespace {

std::atomic<std::uint64_t> g_clamp_count{0};

}  // namespace

BwtResult bwt(BytesView input) {
    const std::size_t n = input.size();
    if (n == 0) return {{}, 0};

    // Rank-doubling sort of all rotations. rank[i] is the order class of the
    // rotation starting at i under the first k characters.
    std::vector<std::uint32_t> rank(input.begin(), input.end());
    std::vector<std::uint32_t> next_rank(n);
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);

    for (std::size_t k = 1; k < n; k <<= 1) {
        auto key = [&](std::uint32_t i) {
            return std::pair<std::uint32_t, std::uint32_t>(rank[i], rank[(i + k) % n]);
        };
        std::sort(order.begin(), order.end(),
                  [&](std::uint32_t a, std::uint32_t b) { return key(a) < key(b); });
        next_rank[order[0]] = 0;
        for (std::size_t i = 1; i < n; ++i)
            next_rank[order[i]] =
                next_rank[order[i - 1]] + (key(order[i - 1]) != key(order[i]) ? 1 : 0);
        rank.swap(next_rank);
        if (rank[order.back()] == n - 1) break;  // all rotations distinct
    }

    // Remaining ties are genuinely equal rotations (periodic input); order
    // them by start index.
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        return rank[a] != rank[b] ? rank[a] < rank[b] : a < b;
    });

    BwtResult result;
    result.last_column.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        result.last_column[i] = input[(order[i] + n - 1) % n];
        if (order[i] == 0) result.primary_index = i;
    }
    return result;
}

Bytes bwt_inverse(const BwtResult& transformed) {
    const Bytes& last = transformed.last_column;
    const std::size_t n = last.size();
    if (n == 0) return {};

    std::array<std::uint64_t, 257> counts{};
    for (std::uint8_t c : last) counts[c + 1]++;
    for (std::size_t c = 1; c < 257; ++c) counts[c] += counts[c - 1];

    // lf[i]: row of the rotation obtained by rotating row i right by one.
    std::vector<std::uint64_t> lf(n);
    std::array<std::uint64_t, 256> seen{};
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint8_t c = last[i];
        lf[i] = counts[c] + seen[c]++;
    }

    Bytes output(n);
    std::uint64_t row = transformed.primary_index;
    for (std::size_t k = n; k-- > 0;) {
        output[k] = last[row];
        row = lf[row];
    }
    return output;
}

Bytes mtf(BytesView input) {
    std::array<std::uint8_t, 256> list;
    for (int i = 0; i < 256; ++i) list[i] = static_cast<std::uint8_t>(i);
    Bytes out(input.size());
    for (std::size_t i = 0; i < input.size(); ++i) {
        const std::uint8_t b = input[i];
        std::size_t r = 0;
        while (list[r] != b) ++r;
        out[i] = static_cast<std::uint8_t>(r);
        std::memmove(list.data() + 1, list.data(), r);
        list[0] = b;
    }
    return out;
}

Bytes mtf_inverse(BytesView ranks) {
    std::array<std::uint8_t, 256> list;
    for (int i = 0; i < 256; ++i) list[i] = static_cast<std::uint8_t>(i);
    Bytes out(ranks.size());
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        const std::size_t r = ranks[i];
        const std::uint8_t b = list[r];
        out[i] = b;
        std::memmove(list.data() + 1, list.data(), r);
        list[0] = b;
    }
    return out;
}

namespace {

// Adaptive frequency table with add-1/2 smoothing.
class AdaptiveCounts {
public:
    explicit AdaptiveCounts(std::size_t alphabet)
        : counts_(alphabet, 0), half_alphabet_(0.5 * static_cast<double>(alphabet)) {}

    double cost_and_update(std::size_t symbol) {
        const double p = (counts_[symbol] + 0.5) / (static_cast<double>(total_) + half_alphabet_);
        counts_[symbol]++;
        total_++;
        return -std::log2(p);
    }

private:
    std::vector<std::uint32_t> counts_;
    std::uint64_t total_ = 0;
    double half_alphabet_;
};

struct AdaptiveBit {
    std::uint32_t zeros = 0;
    std::uint32_t ones = 0;

    double cost_and_update(unsigned bit) {
        const double p = ((bit ? ones : zeros) + 0.5) / (static_cast<double>(zeros) + ones + 1.0);
        (bit ? ones : zeros)++;
        return -std::log2(p);
    }
};

constexpr int kGapBuckets = 64;  // gap g is binned by floor(log2(g+1))

// Statistical model for the MTF rank stream. The stream is parsed as
// alternating tokens (zero-run length, nonzero rank): a run length g >= 0
// precedes every rank, and a final run is emitted only when the stream ends
// in zeros. Run lengths are coded as an adaptive bucket floor(log2(g+1))
// followed by the remaining bits of g+1 under per-position adaptive bit
// models; ranks use a 255-ary adaptive table. Everything is counts plus
// -log2, so the codelength is an exact deterministic function of the input.
double model_cost(BytesView mtf_ranks) {
    AdaptiveCounts gap_bucket(kGapBuckets);
    AdaptiveCounts symbols(255);
    std::vector<AdaptiveBit> offset_bits(kGapBuckets * kGapBuckets);

    double bits = 0.0;
    const std::size_t n = mtf_ranks.size();
    std::size_t pos = 0;
    while (pos < n) {
        std::uint64_t gap = 0;
        while (pos < n && mtf_ranks[pos] == 0) {
            ++pos;
            ++gap;
        }
        const std::uint64_t v = gap + 1;
        const int bucket = std::bit_width(v) - 1;
        bits += gap_bucket.cost_and_update(static_cast<std::size_t>(bucket));
        for (int i = bucket - 1; i >= 0; --i)
            bits += offset_bits[static_cast<std::size_t>(bucket) * kGapBuckets + i]
                        .cost_and_update(static_cast<unsigned>((v >> i) & 1));
        if (pos < n) {
            bits += symbols.cost_and_update(static_cast<std::size_t>(mtf_ranks[pos]) - 1);
            ++pos;
        }
    }
    return bits;
}

}  // namespace

double codelength(BytesView input) {
    const std::size_t n = input.size();
    if (n == 0) return 0.0;
    const BwtResult transformed = bwt(input);
    const Bytes ranks = mtf(transformed.last_column);
    return std::log2(static_cast<double>(n) + 1.0) + model_cost(ranks);
}

double conditional_codelength(BytesView y, BytesView z) {
    if (y.empty()) return 0.0;  // L_A(z y) == L_A(z) bit for bit
    if (z.empty()) return codelength(y);
    const double diff = codelength(concat(z, y)) - codelength(z);
    if (diff < 0.0) {
        g_clamp_count.fetch_add(1, std::memory_order_relaxed);
        return 0.0;
    }
    return diff;
}

std::uint64_t conditional_clamp_count() { return g_clamp_count.load(std::memory_order_relaxed); }

void reset_conditional_clamp_count() { g_clamp_count.store(0, std::memory_order_relaxed); }

}  // namespace ard
