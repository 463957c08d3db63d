#include "ard/distortion.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace ard {

Metric parse_metric(const std::string& name) {
    if (name == "hamming") return Metric::hamming;
    if (name == "euclidean") return Metric::euclidean;
    if (name == "edit") return Metric::edit;
    throw std::invalid_argument("unknown metric: " + name);
}

const char* metric_name(Metric metric) {
    switch (metric) {
        case Metric::hamming: return "hamming";
        case Metric::euclidean: return "euclidean";
        case Metric::edit: return "edit";
    }
    return "?";
}

std::uint64_t hamming(BytesView x, BytesView y) {
    if (x.size() != y.size()) throw std::invalid_argument("hamming: incomparable lengths");
    std::uint64_t mismatches = 0;
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] != y[i]) ++mismatches;
    return mismatches;
}

std::uint64_t euclidean_sq(BytesView x, BytesView y) {
    if (x.size() != y.size()) throw std::invalid_argument("euclidean: incomparable lengths");
    std::uint64_t sum = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const std::int64_t d = static_cast<std::int64_t>(x[i]) - static_cast<std::int64_t>(y[i]);
        sum += static_cast<std::uint64_t>(d * d);
    }
    return sum;
}

std::uint64_t edit(BytesView x, BytesView y) {
    if (x.size() < y.size()) std::swap(x, y);
    const std::size_t m = x.size();
    const std::size_t n = y.size();
    if (n == 0) return m;

    std::vector<std::uint64_t> row(n + 1);
    for (std::size_t j = 0; j <= n; ++j) row[j] = j;
    for (std::size_t i = 1; i <= m; ++i) {
        std::uint64_t diagonal = row[0];
        row[0] = i;
        for (std::size_t j = 1; j <= n; ++j) {
            const std::uint64_t above = row[j];
            if (x[i - 1] == y[j - 1]) {
                row[j] = diagonal;
            } else {
                row[j] = 1 + std::min({above, row[j - 1], diagonal});
            }
            diagonal = above;
        }
    }
    return row[n];
}

std::uint64_t distortion(Metric metric, BytesView x, BytesView y) {
    switch (metric) {
        case Metric::hamming: return hamming(x, y);
        case Metric::euclidean: return euclidean_sq(x, y);
        case Metric::edit: return edit(x, y);
    }
    throw std::logic_error("unreachable");
}

double display_distortion(Metric metric, std::uint64_t raw) {
    if (metric == Metric::euclidean) return std::sqrt(static_cast<double>(raw));
    return static_cast<double>(raw);
}

}  // namespace ard
