#pragma once

#include <cstdint>
#include <string>

#include "ard/bytes.hpp"

namespace ard {

enum class Metric { hamming, euclidean, edit };

Metric parse_metric(const std::string& name);
const char* metric_name(Metric metric);

// Number of mismatching positions; requires equal lengths.
std::uint64_t hamming(BytesView x, BytesView y);

// Sum of squared coordinate differences; requires equal lengths. The raw
// squared value is the working quantity (distortion spheres need exact
// integer radii); the square root is presentation only.
std::uint64_t euclidean_sq(BytesView x, BytesView y);

// Levenshtein distance with unit insert/delete/substitute costs.
std::uint64_t edit(BytesView x, BytesView y);

// Raw distortion under the chosen metric (squared distance for euclidean).
std::uint64_t distortion(Metric metric, BytesView x, BytesView y);

// Value as reported to humans: sqrt of the raw value for euclidean,
// identity otherwise.
double display_distortion(Metric metric, std::uint64_t raw);

}  // namespace ard
