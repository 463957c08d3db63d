#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "ard/bytes.hpp"
#include "ard/pareto.hpp"
#include "ard/rng.hpp"

namespace testutil {

inline std::filesystem::path data_dir() { return std::filesystem::path(ARD_TEST_DATA_DIR); }

inline ard::Bytes read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    return ard::Bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

inline ard::Bytes random_bytes(ard::Rng& rng, std::size_t length, unsigned alphabet = 256) {
    ard::Bytes out(length);
    for (auto& b : out) b = static_cast<std::uint8_t>(rng.below(alphabet));
    return out;
}

// Reference O(m^2) weakness: strict dominators only.
inline std::vector<std::uint32_t> naive_weakness(const ard::Pool& pool) {
    std::vector<std::uint32_t> w(pool.size(), 0);
    for (std::size_t i = 0; i < pool.size(); ++i)
        for (std::size_t j = 0; j < pool.size(); ++j) {
            const ard::TradeOff& a = pool[j].tradeoff;
            const ard::TradeOff& b = pool[i].tradeoff;
            if (ard::dominates(a, b) && !(a == b)) w[i]++;
        }
    return w;
}

// Reference full-matrix Levenshtein, kept independent of the library's
// two-row implementation.
inline std::uint64_t reference_edit_distance(const ard::Bytes& x, const ard::Bytes& y) {
    const std::size_t m = x.size(), n = y.size();
    std::vector<std::vector<std::uint64_t>> table(m + 1, std::vector<std::uint64_t>(n + 1, 0));
    for (std::size_t i = 0; i <= m; ++i) table[i][0] = i;
    for (std::size_t j = 0; j <= n; ++j) table[0][j] = j;
    for (std::size_t i = 1; i <= m; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            const std::uint64_t subst = table[i - 1][j - 1] + (x[i - 1] == y[j - 1] ? 0 : 1);
            table[i][j] = std::min({table[i - 1][j] + 1, table[i][j - 1] + 1, subst});
        }
    return table[m][n];
}

// Fresh scratch directory under the system temp dir.
inline std::filesystem::path scratch_dir(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / ("ard_test_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace testutil
