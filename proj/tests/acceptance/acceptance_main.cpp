// Acceptance suite: runs every gate criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion. Exit code is the number of
// failures.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdarg>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ard/codec.hpp"
#include "ard/distortion.hpp"
#include "ard/experiment.hpp"
#include "ard/image.hpp"
#include "ard/oracle.hpp"
#include "ard/pareto.hpp"
#include "ard/rng.hpp"
#include "ard/search.hpp"
#include "ard/spheres.hpp"

using namespace ard;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt(const char* format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof buf, format, args);
    va_end(args);
    return buf;
}

Bytes read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return Bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

std::string slurp(const fs::path& path) {
    const Bytes b = read_file(path);
    return std::string(b.begin(), b.end());
}

fs::path scratch_dir(const std::string& name) {
    const fs::path dir = fs::temp_directory_path() / ("ard_acceptance_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

// The 16x16 monochrome cross with ten seeded flipped pixels.
struct CrossFixture {
    Bytes clean;
    Bytes noisy;
};

CrossFixture make_cross() {
    const int W = 16, H = 16;
    CrossFixture fx;
    fx.clean.assign(W * H, 255);
    for (int y = 0; y < H; ++y)
        for (int x = 0; x < W; ++x)
            if ((x >= 6 && x <= 9) || (y >= 6 && y <= 9)) fx.clean[y * W + x] = 0;
    fx.noisy = fx.clean;
    Rng rng(7);
    int flipped = 0;
    while (flipped < 10) {
        const std::size_t pos = rng.below(fx.noisy.size());
        if (fx.noisy[pos] == fx.clean[pos]) {
            fx.noisy[pos] ^= 0xff;
            ++flipped;
        }
    }
    return fx;
}

// ---------------------------------------------------------------------------
// criterion 1: CLI sphere arithmetic vs the reported binomial value
Outcome criterion_sphere_cli() {
    const auto start = Clock::now();
    const std::string command = std::string(ARD_CLI_PATH) + " sphere --metric hamming --n 4096 --a 377";
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) return {false, "cannot launch " + command};
    char buf[128] = {0};
    const bool got = std::fgets(buf, sizeof buf, pipe) != nullptr;
    const int status = pclose(pipe);
    const double elapsed = seconds_since(start);
    if (!got || status != 0) return {false, "CLI run failed"};
    const double value = std::strtod(buf, nullptr);
    const bool in_band = std::abs(value - 1810.0) <= 2.0;
    const bool fast = elapsed < 1.0;
    return {in_band && fast,
            fmt("printed %.3f bits (want 1810 +/- 2) in %.2fs", value, elapsed)};
}

// criterion 2: Hamming sphere exactness and partition for n <= 12
Outcome criterion_hamming_exact() {
    const auto start = Clock::now();
    for (int n = 1; n <= 12; ++n) {
        std::vector<std::uint64_t> counts(n + 1, 0);
        for (std::uint64_t v = 0; v < (1ull << n); ++v) counts[__builtin_popcountll(v)]++;
        double partition = 0.0;
        for (int a = 0; a <= n; ++a) {
            const double size = std::exp2(log_hamming_sphere(n, a, 2).log2_size);
            const double truth = static_cast<double>(counts[a]);
            if (std::abs(size - truth) > 1e-9 * truth)
                return {false, fmt("mismatch at n=%d a=%d: %.12g vs %llu", n, a, size,
                                   (unsigned long long)counts[a])};
            partition += size;
        }
        if (std::abs(partition - std::exp2(n)) > 1e-9 * std::exp2(n))
            return {false, fmt("spheres do not partition 2^%d", n)};
    }
    const double elapsed = seconds_since(start);
    return {elapsed < 10.0, fmt("all n <= 12 exact, partition holds, %.2fs", elapsed)};
}

// criterion 3: Euclidean and edit bounds dominate exhaustive counts
Outcome criterion_bound_domination() {
    const auto start = Clock::now();
    for (int n = 1; n <= 3; ++n) {
        for (int a_sq = 0; a_sq <= 25; ++a_sq) {
            std::uint64_t truth = 0;
            std::vector<int> v(n, -5);
            for (;;) {
                int norm = 0;
                for (int c : v) norm += c * c;
                if (norm == a_sq) ++truth;
                int pos = n - 1;
                while (pos >= 0 && v[pos] == 5) v[pos--] = -5;
                if (pos < 0) break;
                v[pos]++;
            }
            if (truth == 0) continue;
            const double bound = log_euclid_sphere_bound(n, a_sq).log2_size;
            if (bound < std::log2(static_cast<double>(truth)) - 1e-9)
                return {false, fmt("euclid bound below truth at n=%d a_sq=%d", n, a_sq)};
        }
    }
    for (std::size_t len = 0; len <= 3; ++len) {
        for (std::uint64_t mask = 0; mask < (1ull << len); ++mask) {
            Bytes y(len, 0);
            for (std::size_t i = 0; i < len; ++i) y[i] = (mask >> i) & 1;
            for (int a = 0; a <= 2; ++a) {
                std::uint64_t truth = 0;
                for (std::size_t slen = 0; slen <= len + a; ++slen) {
                    Bytes s(slen, 0);
                    for (std::uint64_t smask = 0; smask < (1ull << slen); ++smask) {
                        for (std::size_t i = 0; i < slen; ++i) s[i] = (smask >> i) & 1;
                        if (edit(y, s) == static_cast<std::uint64_t>(a)) ++truth;
                    }
                }
                if (truth == 0) continue;
                const double bound =
                    log_edit_sphere_bound(static_cast<std::int64_t>(len), a, 2).log2_size;
                if (bound < std::log2(static_cast<double>(truth)) - 1e-9)
                    return {false, fmt("edit bound below truth at |y|=%zu a=%d", len, a)};
            }
        }
    }
    const double elapsed = seconds_since(start);
    return {elapsed < 60.0, fmt("both bound families dominate truth, %.2fs", elapsed)};
}

// criterion 4: genetic search reproduces the exhaustive oracle front
Outcome criterion_oracle_equivalence() {
    const auto start = Clock::now();
    int identical = 0;
    for (int inst = 0; inst < 20; ++inst) {
        Rng gen(1000 + inst);
        const std::size_t len = 8 + gen.below(3);
        Bytes x(len);
        for (auto& b : x) b = static_cast<std::uint8_t>(gen.below(2));

        const auto oracle = exhaustive_front(x, Metric::hamming, {});

        SearchConfig cfg;
        cfg.seed = 5000 + inst;
        cfg.max_iterations = 1562;  // 32 offspring per iteration ~= 50,000 evaluations
        cfg.alphabet = {0, 1};
        const RunResult result = run(x, Metric::hamming, {}, cfg);

        bool same = result.front.size() == oracle.size();
        if (same)
            for (std::size_t i = 0; i < oracle.size(); ++i)
                if (result.front[i].distortion != oracle[i].distortion ||
                    std::abs(result.front[i].rate_bits - oracle[i].rate_bits) > 1e-9)
                    same = false;
        identical += same;

        for (const FrontPoint& g : result.front) {
            double oracle_rate = 1e300;
            for (const FrontPoint& o : oracle)
                if (o.distortion <= g.distortion) oracle_rate = std::min(oracle_rate, o.rate_bits);
            if (g.rate_bits > oracle_rate + 0.5)
                return {false, fmt("instance %d: GA point %.3f bits above oracle", inst,
                                   g.rate_bits - oracle_rate)};
        }
    }
    const double elapsed = seconds_since(start);
    return {identical >= 18 && elapsed < 600.0,
            fmt("%d/20 fronts identical (need >= 18), 0.5-bit tolerance holds, %.1fs", identical,
                elapsed)};
}

// criterion 5: fast weakness equals the naive O(m^2) computation
Outcome criterion_weakness_equivalence() {
    const auto start = Clock::now();
    Rng rng(1234);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t size = 1 + rng.below(1000);
        Pool pool;
        for (std::size_t i = 0; i < size; ++i) {
            Candidate c;
            c.tradeoff = {static_cast<double>(rng.below(24)), rng.below(24)};  // duplicates abound
            pool.push_back(std::move(c));
        }
        std::vector<std::uint32_t> naive(pool.size(), 0);
        for (std::size_t i = 0; i < pool.size(); ++i)
            for (std::size_t j = 0; j < pool.size(); ++j) {
                const TradeOff& a = pool[j].tradeoff;
                const TradeOff& b = pool[i].tradeoff;
                if (dominates(a, b) && !(a == b)) naive[i]++;
            }
        if (weakness_all(pool) != naive) return {false, fmt("mismatch in trial %d", trial)};
    }
    const double elapsed = seconds_since(start);
    return {elapsed < 30.0, fmt("100 pools up to size 1000 agree, %.2fs", elapsed)};
}

// criterion 6: selection statistics match the sigmoid within 3 binomial sigma
Outcome criterion_selection_statistics() {
    SearchConfig cfg;
    const int trials = 10000;
    std::vector<int> dropped(5, 0);
    Rng rng(20240);
    for (int t = 0; t < trials; ++t) {
        Pool pool;
        for (int i = 0; i < 5; ++i) {
            Candidate c;
            c.payload = {static_cast<std::uint8_t>(i)};
            c.tradeoff = {static_cast<double>(i + 1), static_cast<std::uint64_t>(i + 1)};
            pool.push_back(std::move(c));
        }
        select(pool, cfg, rng);
        std::set<std::uint8_t> kept;
        for (const Candidate& c : pool) kept.insert(c.payload[0]);
        if (!kept.count(0)) return {false, "a zero-weakness candidate was dropped"};
        for (std::uint8_t i = 1; i < 5; ++i)
            if (!kept.count(i)) dropped[i]++;
    }
    std::string detail;
    for (int i = 1; i < 5; ++i) {
        const double p = drop_probability(i, 4, 4.0);
        const double sigma = std::sqrt(p * (1.0 - p) * trials);
        const double deviation = std::abs(dropped[i] - p * trials);
        detail += fmt("i=%d: %d dropped (expect %.1f, 3sigma %.1f) ", i, dropped[i], p * trials,
                      3 * sigma);
        if (deviation > 3 * sigma) return {false, detail};
    }
    return {true, detail + "; zero-weakness never dropped"};
}

// criterion 7: metric axioms and the edit reference implementation
Outcome criterion_metric_axioms() {
    if (edit(from_string("kitten"), from_string("sitting")) != 3)
        return {false, "kitten/sitting != 3"};

    Rng rng(900);
    for (int metric_index = 0; metric_index < 3; ++metric_index) {
        const Metric metric = static_cast<Metric>(metric_index);
        for (int i = 0; i < 1000; ++i) {
            const std::size_t len = 1 + rng.below(48);
            const auto make = [&](std::size_t l) {
                Bytes b(l);
                for (auto& v : b) v = static_cast<std::uint8_t>(rng.below(8));
                return b;
            };
            const Bytes x = make(len);
            const Bytes y = make(metric == Metric::edit ? 1 + rng.below(48) : len);
            const Bytes z = make(metric == Metric::edit ? 1 + rng.below(48) : len);
            auto value = [&](const Bytes& a, const Bytes& b) {
                const double raw = static_cast<double>(distortion(metric, a, b));
                return metric == Metric::euclidean ? std::sqrt(raw) : raw;
            };
            if (value(x, y) != value(y, x)) return {false, "symmetry violated"};
            if ((value(x, y) == 0.0) != (x == y)) return {false, "identity violated"};
            if (value(x, z) > value(x, y) + value(y, z) + 1e-9)
                return {false, fmt("triangle violated for %s", metric_name(metric))};
        }
    }

    for (int i = 0; i < 500; ++i) {
        const auto make = [&](std::size_t l) {
            Bytes b(l);
            for (auto& v : b) v = static_cast<std::uint8_t>(rng.below(4));
            return b;
        };
        const Bytes x = make(rng.below(65));
        const Bytes y = make(rng.below(65));
        // independent full-matrix reference
        std::vector<std::vector<std::uint64_t>> table(x.size() + 1,
                                                      std::vector<std::uint64_t>(y.size() + 1));
        for (std::size_t r = 0; r <= x.size(); ++r) table[r][0] = r;
        for (std::size_t c = 0; c <= y.size(); ++c) table[0][c] = c;
        for (std::size_t r = 1; r <= x.size(); ++r)
            for (std::size_t c = 1; c <= y.size(); ++c)
                table[r][c] = std::min({table[r - 1][c] + 1, table[r][c - 1] + 1,
                                        table[r - 1][c - 1] + (x[r - 1] == y[c - 1] ? 0 : 1)});
        if (edit(x, y) != table[x.size()][y.size()]) return {false, "edit reference mismatch"};
    }
    return {true, "axioms on 1000 triples per metric; edit matches reference on 500 pairs"};
}

// criterion 8: compressor sanity values
Outcome criterion_compressor_sanity() {
    const Bytes zeros(4096, 0);
    const double zero_bits = codelength(zeros);
    if (!(zero_bits < 200.0)) return {false, fmt("4096 zero bytes cost %.1f bits", zero_bits)};

    Rng rng(42);
    Bytes noise(4096);
    for (auto& b : noise) b = static_cast<std::uint8_t>(rng.below(256));
    const double noise_bits = codelength(noise);
    if (noise_bits < 0.98 * 32768.0 || noise_bits > 1.05 * 32768.0)
        return {false, fmt("random input cost %.1f bits (%.4f x 32768)", noise_bits,
                           noise_bits / 32768.0)};

    Rng zr(314);
    for (int i = 0; i < 5; ++i) {
        Bytes z(zr.below(500));
        for (auto& b : z) b = static_cast<std::uint8_t>(zr.below(256));
        if (conditional_codelength({}, z) != 0.0) return {false, "conditional of empty != 0"};
    }

    const Bytes text = read_file(fs::path(ARD_TEST_DATA_DIR) / "english_10k.txt");
    if (text.size() < 10000) return {false, "english fixture below 10 kB"};
    const double lz = codelength(text);
    const double cond = conditional_codelength(text, text);
    if (!(cond <= 0.1 * lz))
        return {false, fmt("conditional(z,z)=%.1f above 0.1 x %.1f", cond, lz)};
    return {true, fmt("zeros %.1f bits, noise %.4f x 8 bits/byte, cond(z|z)/L(z)=%.4f", zero_bits,
                      noise_bits / 32768.0, cond / lz)};
}

// criterion 9: desk-scale denoising of the noisy cross
Outcome criterion_cross_denoising() {
    const auto start = Clock::now();
    const CrossFixture fx = make_cross();
    if (hamming(fx.noisy, fx.clean) != 10) return {false, "fixture does not carry 10 flips"};

    SearchConfig cfg;
    cfg.seed = 11;
    cfg.max_iterations = 6250;  // 32 offspring per iteration -> 2e5 evaluations
    const RunResult result = run(fx.noisy, Metric::hamming, {}, cfg);

    const auto front = curves(result.pool, fx.noisy, Metric::hamming, {}, &fx.clean);
    std::uint64_t best_to_original = ~0ull;
    for (const FrontPoint& p : front)
        best_to_original = std::min(best_to_original, *p.distortion_to_original);

    const FrontPoint mss = minimal_sufficient_statistic(front);
    const double input_bits = codelength(fx.noisy);

    for (std::size_t i = 1; i < front.size(); ++i)
        if (front[i].distortion > front[i - 1].distortion)
            return {false, "front distortion column increases"};

    const double elapsed = seconds_since(start);
    const bool pass = best_to_original <= 4 && mss.three_part_bits < input_bits &&
                      *mss.distortion_to_original <= 10 && elapsed < 1800.0;
    return {pass, fmt("best distortion-to-original %llu (need <= 4); L'(mss)=%.1f < L_A(input)=%.1f; "
                      "mss distortion-to-original %llu <= 10; %.1fs",
                      (unsigned long long)best_to_original, mss.three_part_bits, input_bits,
                      (unsigned long long)*mss.distortion_to_original, elapsed)};
}

// criterion 10: determinism of reruns and kill-and-resume equivalence
Outcome criterion_determinism_resume() {
    const CrossFixture fx = make_cross();
    const fs::path dir = scratch_dir("determinism");
    save_pgm(ImageGrid{16, 16, fx.noisy}, dir / "input.pgm");

    ExperimentSpec spec;
    spec.quiet = true;
    spec.input_path = dir / "input.pgm";
    spec.metric = Metric::hamming;
    spec.config.seed = 2024;
    spec.config.max_iterations = 120;
    spec.config.checkpoint_every = 30;

    spec.out_dir = dir / "a";
    run_experiment(spec);
    spec.out_dir = dir / "b";
    run_experiment(spec);
    if (slurp(dir / "a" / "front.csv") != slurp(dir / "b" / "front.csv"))
        return {false, "two identical runs produced different front.csv"};

    // kill at iteration 60, resume to 120
    spec.out_dir = dir / "killed";
    spec.config.max_iterations = 60;
    run_experiment(spec);
    ExperimentSpec full = read_experiment_json(dir / "killed" / "experiment.json");
    full.config.max_iterations = 120;
    write_experiment_json(full);
    resume_experiment(dir / "killed" / "checkpoint.txt", std::nullopt, true);

    if (slurp(dir / "a" / "front.csv") != slurp(dir / "killed" / "front.csv"))
        return {false, "resumed run deviates from the uninterrupted one"};
    return {true, "rerun byte-identical; kill-and-resume front identical"};
}

}  // namespace

int main() {
    struct Entry {
        int id;
        const char* name;
        std::function<Outcome()> check;
    };
    const std::vector<Entry> criteria = {
        {1, "sphere arithmetic via CLI", criterion_sphere_cli},
        {2, "hamming sphere exactness and partition", criterion_hamming_exact},
        {3, "euclidean/edit bounds dominate truth", criterion_bound_domination},
        {4, "genetic search matches the exhaustive oracle", criterion_oracle_equivalence},
        {5, "fast weakness equals naive weakness", criterion_weakness_equivalence},
        {6, "selection statistics match the sigmoid", criterion_selection_statistics},
        {7, "metric axioms and edit reference", criterion_metric_axioms},
        {8, "compressor sanity", criterion_compressor_sanity},
        {9, "noisy-cross denoising", criterion_cross_denoising},
        {10, "determinism and resume", criterion_determinism_resume},
    };

    int failures = 0;
    for (const Entry& entry : criteria) {
        Outcome outcome;
        try {
            outcome = entry.check();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        std::printf("[%s] criterion %2d: %s - %s\n", outcome.pass ? "PASS" : "FAIL", entry.id,
                    entry.name, outcome.detail.c_str());
        std::fflush(stdout);
        failures += outcome.pass ? 0 : 1;
    }
    std::printf("%d/%zu acceptance criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures;
}
