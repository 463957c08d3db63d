#include "ard/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "ard/codec.hpp"
#include "ard/ppm.hpp"

namespace ard {

namespace {

std::uint8_t random_symbol(Rng& rng, const SearchConfig& config) {
    if (config.alphabet.empty()) return static_cast<std::uint8_t>(rng.below(256));
    return config.alphabet[rng.below(config.alphabet.size())];
}

// Draw the (len1, len2) split of a string of length n: len1 uniform on
// {0..n}, len2 geometric with the configured mean, truncated to the suffix.
std::pair<std::size_t, std::size_t> draw_split(std::size_t n, Rng& rng,
                                               const SearchConfig& config) {
    const std::size_t len1 = static_cast<std::size_t>(rng.below(n + 1));
    const std::uint64_t raw = rng.geometric(config.geometric_mean);
    const std::size_t len2 = static_cast<std::size_t>(std::min<std::uint64_t>(raw, n - len1));
    return {len1, len2};
}

}  // namespace

Bytes crossover_with_splits(BytesView x, BytesView y, std::size_t len1, std::size_t len2) {
    const std::size_t nx = x.size();
    const std::size_t ny = y.size();
    // Proportional split of y; llround keeps the pieces summing to |y| and
    // degenerates to equal splits when the lengths match.
    const auto proportional = [&](std::size_t prefix) {
        return static_cast<std::size_t>(std::llround(
            static_cast<double>(prefix) * static_cast<double>(ny) / static_cast<double>(nx)));
    };
    const std::size_t y1 = proportional(len1);
    const std::size_t y12 = proportional(len1 + len2);

    Bytes out;
    out.reserve(len1 + (y12 - y1) + (nx - len1 - len2));
    out.insert(out.end(), x.begin(), x.begin() + len1);
    out.insert(out.end(), y.begin() + y1, y.begin() + y12);
    out.insert(out.end(), x.begin() + len1 + len2, x.end());
    return out;
}

Bytes crossover(BytesView x, BytesView y, Rng& rng, const SearchConfig& config) {
    if (x.empty() || y.empty()) return Bytes(x.begin(), x.end());
    const auto [len1, len2] = draw_split(x.size(), rng, config);
    return crossover_with_splits(x, y, len1, len2);
}

Bytes small_mutation(BytesView x, Metric metric, Rng& rng, const SearchConfig& config) {
    Bytes out(x.begin(), x.end());
    switch (metric) {
        case Metric::hamming: {
            const std::size_t pos = rng.below(out.size());
            out[pos] = random_symbol(rng, config);
            break;
        }
        case Metric::euclidean: {
            const std::size_t pos = rng.below(out.size());
            const double delta = rng.gaussian(config.gaussian_sigma);
            const long long value = out[pos] + std::llround(delta);
            out[pos] = static_cast<std::uint8_t>(std::clamp<long long>(value, 0, 255));
            break;
        }
        case Metric::edit: {
            switch (rng.below(3)) {
                case 0: {  // change
                    const std::size_t pos = rng.below(out.size());
                    out[pos] = random_symbol(rng, config);
                    break;
                }
                case 1: {  // insert
                    const std::size_t pos = rng.below(out.size() + 1);
                    out.insert(out.begin() + pos, random_symbol(rng, config));
                    break;
                }
                default: {  // delete
                    const std::size_t pos = rng.below(out.size());
                    out.erase(out.begin() + pos);
                    break;
                }
            }
            break;
        }
    }
    return out;
}

Bytes ppm_block_mutation(BytesView x, Rng& rng, const SearchConfig& config) {
    const auto [len1, len2] = draw_split(x.size(), rng, config);
    if (len2 == 0) return Bytes(x.begin(), x.end());
    const PpmModel model = ppm_train(x.subspan(0, len1), config.alphabet);
    const Bytes replacement = ppm_sample(model, len2, rng);

    Bytes out;
    out.reserve(x.size());
    out.insert(out.end(), x.begin(), x.begin() + len1);
    out.insert(out.end(), replacement.begin(), replacement.end());
    out.insert(out.end(), x.begin() + len1 + len2, x.end());
    return out;
}

Bytes mutate(BytesView x, Metric metric, Rng& rng, const SearchConfig& config) {
    if (x.empty()) {
        // Only reachable under edit distortion, where deletions can shrink a
        // candidate to nothing; grow back by insertion.
        if (metric == Metric::edit) return {random_symbol(rng, config)};
        return {};
    }
    if (rng.real() < config.small_mutation_prob) return small_mutation(x, metric, rng, config);
    return ppm_block_mutation(x, rng, config);
}

double drop_probability(std::uint64_t i, std::uint64_t n, double alpha) {
    if (i < 1 || i > n) throw std::domain_error("drop_probability: index out of [1, n]");
    if (!(alpha > 1.0)) throw std::domain_error("drop_probability: alpha must be > 1");
    const double ratio = static_cast<double>(n) / (static_cast<double>(i) - 0.5) - 1.0;
    return 1.0 / (1.0 + std::pow(ratio, alpha));
}

void select(Pool& pool, const SearchConfig& config, Rng& rng) {
    if (pool.empty()) return;
    const std::vector<std::uint32_t> weakness = weakness_all(pool);

    std::vector<std::uint32_t> positive;
    for (std::uint32_t i = 0; i < pool.size(); ++i)
        if (weakness[i] > 0) positive.push_back(i);
    if (positive.empty()) return;

    std::sort(positive.begin(), positive.end(), [&](std::uint32_t a, std::uint32_t b) {
        if (weakness[a] != weakness[b]) return weakness[a] < weakness[b];
        const TradeOff& ta = pool[a].tradeoff;
        const TradeOff& tb = pool[b].tradeoff;
        if (ta.rate_bits != tb.rate_bits) return ta.rate_bits < tb.rate_bits;
        if (ta.distortion != tb.distortion) return ta.distortion < tb.distortion;
        return pool[a].payload < pool[b].payload;
    });

    std::vector<bool> dropped(pool.size(), false);
    const std::uint64_t n = positive.size();
    for (std::uint64_t rank = 1; rank <= n; ++rank) {
        const double u = rng.real();
        if (u < drop_probability(rank, n, config.alpha)) dropped[positive[rank - 1]] = true;
    }

    Pool survivors;
    survivors.reserve(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i)
        if (!dropped[i]) survivors.push_back(std::move(pool[i]));
    pool.swap(survivors);
}

Candidate evaluate(Bytes payload, const Bytes& x, Metric metric, const Bytes& side_info,
                   Provenance provenance) {
    Candidate candidate;
    candidate.tradeoff.rate_bits = conditional_codelength(payload, side_info);
    candidate.tradeoff.distortion = distortion(metric, x, payload);
    candidate.payload = std::move(payload);
    candidate.provenance = provenance;
    return candidate;
}

void step(Pool& pool, const Bytes& x, Metric metric, const Bytes& side_info,
          const SearchConfig& config, Rng& rng) {
    if (pool.empty()) throw std::invalid_argument("step: pool must be initialized");

    std::unordered_set<std::string> payloads;
    payloads.reserve(pool.size() * 2);
    for (const Candidate& c : pool)
        payloads.emplace(reinterpret_cast<const char*>(c.payload.data()), c.payload.size());

    const std::size_t existing = pool.size();
    for (std::uint32_t k = 0; k < config.offspring_per_iteration; ++k) {
        Bytes child;
        Provenance provenance;
        if (rng.real() < config.crossover_fraction) {
            const Candidate& a = pool[rng.below(existing)];
            const Candidate& b = pool[rng.below(existing)];
            child = crossover(a.payload, b.payload, rng, config);
            provenance = Provenance::crossover;
        } else {
            const Candidate& parent = pool[rng.below(existing)];
            child = mutate(parent.payload, metric, rng, config);
            provenance = Provenance::mutation;
        }
        std::string key(reinterpret_cast<const char*>(child.data()), child.size());
        if (!payloads.insert(std::move(key)).second) continue;  // payload already pooled
        pool.push_back(evaluate(std::move(child), x, metric, side_info, provenance));
    }

    select(pool, config, rng);
}

namespace {

std::vector<TradeOff> front_signature(const Pool& pool) {
    std::vector<TradeOff> tradeoffs;
    for (const Candidate& c : reduce(pool)) tradeoffs.push_back(c.tradeoff);
    std::sort(tradeoffs.begin(), tradeoffs.end(), [](const TradeOff& a, const TradeOff& b) {
        if (a.rate_bits != b.rate_bits) return a.rate_bits < b.rate_bits;
        return a.distortion < b.distortion;
    });
    tradeoffs.erase(std::unique(tradeoffs.begin(), tradeoffs.end()), tradeoffs.end());
    return tradeoffs;
}

}  // namespace

RunResult run_from(Pool pool, Rng rng, std::uint64_t start_iteration, const Bytes& x,
                   Metric metric, const Bytes& side_info, const SearchConfig& config) {
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<TradeOff> last_front = front_signature(pool);
    std::uint64_t stable_iterations = 0;

    std::uint64_t iteration = start_iteration;
    for (; iteration < config.max_iterations; ++iteration) {
        step(pool, x, metric, side_info, config, rng);
        const std::uint64_t completed = iteration + 1;

        if (config.checkpoint_every > 0 && !config.checkpoint_path.empty() &&
            (completed % config.checkpoint_every == 0 || completed == config.max_iterations)) {
            write_checkpoint(config.checkpoint_path,
                             {config.seed, completed, rng.state_hex(), pool});
        }

        if (config.stagnation_window > 0) {
            std::vector<TradeOff> current = front_signature(pool);
            if (current == last_front) {
                if (++stable_iterations >= config.stagnation_window) {
                    iteration = completed;
                    break;
                }
            } else {
                stable_iterations = 0;
                last_front = std::move(current);
            }
        }

        if (config.max_wall_seconds > 0.0) {
            const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - t0;
            if (elapsed.count() >= config.max_wall_seconds) {
                iteration = completed;
                break;
            }
        }
    }

    const std::uint32_t sigma =
        config.alphabet.empty() ? 256u : static_cast<std::uint32_t>(config.alphabet.size());
    RunResult result;
    result.reduced = reduce(pool);
    result.front = curves(pool, x, metric, side_info, nullptr, sigma);
    result.pool = std::move(pool);
    result.iterations = iteration;
    return result;
}

RunResult run(const Bytes& x, Metric metric, const Bytes& side_info, const SearchConfig& config) {
    Pool pool;
    pool.push_back(evaluate(x, x, metric, side_info, Provenance::input));
    return run_from(std::move(pool), Rng(config.seed), 0, x, metric, side_info, config);
}

void write_checkpoint(const std::string& path, const Checkpoint& checkpoint) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write checkpoint: " + tmp);
        out << "ard-checkpoint v1 " << checkpoint.seed << ' ' << checkpoint.iteration << ' '
            << checkpoint.rng_state_hex << '\n';
        char rate[64];
        for (const Candidate& c : checkpoint.pool) {
            std::snprintf(rate, sizeof rate, "%.9f", c.tradeoff.rate_bits);
            out << (c.payload.empty() ? std::string("-") : to_hex(c.payload)) << ' ' << rate << ' '
                << c.tradeoff.distortion << '\n';
        }
        out.flush();
        if (!out) throw std::runtime_error("checkpoint write failed: " + tmp);
    }
    std::filesystem::rename(tmp, path);
}

Checkpoint read_checkpoint(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read checkpoint: " + path);

    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty checkpoint file");
    std::istringstream header(line);
    std::string magic, version;
    Checkpoint checkpoint;
    header >> magic >> version >> checkpoint.seed >> checkpoint.iteration >>
        checkpoint.rng_state_hex;
    if (magic != "ard-checkpoint" || version != "v1" || header.fail())
        throw std::runtime_error("unrecognized checkpoint header: " + line);

    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string payload_hex, rate;
        std::uint64_t dist = 0;
        fields >> payload_hex >> rate >> dist;
        if (fields.fail()) throw std::runtime_error("malformed checkpoint line: " + line);
        Candidate candidate;
        candidate.payload = payload_hex == "-" ? Bytes{} : from_hex(payload_hex);
        candidate.tradeoff.rate_bits = std::stod(rate);
        candidate.tradeoff.distortion = dist;
        candidate.provenance = Provenance::mutation;
        checkpoint.pool.push_back(std::move(candidate));
    }
    if (checkpoint.pool.empty()) throw std::runtime_error("checkpoint holds no candidates");
    return checkpoint;
}

Pool rebuild_pool(const Checkpoint& checkpoint, const Bytes& x, Metric metric,
                  const Bytes& side_info) {
    Pool pool;
    pool.reserve(checkpoint.pool.size());
    for (const Candidate& stored : checkpoint.pool) {
        Candidate fresh = evaluate(stored.payload, x, metric, side_info,
                                   stored.payload == x ? Provenance::input : Provenance::mutation);
        if (fresh.tradeoff.distortion != stored.tradeoff.distortion ||
            std::abs(fresh.tradeoff.rate_bits - stored.tradeoff.rate_bits) > 1e-6)
            throw std::runtime_error("checkpoint does not match the experiment inputs");
        pool.push_back(std::move(fresh));
    }
    return pool;
}

}  // namespace ard
