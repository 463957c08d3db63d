#include "ard/pareto.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "ard/codec.hpp"
#include "ard/spheres.hpp"

namespace ard {

namespace {

class Fenwick {
public:
    explicit Fenwick(std::size_t n) : tree_(n + 1, 0) {}

    void add(std::size_t index) {
        for (std::size_t i = index + 1; i < tree_.size(); i += i & (0 - i)) tree_[i]++;
    }

    // Number of inserted values with compressed id <= index.
    std::uint32_t prefix(std::size_t index) const {
        std::uint32_t sum = 0;
        for (std::size_t i = index + 1; i > 0; i -= i & (0 - i)) sum += tree_[i];
        return sum;
    }

private:
    std::vector<std::uint32_t> tree_;
};

}  // namespace

std::vector<std::uint32_t> weakness_all(const Pool& pool) {
    const std::size_t m = pool.size();
    if (m == 0) throw std::invalid_argument("weakness_all: empty pool");

    std::vector<std::uint32_t> order(m);
    std::iota(order.begin(), order.end(), 0u);
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
        const TradeOff& ta = pool[a].tradeoff;
        const TradeOff& tb = pool[b].tradeoff;
        if (ta.rate_bits != tb.rate_bits) return ta.rate_bits < tb.rate_bits;
        return ta.distortion < tb.distortion;
    });

    // Compress distortion values to dense ids.
    std::vector<std::uint64_t> distinct;
    distinct.reserve(m);
    for (const Candidate& c : pool) distinct.push_back(c.tradeoff.distortion);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    auto id_of = [&](std::uint64_t d) {
        return static_cast<std::size_t>(
            std::lower_bound(distinct.begin(), distinct.end(), d) - distinct.begin());
    };

    std::vector<std::uint32_t> weakness(m, 0);
    Fenwick fenwick(distinct.size());

    std::size_t i = 0;
    while (i < m) {
        // Batch of equal g1; members of the batch cannot strictly dominate
        // each other unless their g2 differs.
        std::size_t j = i;
        const double g1 = pool[order[i]].tradeoff.rate_bits;
        while (j < m && pool[order[j]].tradeoff.rate_bits == g1) ++j;

        std::size_t k = i;
        while (k < j) {
            std::size_t k2 = k;
            const std::uint64_t g2 = pool[order[k]].tradeoff.distortion;
            while (k2 < j && pool[order[k2]].tradeoff.distortion == g2) ++k2;
            const std::uint32_t count =
                fenwick.prefix(id_of(g2)) + static_cast<std::uint32_t>(k - i);
            for (std::size_t t = k; t < k2; ++t) weakness[order[t]] = count;
            k = k2;
        }
        for (std::size_t t = i; t < j; ++t) fenwick.add(id_of(pool[order[t]].tradeoff.distortion));
        i = j;
    }
    return weakness;
}

Pool reduce(const Pool& pool) {
    const std::vector<std::uint32_t> weakness = weakness_all(pool);
    Pool front;
    for (std::size_t i = 0; i < pool.size(); ++i)
        if (weakness[i] == 0) front.push_back(pool[i]);
    return front;
}

double three_part_codelength_cached(const TradeOff& tradeoff, std::size_t x_len,
                                    std::size_t y_len, Metric metric,
                                    std::uint32_t alphabet_size) {
    // A one-symbol space only ever sees distortion 0, where every sphere is a
    // singleton; pricing it as binary is exact and keeps the call valid.
    alphabet_size = std::max(alphabet_size, 2u);
    const std::uint64_t d = tradeoff.distortion;
    double sphere_bits = 0.0;
    switch (metric) {
        case Metric::hamming:
            sphere_bits = log_hamming_sphere(static_cast<std::int64_t>(x_len),
                                             static_cast<std::int64_t>(d), alphabet_size)
                              .log2_size;
            break;
        case Metric::euclidean:
            sphere_bits =
                log_euclid_sphere_bound(static_cast<std::int64_t>(x_len), static_cast<std::int64_t>(d))
                    .log2_size;
            break;
        case Metric::edit:
            sphere_bits = log_edit_sphere_bound(static_cast<std::int64_t>(y_len),
                                                static_cast<std::int64_t>(d), alphabet_size)
                              .log2_size;
            break;
    }
    return tradeoff.rate_bits + universal_int_codelength(static_cast<std::int64_t>(d)) + sphere_bits;
}

double three_part_codelength(BytesView y, BytesView x, Metric metric, BytesView side_info,
                             std::uint32_t alphabet_size) {
    const TradeOff tradeoff{conditional_codelength(y, side_info), distortion(metric, x, y)};
    return three_part_codelength_cached(tradeoff, x.size(), y.size(), metric, alphabet_size);
}

std::vector<FrontPoint> curves(const Pool& pool, BytesView x, Metric metric, BytesView side_info,
                               const Bytes* original, std::uint32_t alphabet_size) {
    (void)side_info;  // rates are cached in the candidates
    const Pool front_members = reduce(pool);

    // Collapse duplicated trade-offs to the lexicographically smallest payload
    // so the output depends only on the trade-off set.
    std::map<std::pair<double, std::uint64_t>, const Candidate*> by_tradeoff;
    for (const Candidate& c : front_members) {
        const auto key = std::make_pair(c.tradeoff.rate_bits, c.tradeoff.distortion);
        auto [it, inserted] = by_tradeoff.emplace(key, &c);
        if (!inserted && c.payload < it->second->payload) it->second = &c;
    }

    std::vector<FrontPoint> points;
    points.reserve(by_tradeoff.size());
    for (const auto& [key, candidate] : by_tradeoff) {
        FrontPoint p;
        p.rate_bits = key.first;
        p.distortion = key.second;
        p.three_part_bits = three_part_codelength_cached(candidate->tradeoff, x.size(),
                                                         candidate->payload.size(), metric,
                                                         alphabet_size);
        if (original != nullptr)
            p.distortion_to_original = distortion(metric, *original, candidate->payload);
        p.payload = candidate->payload;
        points.push_back(std::move(p));
    }
    // map iteration is already rate-ascending; distortion is non-increasing
    // because dominated trade-offs were removed by reduce.
    return points;
}

FrontPoint minimal_sufficient_statistic(const std::vector<FrontPoint>& points) {
    if (points.empty()) throw std::invalid_argument("minimal_sufficient_statistic: no points");
    double best = points[0].three_part_bits;
    for (const FrontPoint& p : points) best = std::min(best, p.three_part_bits);
    const FrontPoint* chosen = nullptr;
    for (const FrontPoint& p : points) {
        if (p.three_part_bits <= best + 1e-6) {
            if (chosen == nullptr || p.rate_bits < chosen->rate_bits) chosen = &p;
        }
    }
    return *chosen;
}

}  // namespace ard
