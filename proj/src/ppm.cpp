#include "ard/ppm.hpp"

#include <algorithm>

namespace ard {

namespace {

std::uint32_t pack_context(BytesView context) {
    std::uint32_t key = 1;  // length marker keeps "ab" distinct from "\0ab"
    for (std::uint8_t b : context) key = key << 8 | b;
    return key;
}

}  // namespace

PpmModel::PpmModel(std::vector<std::uint8_t> alphabet) : alphabet_(std::move(alphabet)) {
    if (alphabet_.empty()) {
        alphabet_.resize(256);
        for (int i = 0; i < 256; ++i) alphabet_[i] = static_cast<std::uint8_t>(i);
    } else {
        std::sort(alphabet_.begin(), alphabet_.end());
        alphabet_.erase(std::unique(alphabet_.begin(), alphabet_.end()), alphabet_.end());
    }
}

void PpmModel::train(BytesView source) {
    const std::size_t n = source.size();
    for (std::size_t i = 0; i < n; ++i) {
        order0_[source[i]]++;
        for (int order = 1; order <= kMaxOrder; ++order) {
            if (i < static_cast<std::size_t>(order)) break;
            const BytesView context = source.subspan(i - order, order);
            contexts_[order][pack_context(context)][source[i]]++;
        }
    }
    const std::size_t tail = std::min<std::size_t>(n, kMaxOrder);
    initial_context_.assign(source.end() - tail, source.end());
}

const PpmModel::ContextCounts* PpmModel::lookup(int order, BytesView context) const {
    if (order == 0) return order0_.empty() ? nullptr : &order0_;
    if (context.size() < static_cast<std::size_t>(order)) return nullptr;
    const BytesView suffix = context.subspan(context.size() - order, order);
    const auto it = contexts_[order].find(pack_context(suffix));
    return it == contexts_[order].end() ? nullptr : &it->second;
}

double PpmModel::probability(BytesView context, std::uint8_t symbol) const {
    double escaped = 1.0;  // probability mass that reached the current order
    double total_probability = 0.0;
    const int start = static_cast<int>(std::min<std::size_t>(context.size(), kMaxOrder));
    for (int order = start; order >= 0; --order) {
        const ContextCounts* counts = lookup(order, context);
        if (counts == nullptr) continue;  // unseen context: escape with probability 1
        std::uint64_t total = 0;
        for (const auto& [sym, count] : *counts) total += count;
        const std::uint64_t distinct = counts->size();
        const double denom = static_cast<double>(total + distinct);
        const auto it = counts->find(symbol);
        if (it != counts->end()) total_probability += escaped * it->second / denom;
        escaped *= static_cast<double>(distinct) / denom;
    }
    const bool in_alphabet = std::binary_search(alphabet_.begin(), alphabet_.end(), symbol);
    if (in_alphabet) total_probability += escaped / static_cast<double>(alphabet_.size());
    return total_probability;
}

std::uint8_t PpmModel::sample_symbol(BytesView context, Rng& rng) const {
    const int start = static_cast<int>(std::min<std::size_t>(context.size(), kMaxOrder));
    for (int order = start; order >= 0; --order) {
        const ContextCounts* counts = lookup(order, context);
        if (counts == nullptr) continue;
        std::uint64_t total = 0;
        for (const auto& [sym, count] : *counts) total += count;
        const std::uint64_t distinct = counts->size();
        std::uint64_t r = rng.below(total + distinct);
        if (r < total) {
            for (const auto& [sym, count] : *counts) {
                if (r < count) return sym;
                r -= count;
            }
        }
        // escape to the next lower order
    }
    return alphabet_[rng.below(alphabet_.size())];
}

PpmModel ppm_train(BytesView context_source, std::vector<std::uint8_t> alphabet) {
    PpmModel model(std::move(alphabet));
    model.train(context_source);
    return model;
}

Bytes ppm_sample(const PpmModel& model, std::size_t length, Rng& rng) {
    Bytes context = model.initial_context();
    Bytes out;
    out.reserve(length);
    for (std::size_t i = 0; i < length; ++i) {
        const std::uint8_t symbol = model.sample_symbol(context, rng);
        out.push_back(symbol);
        context.push_back(symbol);
        if (context.size() > PpmModel::kMaxOrder)
            context.erase(context.begin(), context.end() - PpmModel::kMaxOrder);
    }
    return out;
}

}  // namespace ard
