#include "ranktest/plackett_luce.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace ranktest::gen {

PLWeights::PLWeights(std::vector<double> w) : values(std::move(w)) {
    if (values.empty()) throw std::invalid_argument("weights must be non-empty");
    for (const double v : values)
        if (!std::isfinite(v)) throw std::invalid_argument("weights must be finite");
}

PLWeights PLWeights::centered() const {
    const double mean = std::accumulate(values.begin(), values.end(), 0.0) /
                        static_cast<double>(values.size());
    std::vector<double> shifted = values;
    for (double& v : shifted) v -= mean;
    return PLWeights(std::move(shifted));
}

PartialRanking sample_pl_ranking(const PLWeights& weights, std::span<const int> subset,
                                 rng::Stream& stream) {
    if (subset.size() < 2) throw std::invalid_argument("subset needs at least two items");
    for (const int item : subset)
        if (item < 0 || item >= weights.dim())
            throw std::invalid_argument("subset item out of range");

    std::vector<int> remaining(subset.begin(), subset.end());
    std::vector<int> ordered;
    ordered.reserve(remaining.size());
    std::vector<double> mass(remaining.size());
    while (remaining.size() > 1) {
        double wmax = -std::numeric_limits<double>::infinity();
        for (const int item : remaining)
            wmax = std::max(wmax, weights.values[static_cast<std::size_t>(item)]);
        double total = 0.0;
        for (std::size_t i = 0; i < remaining.size(); ++i) {
            mass[i] = std::exp(weights.values[static_cast<std::size_t>(remaining[i])] - wmax);
            total += mass[i];
        }
        const double u = stream.next_double() * total;
        double cumulative = 0.0;
        std::size_t chosen = remaining.size() - 1;
        for (std::size_t i = 0; i < remaining.size(); ++i) {
            cumulative += mass[i];
            if (u < cumulative) {
                chosen = i;
                break;
            }
        }
        ordered.push_back(remaining[chosen]);
        remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(chosen));
        mass.resize(remaining.size());
    }
    ordered.push_back(remaining.front());
    return PartialRanking(std::move(ordered), weights.dim());
}

ProbabilityMatrix pl_marginal_matrix(const PLWeights& weights) {
    const int d = weights.dim();
    ProbabilityMatrix m = ProbabilityMatrix::constant_half(d, Setting::Symmetric);
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            const double diff = weights.values[static_cast<std::size_t>(j)] -
                                weights.values[static_cast<std::size_t>(i)];
            m.set_pair(i, j, 1.0 / (1.0 + std::exp(diff)));
        }
    }
    return m;
}

}  // namespace ranktest::gen
