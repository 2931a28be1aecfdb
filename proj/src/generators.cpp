#include "ranktest/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ranktest::gen {

namespace {

constexpr long long kRejectionCap = 1'000'000;

}  // namespace

MatrixPair gen_model_free(int d, Epsilon epsilon, Setting setting, rng::Stream& stream) {
    ProbabilityMatrix p = ProbabilityMatrix::constant_half(d, setting);
    ProbabilityMatrix q = p;
    if (epsilon.value == 0.0) return {std::move(p), std::move(q)};

    std::vector<std::pair<int, int>> slots;
    for_each_slot(d, setting, [&](int i, int j) { slots.emplace_back(i, j); });
    const double mirror = setting == Setting::Symmetric ? 2.0 : 1.0;
    std::vector<double> direction(slots.size());

    for (long long attempt = 0; attempt < kRejectionCap; ++attempt) {
        double norm_sq = 0.0;
        for (double& g : direction) {
            g = stream.normal();
            norm_sq += g * g;
        }
        norm_sq *= mirror;
        if (norm_sq == 0.0) continue;
        const double scale = epsilon.value * d / std::sqrt(norm_sq);
        bool inside = true;
        for (const double g : direction) {
            if (std::abs(scale * g) > 0.5) {
                inside = false;
                break;
            }
        }
        if (!inside) continue;
        for (std::size_t s = 0; s < slots.size(); ++s) {
            const auto [i, j] = slots[s];
            const double value = 0.5 + scale * direction[s];
            if (setting == Setting::Symmetric) {
                q.set_pair(i, j, value);
            } else {
                q.set_entry(i, j, value);
            }
        }
        return {std::move(p), std::move(q)};
    }
    throw std::runtime_error("model-free generator: rejection cap exceeded (epsilon too large)");
}

ParameterBasedPair gen_parameter_based(int d, Epsilon epsilon, const LinkFunction& link,
                                       rng::Stream& stream) {
    if (d < 2) throw std::invalid_argument("parameter-based generator needs d >= 2");

    // +delta on a random half of the items, -delta on the other half;
    // odd d leaves one weight at zero so the weights still sum to zero.
    std::vector<int> order(static_cast<std::size_t>(d));
    std::iota(order.begin(), order.end(), 0);
    stream.shuffle(order.begin(), order.end());
    const int half = d / 2;
    std::vector<double> signs(static_cast<std::size_t>(d), 0.0);
    for (int r = 0; r < half; ++r) signs[static_cast<std::size_t>(order[r])] = 1.0;
    for (int r = half; r < 2 * half; ++r) signs[static_cast<std::size_t>(order[r])] = -1.0;

    double delta = 0.0;
    if (epsilon.value > 0.0) {
        if (d % 2 == 0) {
            const double eta = epsilon.value * std::sqrt(2.0);
            if (eta >= 0.5)
                throw std::domain_error("parameter-based generator: epsilon*sqrt(2) >= 1/2");
            delta = link.name() == "btl" ? 0.5 * std::log((0.5 + eta) / (0.5 - eta))
                                         : link.invert(0.5 + eta) / 2.0;
        } else {
            // ||Delta||_F^2 = 2 h^2 (f(2delta)-1/2)^2 + 4 h (f(delta)-1/2)^2
            const double h = static_cast<double>(half);
            const auto separation = [&](double dv) {
                const double eta2 = link(2.0 * dv) - 0.5;
                const double eta1 = link(dv) - 0.5;
                return std::sqrt(2.0 * h * h * eta2 * eta2 + 4.0 * h * eta1 * eta1) / d;
            };
            double hi = 1.0;
            while (separation(hi) < epsilon.value) {
                hi *= 2.0;
                if (hi > 1e6)
                    throw std::domain_error(
                        "parameter-based generator: epsilon unreachable for this link");
            }
            double lo = 0.0;
            while (hi - lo > 1e-12) {
                const double mid = 0.5 * (lo + hi);
                (separation(mid) < epsilon.value ? lo : hi) = mid;
            }
            delta = 0.5 * (lo + hi);
        }
    }

    ParameterBasedPair result{ProbabilityMatrix::constant_half(d, Setting::Symmetric),
                              ProbabilityMatrix::constant_half(d, Setting::Symmetric),
                              std::vector<double>(static_cast<std::size_t>(d), 0.0), delta,
                              link(2.0 * delta) - 0.5};
    for (int i = 0; i < d; ++i)
        result.weights_q[static_cast<std::size_t>(i)] = signs[static_cast<std::size_t>(i)] * delta;
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            result.q.set_pair(i, j,
                              link(result.weights_q[static_cast<std::size_t>(i)] -
                                   result.weights_q[static_cast<std::size_t>(j)]));
    return result;
}

MatrixPair gen_sst(int d, Epsilon epsilon, rng::Stream& stream) {
    if (d < 2) throw std::invalid_argument("SST generator needs d >= 2");
    ProbabilityMatrix p = ProbabilityMatrix::constant_half(d, Setting::Symmetric);
    ProbabilityMatrix q = p;
    if (epsilon.value == 0.0) return {std::move(p), std::move(q)};

    std::vector<std::pair<int, int>> slots;
    slots.reserve(static_cast<std::size_t>(slot_count(d, Setting::Symmetric)));
    for_each_slot(d, Setting::Symmetric, [&](int i, int j) { slots.emplace_back(i, j); });
    // Antidiagonal fill order: ascending i-j, ties by ascending i. Sorted
    // descending draws then give a staircase that is nonincreasing down
    // each column and nondecreasing along each row.
    std::sort(slots.begin(), slots.end(), [](const auto& a, const auto& b) {
        const int ka = a.first - a.second;
        const int kb = b.first - b.second;
        return ka != kb ? ka < kb : a.first < b.first;
    });
    std::vector<double> draws(slots.size());
    for (double& u : draws) u = stream.next_double();
    std::sort(draws.begin(), draws.end(), std::greater<>());

    double norm_sq = 0.0;
    for (const double u : draws) norm_sq += 2.0 * u * u;
    if (norm_sq == 0.0) throw std::runtime_error("SST generator: degenerate draw");
    const double scale = epsilon.value * d / std::sqrt(norm_sq);
    for (std::size_t s = 0; s < slots.size(); ++s) {
        const double value = 0.5 + scale * draws[s];
        if (value > 1.0)
            throw std::domain_error("SST generator: epsilon too large for [0,1] entries");
        q.set_pair(slots[s].first, slots[s].second, value);
    }
    return {std::move(p), std::move(q)};
}

ProbabilityMatrix gen_mst_theta(int d, double eta, rng::Stream& stream) {
    if (d < 2 || d % 2 != 0) throw std::invalid_argument("MST construction needs even d");
    if (!(eta >= 0.0 && eta < 0.5)) throw std::invalid_argument("eta must lie in [0, 1/2)");
    ProbabilityMatrix q = ProbabilityMatrix::constant_half(d, Setting::Symmetric);
    const int half = d / 2;
    std::vector<int> column(static_cast<std::size_t>(half));
    std::iota(column.begin(), column.end(), 0);
    stream.shuffle(column.begin(), column.end());
    for (int r = 0; r < half; ++r)
        q.set_pair(r, half + column[static_cast<std::size_t>(r)], 0.5 + eta);
    return q;
}

ProbabilityMatrix gen_planted_clique_sst(int d, int kappa, rng::Stream& stream) {
    if (d < 2 || d % 2 != 0) throw std::invalid_argument("planted clique needs even d");
    const int half = d / 2;
    if (kappa < 0 || kappa > half)
        throw std::invalid_argument("clique size must satisfy 0 <= kappa <= d/2");
    ProbabilityMatrix q = ProbabilityMatrix::constant_half(d, Setting::Symmetric);
    std::vector<int> indices(static_cast<std::size_t>(half));
    std::iota(indices.begin(), indices.end(), 0);
    stream.shuffle(indices.begin(), indices.end());
    indices.resize(static_cast<std::size_t>(kappa));
    for (const int r : indices)
        for (const int c : indices) q.set_pair(r, half + c, 1.0);
    return q;
}

CountGrid sample_counts(const CountDistribution& dist, int d, Setting setting,
                        rng::Stream& stream) {
    CountGrid counts(d, 0);
    for_each_slot(d, setting, [&](int i, int j) { counts(i, j) = dist.sample(stream); });
    return counts;
}

PairwiseDataset sample_comparisons(const ProbabilityMatrix& m, const CountGrid& counts,
                                   rng::Stream& stream) {
    if (counts.dim() != m.dim()) throw std::invalid_argument("count grid shape mismatch");
    PairwiseDataset data(m.dim(), m.setting());
    for_each_slot(m.dim(), m.setting(), [&](int i, int j) {
        const long long k = counts(i, j);
        data.set_slot(i, j, k, stream.binomial(k, m(i, j)));
    });
    return data;
}

}  // namespace ranktest::gen
