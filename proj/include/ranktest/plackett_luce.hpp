#pragma once

#include <span>
#include <vector>

#include "ranktest/rng.hpp"
#include "ranktest/types.hpp"

namespace ranktest::gen {

/// Notional item qualities for the Plackett-Luce model.
struct PLWeights {
    std::vector<double> values;

    explicit PLWeights(std::vector<double> w);
    int dim() const { return static_cast<int>(values.size()); }
    /// Shifted so the weights sum to zero (the usual identifiability pin).
    PLWeights centered() const;
};

/// Samples a ranking of `subset` by sequential choice: the next item is
/// drawn from the remaining ones with probability proportional to
/// exp(w_i), computed max-shifted for stability.
PartialRanking sample_pl_ranking(const PLWeights& weights, std::span<const int> subset,
                                 rng::Stream& stream);

/// The closed-form marginal matrix p_ij = exp(w_i) / (exp(w_i) + exp(w_j)).
ProbabilityMatrix pl_marginal_matrix(const PLWeights& weights);

}  // namespace ranktest::gen
