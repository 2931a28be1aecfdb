#pragma once

#include <cstdint>
#include <utility>

#include "ranktest/rank_breaking.hpp"
#include "ranktest/rng.hpp"
#include "ranktest/statistic.hpp"
#include "ranktest/types.hpp"

namespace ranktest::perm {

/// How the permutation p-value handles its own discreteness. PaperExact is
/// p = #{T_l >= T} / gamma; AddOne is (1 + #{T_l >= T}) / (1 + gamma),
/// which can never return an (improper) zero.
enum class Smoothing { PaperExact, AddOne };

const char* to_string(Smoothing smoothing);

struct PermutationConfig {
    long long iterations = 5000;  // gamma
    double alpha = 0.05;
    std::uint64_t seed = 0;
    Smoothing smoothing = Smoothing::PaperExact;
    int threads = 1;  // 0 = hardware concurrency; result is thread-count invariant
};

/// One per-pair outcome reshuffle: pools the kp + kq Bernoulli outcomes of
/// each slot and redraws the population-1 share as
/// X' ~ Hypergeometric(kp + kq, X + Y, kp), Y' = X + Y - X'. Counts and
/// per-slot totals are unchanged.
std::pair<PairwiseDataset, PairwiseDataset> permute_pairwise_once(const PairwiseDataset& x,
                                                                  const PairwiseDataset& y,
                                                                  rng::Stream& stream);

/// Permutation-calibrated two-sample test on pairwise data. Iteration l
/// draws from a stream derived from (seed, l), so the p-value is identical
/// for any thread count.
stat::TestReport pairwise_permutation_test(const PairwiseDataset& x, const PairwiseDataset& y,
                                           const PermutationConfig& cfg);

/// Permutation-calibrated two-sample test on ranking data: pools the
/// rankings, reassigns |S_P| of them to population 1 uniformly at random,
/// and re-breaks with fresh randomness each iteration. Valid whenever the
/// ranked subsets are drawn i.i.d. from a common subset distribution (not
/// checkable from data); sample sizes need not be equal. All randomness,
/// including the initial break, derives from cfg.seed.
stat::TestReport ranking_permutation_test(const RankingDataset& s_p, const RankingDataset& s_q,
                                          const rankbreak::RankBreaker& breaker,
                                          const PermutationConfig& cfg);

}  // namespace ranktest::perm
