#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ranktest/types.hpp"

namespace ranktest::stat {

/// Value of the two-sample statistic T plus the number of pair slots whose
/// indicator was active (both populations saw the pair more than once).
struct StatisticValue {
    double value = 0.0;
    long long active_pairs = 0;
};

struct FixedTestConfig {
    double nu = 1.0 / 3.0;                    // total-error target
    std::optional<double> threshold_override;  // wins over everything else
    bool paper_exact = false;                  // use the rounded 11*d rule
};

/// Outcome of one test run. Exactly one of threshold / p_value is set and
/// drives `reject`; seed and iterations are recorded for permutation runs.
struct TestReport {
    StatisticValue statistic;
    std::optional<double> threshold;
    std::optional<double> p_value;
    bool reject = false;
    std::optional<std::uint64_t> seed;
    std::optional<long long> iterations;
};

/**
 * The two-sample statistic
 *
 *   T = sum over pair slots of
 *       I_ij * [kq(kq-1)(X^2-X) + kp(kp-1)(Y^2-Y) - 2(kp-1)(kq-1)XY]
 *            / [(kp-1)(kq-1)(kp+kq)]
 *
 * with I_ij = 1(kp > 1) * 1(kq > 1). Zero-mean under P = Q for any counts.
 * Accumulated with pairwise tree summation in a fixed slot order, so the
 * result is bit-stable for a given input.
 */
StatisticValue statistic(const PairwiseDataset& x, const PairwiseDataset& y);

/// Decision threshold d * sqrt(24 (2 - nu) / nu); nu = 1/3 gives the
/// familiar ~11d rule (20 items: 219.09 vs the rounded 220).
double threshold(int d, double nu);

TestReport fixed_test(const PairwiseDataset& x, const PairwiseDataset& y,
                      const FixedTestConfig& cfg = {});

/// Majority vote over R independent dataset slices; error decays
/// exponentially in R at linear sample cost.
struct DatasetPair {
    PairwiseDataset x;
    PairwiseDataset y;
};
TestReport majority_fixed_test(std::span<const DatasetPair> slices,
                               const FixedTestConfig& cfg = {});

/// Exact E[T | counts] = sum I_ij kp*kq/(kp+kq) (p_ij - q_ij)^2.
double oracle_conditional_mean(const ProbabilityMatrix& p, const ProbabilityMatrix& q,
                               const CountGrid& counts_p, const CountGrid& counts_q);

/// Variance upper bound: 24 d^2 under the null; under the alternate the
/// fixed-design bound 24 d^2 + 4 k ||P-Q||_F^2 (requires all slots to share
/// one count k).
double oracle_variance_bound(const ProbabilityMatrix& p, const ProbabilityMatrix& q,
                             const CountGrid& counts_p, const CountGrid& counts_q,
                             bool under_null);

/// Deterministic pairwise (tree) summation; exposed for reuse in tests.
double tree_sum(std::span<const double> terms);

}  // namespace ranktest::stat
