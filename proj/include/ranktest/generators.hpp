#pragma once

#include <vector>

#include "ranktest/count_dist.hpp"
#include "ranktest/link.hpp"
#include "ranktest/rng.hpp"
#include "ranktest/types.hpp"

namespace ranktest::gen {

struct MatrixPair {
    ProbabilityMatrix p;
    ProbabilityMatrix q;
};

/// Model-free pair at exact separation epsilon: P is all-half and
/// Q = P + Delta with Delta an isotropic Gaussian direction over the free
/// slots scaled to ||Delta||_F = epsilon * d, rejection-sampled against the
/// [0,1] box (symmetric setting forces Delta[j][i] = -Delta[i][j]).
/// Throws if the rejection cap (1e6) is hit, i.e. epsilon too large for d.
MatrixPair gen_model_free(int d, Epsilon epsilon, Setting setting, rng::Stream& stream);

struct ParameterBasedPair {
    ProbabilityMatrix p;
    ProbabilityMatrix q;
    std::vector<double> weights_q;
    double delta = 0.0;  // weight offset actually used
    double eta = 0.0;    // f(2 delta) - 1/2
};

/// Parameter-based pair: P from the all-zero weight vector, Q from a
/// uniformly random half/half assignment of +-delta (odd d keeps one zero
/// weight), with delta solved so the separation is exactly epsilon.
/// Even d has the closed form eta = epsilon * sqrt(2); odd d solves the
/// norm equation by bisection to 1e-12.
ParameterBasedPair gen_parameter_based(int d, Epsilon epsilon, const LinkFunction& link,
                                       rng::Stream& stream);

/// SST staircase pair: C(d,2) uniform draws sorted descending and assigned
/// antidiagonally (ascending i-j, ties by ascending i), which makes the
/// perturbation nonincreasing down columns and nondecreasing along rows,
/// then scaled to separation epsilon. SST-valid under the identity order.
MatrixPair gen_sst(int d, Epsilon epsilon, rng::Stream& stream);

/// One matrix from the MST lower-bound family: all-half except a random
/// permutation pattern of (1/2 + eta) in the upper-right quadrant (d even).
/// Against the all-half companion, separation is eta / sqrt(d).
ProbabilityMatrix gen_mst_theta(int d, double eta, rng::Stream& stream);

/// Planted-clique SST matrix: all-half with a kappa x kappa all-ones block
/// on a shared random index set of the upper-right quadrant (d even,
/// kappa <= d/2). Separation squared is kappa^2 / (2 d^2).
ProbabilityMatrix gen_planted_clique_sst(int d, int kappa, rng::Stream& stream);

/// I.i.d. per-slot counts from the distribution (Fixed(k) fills k).
CountGrid sample_counts(const CountDistribution& dist, int d, Setting setting,
                        rng::Stream& stream);

/// Independent binomial outcomes per slot: wins ~ Bin(counts, m_ij).
PairwiseDataset sample_comparisons(const ProbabilityMatrix& m, const CountGrid& counts,
                                   rng::Stream& stream);

}  // namespace ranktest::gen
