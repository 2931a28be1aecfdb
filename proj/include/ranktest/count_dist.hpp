#pragma once

#include <string>

#include "ranktest/rng.hpp"

namespace ranktest::gen {

/// Random-design distribution for per-pair sample counts, supported on
/// non-negative integers, with closed-form moments (mu, sigma, p1).
/// Geometric counts trials until the first success, support {1, 2, ...}.
class CountDistribution {
public:
    enum class Kind { Fixed, Binomial, Poisson, Geometric, DiscreteUniform };

    static CountDistribution fixed(long long k);
    static CountDistribution binomial(long long n, double a);
    static CountDistribution poisson(double lambda);
    static CountDistribution geometric(double a);
    static CountDistribution discrete_uniform(long long n);  // Unif{0,...,n}

    /// Parses "fixed:5", "binomial:8,0.5", "poisson:4", "geometric:0.25",
    /// "uniform:6".
    static CountDistribution parse(const std::string& text);

    Kind kind() const { return kind_; }
    double mean() const;
    double stddev() const;
    /// p1 = Pr(Z = 1).
    double prob_one() const;
    long long sample(rng::Stream& stream) const;
    std::string describe() const;

private:
    CountDistribution(Kind kind, long long n, double a, double lambda)
        : kind_(kind), n_(n), a_(a), lambda_(lambda) {}

    Kind kind_;
    long long n_;    // Fixed k / Binomial n / DiscreteUniform upper bound
    double a_;       // Binomial or Geometric success probability
    double lambda_;  // Poisson rate
};

/// Moment-condition report for the random-design assumptions mu >= c1 p1,
/// mu >= c2 sigma. Informational: degenerate designs (mu <= p1, i.e. at
/// most one comparison per pair) make two-sample testing impossible, but
/// nothing here enforces that.
struct MomentReport {
    double mu = 0.0;
    double sigma = 0.0;
    double p1 = 0.0;
    double c1 = 0.0;  // mu / p1 (infinity when p1 = 0)
    double c2 = 0.0;  // mu / sigma (infinity when sigma = 0)
    bool mean_exceeds_p1 = false;
};

MomentReport moment_report(const CountDistribution& dist);

}  // namespace ranktest::gen
