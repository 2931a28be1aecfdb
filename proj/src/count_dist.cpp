#include "ranktest/count_dist.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace ranktest::gen {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

}  // namespace

CountDistribution CountDistribution::fixed(long long k) {
    if (k < 0) fail("fixed count must be non-negative");
    return {Kind::Fixed, k, 0.0, 0.0};
}

CountDistribution CountDistribution::binomial(long long n, double a) {
    if (n < 0 || !(a >= 0.0 && a <= 1.0)) fail("bad binomial parameters");
    return {Kind::Binomial, n, a, 0.0};
}

CountDistribution CountDistribution::poisson(double lambda) {
    if (!(lambda >= 0.0)) fail("poisson rate must be non-negative");
    return {Kind::Poisson, 0, 0.0, lambda};
}

CountDistribution CountDistribution::geometric(double a) {
    if (!(a > 0.0 && a <= 1.0)) fail("geometric parameter must lie in (0, 1]");
    return {Kind::Geometric, 0, a, 0.0};
}

CountDistribution CountDistribution::discrete_uniform(long long n) {
    if (n < 0) fail("uniform upper bound must be non-negative");
    return {Kind::DiscreteUniform, n, 0.0, 0.0};
}

CountDistribution CountDistribution::parse(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) fail("count distribution needs the form name:params");
    const std::string name = text.substr(0, colon);
    const std::string params = text.substr(colon + 1);
    try {
        if (name == "fixed") return fixed(std::stoll(params));
        if (name == "poisson") return poisson(std::stod(params));
        if (name == "geometric") return geometric(std::stod(params));
        if (name == "uniform") return discrete_uniform(std::stoll(params));
        if (name == "binomial") {
            const auto comma = params.find(',');
            if (comma == std::string::npos) fail("binomial needs n,a");
            return binomial(std::stoll(params.substr(0, comma)),
                            std::stod(params.substr(comma + 1)));
        }
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        fail("could not parse count distribution parameters: " + text);
    }
    fail("unknown count distribution: " + name);
}

double CountDistribution::mean() const {
    switch (kind_) {
        case Kind::Fixed: return static_cast<double>(n_);
        case Kind::Binomial: return static_cast<double>(n_) * a_;
        case Kind::Poisson: return lambda_;
        case Kind::Geometric: return 1.0 / a_;
        case Kind::DiscreteUniform: return static_cast<double>(n_) / 2.0;
    }
    return 0.0;
}

double CountDistribution::stddev() const {
    switch (kind_) {
        case Kind::Fixed: return 0.0;
        case Kind::Binomial: return std::sqrt(static_cast<double>(n_) * a_ * (1.0 - a_));
        case Kind::Poisson: return std::sqrt(lambda_);
        case Kind::Geometric: return std::sqrt(1.0 - a_) / a_;
        case Kind::DiscreteUniform: {
            const double n = static_cast<double>(n_);
            return std::sqrt(n * (n + 2.0) / 12.0);
        }
    }
    return 0.0;
}

double CountDistribution::prob_one() const {
    switch (kind_) {
        case Kind::Fixed: return n_ == 1 ? 1.0 : 0.0;
        case Kind::Binomial:
            if (n_ == 0) return 0.0;
            return static_cast<double>(n_) * a_ *
                   std::pow(1.0 - a_, static_cast<double>(n_ - 1));
        case Kind::Poisson: return lambda_ * std::exp(-lambda_);
        case Kind::Geometric: return a_;
        case Kind::DiscreteUniform: return n_ >= 1 ? 1.0 / static_cast<double>(n_ + 1) : 0.0;
    }
    return 0.0;
}

long long CountDistribution::sample(rng::Stream& stream) const {
    switch (kind_) {
        case Kind::Fixed: return n_;
        case Kind::Binomial: return stream.binomial(n_, a_);
        case Kind::Poisson: return stream.poisson(lambda_);
        case Kind::Geometric: return stream.geometric_trials(a_);
        case Kind::DiscreteUniform: return stream.uniform_int(0, n_);
    }
    return 0;
}

std::string CountDistribution::describe() const {
    std::ostringstream out;
    switch (kind_) {
        case Kind::Fixed: out << "fixed:" << n_; break;
        case Kind::Binomial: out << "binomial:" << n_ << "," << a_; break;
        case Kind::Poisson: out << "poisson:" << lambda_; break;
        case Kind::Geometric: out << "geometric:" << a_; break;
        case Kind::DiscreteUniform: out << "uniform:" << n_; break;
    }
    return out.str();
}

MomentReport moment_report(const CountDistribution& dist) {
    MomentReport report;
    report.mu = dist.mean();
    report.sigma = dist.stddev();
    report.p1 = dist.prob_one();
    const double inf = std::numeric_limits<double>::infinity();
    report.c1 = report.p1 > 0.0 ? report.mu / report.p1 : inf;
    report.c2 = report.sigma > 0.0 ? report.mu / report.sigma : inf;
    report.mean_exceeds_p1 = report.mu > report.p1;
    return report;
}

}  // namespace ranktest::gen
