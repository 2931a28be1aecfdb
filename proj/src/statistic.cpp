#include "ranktest/statistic.hpp"

#include <cmath>
#include <stdexcept>

namespace ranktest::stat {

namespace {

void check_aligned(const PairwiseDataset& x, const PairwiseDataset& y) {
    if (x.dim() != y.dim()) throw std::invalid_argument("dataset dimension mismatch");
    if (x.setting() != y.setting()) throw std::invalid_argument("dataset setting mismatch");
}

void check_aligned(const ProbabilityMatrix& p, const ProbabilityMatrix& q,
                   const CountGrid& counts_p, const CountGrid& counts_q) {
    if (p.dim() != q.dim() || p.setting() != q.setting())
        throw std::invalid_argument("matrix shape mismatch");
    if (counts_p.dim() != p.dim() || counts_q.dim() != p.dim())
        throw std::invalid_argument("count grid shape mismatch");
}

double tree_sum_range(std::span<const double> terms, std::size_t lo, std::size_t hi) {
    if (hi - lo <= 8) {
        double s = 0.0;
        for (std::size_t i = lo; i < hi; ++i) s += terms[i];
        return s;
    }
    const std::size_t mid = lo + (hi - lo) / 2;
    return tree_sum_range(terms, lo, mid) + tree_sum_range(terms, mid, hi);
}

}  // namespace

double tree_sum(std::span<const double> terms) {
    return terms.empty() ? 0.0 : tree_sum_range(terms, 0, terms.size());
}

StatisticValue statistic(const PairwiseDataset& x, const PairwiseDataset& y) {
    check_aligned(x, y);
    std::vector<double> terms;
    terms.reserve(static_cast<std::size_t>(slot_count(x.dim(), x.setting())));
    long long active = 0;
    for_each_slot(x.dim(), x.setting(), [&](int i, int j) {
        const double kp = static_cast<double>(x.count(i, j));
        const double kq = static_cast<double>(y.count(i, j));
        if (kp <= 1.0 || kq <= 1.0) return;
        const double xv = static_cast<double>(x.wins(i, j));
        const double yv = static_cast<double>(y.wins(i, j));
        const double numerator = kq * (kq - 1.0) * (xv * xv - xv) +
                                 kp * (kp - 1.0) * (yv * yv - yv) -
                                 2.0 * (kp - 1.0) * (kq - 1.0) * xv * yv;
        const double denominator = (kp - 1.0) * (kq - 1.0) * (kp + kq);
        terms.push_back(numerator / denominator);
        ++active;
    });
    return {tree_sum(terms), active};
}

double threshold(int d, double nu) {
    if (d < 1) throw std::invalid_argument("threshold needs d >= 1");
    if (!(nu > 0.0 && nu < 1.0)) throw std::invalid_argument("nu must lie in (0, 1)");
    return d * std::sqrt(24.0 * (2.0 - nu) / nu);
}

TestReport fixed_test(const PairwiseDataset& x, const PairwiseDataset& y,
                      const FixedTestConfig& cfg) {
    const StatisticValue t = statistic(x, y);
    double cut;
    if (cfg.threshold_override) {
        cut = *cfg.threshold_override;
    } else if (cfg.paper_exact) {
        cut = 11.0 * x.dim();
    } else {
        cut = threshold(x.dim(), cfg.nu);
    }
    TestReport report;
    report.statistic = t;
    report.threshold = cut;
    report.reject = t.value >= cut;
    return report;
}

TestReport majority_fixed_test(std::span<const DatasetPair> slices,
                               const FixedTestConfig& cfg) {
    if (slices.empty()) throw std::invalid_argument("majority vote needs at least one slice");
    long long votes = 0;
    TestReport last;
    for (const auto& slice : slices) {
        last = fixed_test(slice.x, slice.y, cfg);
        votes += last.reject ? 1 : 0;
    }
    TestReport report = last;
    report.reject = 2 * votes > static_cast<long long>(slices.size());
    return report;
}

double oracle_conditional_mean(const ProbabilityMatrix& p, const ProbabilityMatrix& q,
                               const CountGrid& counts_p, const CountGrid& counts_q) {
    check_aligned(p, q, counts_p, counts_q);
    std::vector<double> terms;
    for_each_slot(p.dim(), p.setting(), [&](int i, int j) {
        const long long kp = counts_p(i, j);
        const long long kq = counts_q(i, j);
        if (kp <= 1 || kq <= 1) return;
        const double diff = p(i, j) - q(i, j);
        terms.push_back(static_cast<double>(kp) * static_cast<double>(kq) /
                        static_cast<double>(kp + kq) * diff * diff);
    });
    return tree_sum(terms);
}

double oracle_variance_bound(const ProbabilityMatrix& p, const ProbabilityMatrix& q,
                             const CountGrid& counts_p, const CountGrid& counts_q,
                             bool under_null) {
    check_aligned(p, q, counts_p, counts_q);
    const double d = static_cast<double>(p.dim());
    if (under_null) return 24.0 * d * d;

    long long k = -1;
    bool uniform = true;
    for_each_slot(p.dim(), p.setting(), [&](int i, int j) {
        const long long kp = counts_p(i, j);
        const long long kq = counts_q(i, j);
        if (k < 0) k = kp;
        if (kp != k || kq != k) uniform = false;
    });
    if (!uniform || k < 0)
        throw std::invalid_argument(
            "alternate-hypothesis variance bound requires a fixed per-pair design");
    return 24.0 * d * d + 4.0 * static_cast<double>(k) * frobenius_sq(p, q);
}

}  // namespace ranktest::stat
