#include "ranktest/types.hpp"

#include <cmath>
#include <stdexcept>

namespace ranktest {

namespace {

constexpr double kSymmetryTolerance = 1e-12;

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

}  // namespace

const char* to_string(Setting setting) {
    return setting == Setting::Symmetric ? "symmetric" : "asymmetric";
}

Epsilon::Epsilon(double v) : value(v) {
    if (!(v >= 0.0) || v > 1.0) fail("epsilon must lie in [0, 1]");
}

ProbabilityMatrix::ProbabilityMatrix(int d, Setting setting)
    : setting_(setting), entries_(d, 0.5) {
    if (d < 1) fail("probability matrix needs d >= 1");
}

ProbabilityMatrix ProbabilityMatrix::constant_half(int d, Setting setting) {
    return ProbabilityMatrix(d, setting);
}

ProbabilityMatrix ProbabilityMatrix::from_entries(int d, Setting setting,
                                                  const Grid<double>& entries) {
    if (entries.dim() != d) fail("entry grid dimension mismatch");
    ProbabilityMatrix m(d, setting);
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (i == j) continue;
            const double p = entries(i, j);
            if (!(p >= 0.0 && p <= 1.0)) fail("probability entry outside [0, 1]");
        }
    }
    if (setting == Setting::Symmetric) {
        for (int i = 0; i < d; ++i) {
            for (int j = i + 1; j < d; ++j) {
                if (std::abs(entries(j, i) - (1.0 - entries(i, j))) > kSymmetryTolerance)
                    fail("symmetric matrix violates M[j][i] = 1 - M[i][j]");
                m.set_pair(i, j, entries(i, j));
            }
        }
    } else {
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j)
                if (i != j) m.set_entry(i, j, entries(i, j));
    }
    return m;
}

void ProbabilityMatrix::check_indices(int i, int j) const {
    if (i < 0 || j < 0 || i >= dim() || j >= dim()) fail("matrix index out of range");
    if (i == j) fail("diagonal entries are fixed at 1/2");
}

void ProbabilityMatrix::set_pair(int i, int j, double p) {
    check_indices(i, j);
    if (setting_ != Setting::Symmetric) fail("set_pair requires the symmetric setting");
    if (!(p >= 0.0 && p <= 1.0)) fail("probability entry outside [0, 1]");
    entries_(i, j) = p;
    entries_(j, i) = 1.0 - p;
}

void ProbabilityMatrix::set_entry(int i, int j, double p) {
    check_indices(i, j);
    if (setting_ != Setting::Asymmetric) fail("set_entry requires the asymmetric setting");
    if (!(p >= 0.0 && p <= 1.0)) fail("probability entry outside [0, 1]");
    entries_(i, j) = p;
}

double frobenius_sq(const ProbabilityMatrix& p, const ProbabilityMatrix& q) {
    if (p.dim() != q.dim()) fail("matrix dimension mismatch");
    if (p.setting() != q.setting()) fail("matrix setting mismatch");
    double sum = 0.0;
    const int d = p.dim();
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (i == j) continue;
            const double diff = p(i, j) - q(i, j);
            sum += diff * diff;
        }
    }
    return sum;
}

Epsilon frobenius_separation(const ProbabilityMatrix& p, const ProbabilityMatrix& q) {
    return Epsilon(std::sqrt(frobenius_sq(p, q)) / p.dim());
}

PairwiseDataset::PairwiseDataset(int d, Setting setting)
    : setting_(setting), counts_(d, 0), wins_(d, 0) {
    if (d < 1) fail("pairwise dataset needs d >= 1");
}

PairwiseDataset::PairwiseDataset(Setting setting, CountGrid counts, CountGrid wins)
    : setting_(setting), counts_(std::move(counts)), wins_(std::move(wins)) {
    const int d = counts_.dim();
    if (d < 1 || wins_.dim() != d) fail("count/win grid dimension mismatch");
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            const long long k = counts_(i, j);
            const long long x = wins_(i, j);
            if (k < 0 || x < 0 || x > k) fail("win counts must satisfy 0 <= wins <= counts");
            const bool dead = i == j || (setting_ == Setting::Symmetric && j < i);
            if (dead && k != 0) fail("unused pair slot carries observations");
        }
    }
}

void PairwiseDataset::check_slot(int i, int j) const {
    const int d = dim();
    if (i < 0 || j < 0 || i >= d || j >= d) fail("pair index out of range");
    if (i == j) fail("an item cannot be compared with itself");
    if (setting_ == Setting::Symmetric && j < i) fail("symmetric data lives on i<j slots");
}

void PairwiseDataset::record(int i, int j, bool i_won) {
    check_slot(i, j);
    counts_(i, j) += 1;
    wins_(i, j) += i_won ? 1 : 0;
}

void PairwiseDataset::set_slot(int i, int j, long long count, long long wins) {
    check_slot(i, j);
    if (count < 0 || wins < 0 || wins > count) fail("invalid slot values");
    counts_(i, j) = count;
    wins_(i, j) = wins;
}

long long PairwiseDataset::total_comparisons() const {
    long long total = 0;
    for_each_slot(dim(), setting_, [&](int i, int j) { total += counts_(i, j); });
    return total;
}

PairwiseDataset aggregate(std::span<const WinRecord> observations, int d) {
    PairwiseDataset data(d, Setting::Symmetric);
    for (const auto& obs : observations) {
        if (obs.winner < 0 || obs.loser < 0 || obs.winner >= d || obs.loser >= d)
            fail("observation index out of range");
        if (obs.winner == obs.loser) fail("winner and loser must differ");
        const int lo = std::min(obs.winner, obs.loser);
        const int hi = std::max(obs.winner, obs.loser);
        data.record(lo, hi, obs.winner == lo);
    }
    return data;
}

PairwiseDataset aggregate(std::span<const OrderedWinRecord> observations, int d) {
    PairwiseDataset data(d, Setting::Asymmetric);
    for (const auto& obs : observations) {
        if (obs.context_i < 0 || obs.context_j < 0 || obs.context_i >= d || obs.context_j >= d)
            fail("observation index out of range");
        if (obs.context_i == obs.context_j) fail("context items must differ");
        data.record(obs.context_i, obs.context_j, obs.i_won);
    }
    return data;
}

PartialRanking::PartialRanking(std::vector<int> items, int d) : items_(std::move(items)) {
    if (items_.size() < 2) fail("a ranking needs at least two items");
    if (items_.size() > static_cast<std::size_t>(d)) fail("ranking longer than item count");
    std::vector<bool> seen(static_cast<std::size_t>(d), false);
    for (const int item : items_) {
        if (item < 0 || item >= d) fail("ranking item index out of range");
        if (seen[static_cast<std::size_t>(item)]) fail("duplicate item in ranking");
        seen[static_cast<std::size_t>(item)] = true;
    }
}

void RankingDataset::add(PartialRanking ranking) {
    for (const int item : ranking.items())
        if (item >= d_) throw std::invalid_argument("ranking item index out of range");
    rankings_.push_back(std::move(ranking));
}

}  // namespace ranktest
