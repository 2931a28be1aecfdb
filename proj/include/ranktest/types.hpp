#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ranktest {

/// Whether "i vs j" and "j vs i" denote the same comparison.
///
/// Symmetric: probabilities satisfy M[j][i] = 1 - M[i][j] and data lives on
/// i<j slots only. Asymmetric: every ordered pair (i,j), i != j, is an
/// independent slot (e.g. home vs visiting team).
enum class Setting { Symmetric, Asymmetric };

const char* to_string(Setting setting);

/// Dense d x d storage, row-major.
template <typename T>
class Grid {
public:
    Grid() = default;
    explicit Grid(int d, T init = T{}) : d_(d), cells_(static_cast<std::size_t>(d) * d, init) {}

    int dim() const { return d_; }
    T& operator()(int i, int j) { return cells_[static_cast<std::size_t>(i) * d_ + j]; }
    const T& operator()(int i, int j) const {
        return cells_[static_cast<std::size_t>(i) * d_ + j];
    }
    bool operator==(const Grid&) const = default;

private:
    int d_ = 0;
    std::vector<T> cells_;
};

using CountGrid = Grid<long long>;

/// Invokes fn(i, j) over the canonical pair slots for a setting:
/// i<j row-major when symmetric, all ordered i!=j row-major otherwise.
template <typename F>
void for_each_slot(int d, Setting setting, F&& fn) {
    for (int i = 0; i < d; ++i) {
        const int j0 = setting == Setting::Symmetric ? i + 1 : 0;
        for (int j = j0; j < d; ++j) {
            if (i != j) fn(i, j);
        }
    }
}

inline long long slot_count(int d, Setting setting) {
    const long long n = d;
    return setting == Setting::Symmetric ? n * (n - 1) / 2 : n * (n - 1);
}

/// Scaled Frobenius separation (1/d)*||P - Q||_F, always in [0, 1].
struct Epsilon {
    double value = 0.0;

    Epsilon() = default;
    explicit Epsilon(double v);
};

/// A d x d win-probability matrix. Every entry lies in [0, 1] and the
/// diagonal is fixed at 1/2. In the symmetric setting opposite entries are
/// complementary by construction: set_pair writes both triangles at once.
class ProbabilityMatrix {
public:
    ProbabilityMatrix(int d, Setting setting);

    static ProbabilityMatrix constant_half(int d, Setting setting);
    /// Validates the full set of invariants (entries in range; symmetric
    /// complements within 1e-12) before accepting external data.
    static ProbabilityMatrix from_entries(int d, Setting setting, const Grid<double>& entries);

    int dim() const { return entries_.dim(); }
    Setting setting() const { return setting_; }
    double operator()(int i, int j) const { return entries_(i, j); }

    /// Symmetric only: stores p at (i,j) and 1-p at (j,i) exactly.
    void set_pair(int i, int j, double p);
    /// Asymmetric only: stores p at the ordered slot (i,j).
    void set_entry(int i, int j, double p);

    bool operator==(const ProbabilityMatrix&) const = default;

private:
    void check_indices(int i, int j) const;

    Setting setting_;
    Grid<double> entries_;
};

Epsilon frobenius_separation(const ProbabilityMatrix& p, const ProbabilityMatrix& q);

/// Squared full-matrix Frobenius distance, sum over all ordered i != j.
double frobenius_sq(const ProbabilityMatrix& p, const ProbabilityMatrix& q);

/// Per-pair trial counts k_ij and win counts x_ij for one population.
/// Symmetric data occupies i<j slots only; diagonal and (symmetric) lower
/// triangle stay zero. wins <= counts everywhere.
class PairwiseDataset {
public:
    PairwiseDataset(int d, Setting setting);
    PairwiseDataset(Setting setting, CountGrid counts, CountGrid wins);

    int dim() const { return counts_.dim(); }
    Setting setting() const { return setting_; }
    long long count(int i, int j) const { return counts_(i, j); }
    long long wins(int i, int j) const { return wins_(i, j); }
    const CountGrid& counts() const { return counts_; }
    const CountGrid& win_grid() const { return wins_; }

    /// Total comparisons over all slots.
    long long total_comparisons() const;

    /// Records one comparison outcome on a slot (construction phase).
    void record(int i, int j, bool i_won);
    /// Overwrites a slot (used by the permutation engine).
    void set_slot(int i, int j, long long count, long long wins);

    bool operator==(const PairwiseDataset&) const = default;

private:
    void check_slot(int i, int j) const;

    Setting setting_;
    CountGrid counts_;
    CountGrid wins_;
};

/// One observed comparison: `winner` beat `loser`. Symmetric-setting input.
struct WinRecord {
    int winner = 0;
    int loser = 0;
};

/// One observed comparison in an ordered context (i, j): item i won iff
/// i_won. Asymmetric-setting input.
struct OrderedWinRecord {
    int context_i = 0;
    int context_j = 0;
    bool i_won = true;
};

PairwiseDataset aggregate(std::span<const WinRecord> observations, int d);
PairwiseDataset aggregate(std::span<const OrderedWinRecord> observations, int d);

/// A total ranking over a subset of items, best first. No duplicates,
/// length in [2, d], all indices in [0, d).
class PartialRanking {
public:
    PartialRanking(std::vector<int> items, int d);

    std::size_t size() const { return items_.size(); }
    int operator[](std::size_t pos) const { return items_[pos]; }
    const std::vector<int>& items() const { return items_; }

    bool operator==(const PartialRanking&) const = default;

private:
    std::vector<int> items_;
};

/// A multiset of partial rankings over the same d items.
class RankingDataset {
public:
    explicit RankingDataset(int d) : d_(d) {}

    int dim() const { return d_; }
    std::size_t size() const { return rankings_.size(); }
    const PartialRanking& operator[](std::size_t pos) const { return rankings_[pos]; }
    const std::vector<PartialRanking>& rankings() const { return rankings_; }

    void add(PartialRanking ranking);
    void add(std::vector<int> items) { add(PartialRanking(std::move(items), d_)); }

    bool operator==(const RankingDataset&) const = default;

private:
    int d_ = 0;
    std::vector<PartialRanking> rankings_;
};

}  // namespace ranktest
