#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ranktest/types.hpp"

namespace ranktest::rankbreak {

enum class Method { RandomDisjoint, DeterministicDisjoint, Complete };

const char* to_string(Method method);
Method method_from_string(const std::string& name);

/// A rank-breaking recipe plus the seed feeding its randomness (used by
/// RandomDisjoint matchings and DeterministicDisjoint's discard step).
struct RankBreaker {
    Method method = Method::Complete;
    std::uint64_t seed = 0;

    PairwiseDataset apply(const RankingDataset& rankings) const;
};

/// Circle-method round-robin schedule: rounds of disjoint pairs whose
/// union covers every unordered pair of [d] exactly once. d-1 rounds for
/// even d, d rounds (one bye per item) for odd d.
struct RoundRobinSchedule {
    int d = 0;
    std::vector<std::vector<std::pair<int, int>>> rounds;
};

RoundRobinSchedule round_robin(int d);

/// Pairs up each ranking's items with a uniformly random perfect matching
/// (odd leftover dropped), the higher-ranked item winning. Gives floor(m/2)
/// comparisons per m-length ranking. Per-ranking randomness derives from
/// (seed, ranking index), so results do not depend on traversal order.
PairwiseDataset break_random_disjoint(const RankingDataset& rankings, std::uint64_t seed);

/// Needs total rankings with |S| >= d. Discards N mod d rankings at random,
/// then partitions the rest into groups of d; ranking r of a group realizes
/// round r of the round-robin schedule. Every unordered pair ends up with
/// exactly floor(N/d) comparisons.
PairwiseDataset break_deterministic_disjoint(const RankingDataset& rankings,
                                             std::uint64_t seed);

/// Emits all C(m, 2) implied comparisons per ranking; deterministic.
PairwiseDataset break_complete(const RankingDataset& rankings);

PairwiseDataset break_rankings(Method method, const RankingDataset& rankings,
                               std::uint64_t seed);

}  // namespace ranktest::rankbreak
