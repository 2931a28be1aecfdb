#include "ranktest/rank_breaking.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ranktest/rng.hpp"

namespace ranktest::rankbreak {

namespace {

constexpr std::uint64_t kMatchingTag = 0x6d61746368ULL;  // per-ranking matchings
constexpr std::uint64_t kDiscardTag = 0x64697363ULL;     // R_D discard step

void record_ordered(PairwiseDataset& data, int winner, int loser) {
    const int lo = std::min(winner, loser);
    const int hi = std::max(winner, loser);
    data.record(lo, hi, winner == lo);
}

}  // namespace

const char* to_string(Method method) {
    switch (method) {
        case Method::RandomDisjoint: return "random-disjoint";
        case Method::DeterministicDisjoint: return "deterministic-disjoint";
        case Method::Complete: return "complete";
    }
    return "?";
}

Method method_from_string(const std::string& name) {
    if (name == "random-disjoint") return Method::RandomDisjoint;
    if (name == "deterministic-disjoint") return Method::DeterministicDisjoint;
    if (name == "complete") return Method::Complete;
    throw std::invalid_argument("unknown rank-breaking method: " + name);
}

PairwiseDataset RankBreaker::apply(const RankingDataset& rankings) const {
    return break_rankings(method, rankings, seed);
}

RoundRobinSchedule round_robin(int d) {
    if (d < 2) throw std::invalid_argument("round robin needs d >= 2");
    const bool odd = d % 2 != 0;
    const int n = odd ? d + 1 : d;  // phantom item n-1 gives byes when odd
    RoundRobinSchedule schedule;
    schedule.d = d;
    schedule.rounds.reserve(static_cast<std::size_t>(n - 1));
    for (int r = 0; r < n - 1; ++r) {
        std::vector<std::pair<int, int>> round;
        round.reserve(static_cast<std::size_t>(n / 2));
        auto rotated = [&](int pos) { return (r + pos) % (n - 1); };
        // When d is odd the fixed item n-1 is the phantom: whoever rotates
        // into position 0 sits that round out.
        if (!odd) round.emplace_back(rotated(0), n - 1);
        for (int i = 1; i < n / 2; ++i) round.emplace_back(rotated(i), rotated(n - 1 - i));
        schedule.rounds.push_back(std::move(round));
    }
    return schedule;
}

PairwiseDataset break_random_disjoint(const RankingDataset& rankings, std::uint64_t seed) {
    PairwiseDataset data(rankings.dim(), Setting::Symmetric);
    std::vector<int> positions;
    for (std::size_t idx = 0; idx < rankings.size(); ++idx) {
        const PartialRanking& ranking = rankings[idx];
        const int m = static_cast<int>(ranking.size());
        positions.resize(static_cast<std::size_t>(m));
        std::iota(positions.begin(), positions.end(), 0);
        rng::Stream stream(rng::derive(seed, kMatchingTag, idx));
        stream.shuffle(positions.begin(), positions.end());
        for (int pair = 0; pair + 1 < m; pair += 2) {
            const int pos_a = positions[static_cast<std::size_t>(pair)];
            const int pos_b = positions[static_cast<std::size_t>(pair + 1)];
            const int winner = ranking[static_cast<std::size_t>(std::min(pos_a, pos_b))];
            const int loser = ranking[static_cast<std::size_t>(std::max(pos_a, pos_b))];
            record_ordered(data, winner, loser);
        }
    }
    return data;
}

PairwiseDataset break_deterministic_disjoint(const RankingDataset& rankings,
                                             std::uint64_t seed) {
    const int d = rankings.dim();
    const long long n = static_cast<long long>(rankings.size());
    if (n < d) throw std::invalid_argument("deterministic breaking needs at least d rankings");
    for (std::size_t idx = 0; idx < rankings.size(); ++idx)
        if (static_cast<int>(rankings[idx].size()) != d)
            throw std::invalid_argument("deterministic breaking needs total rankings");

    // Discard N mod d rankings chosen uniformly at random, keep input order.
    std::vector<std::size_t> kept(rankings.size());
    std::iota(kept.begin(), kept.end(), std::size_t{0});
    const long long discard = n % d;
    if (discard > 0) {
        rng::Stream stream(rng::derive(seed, kDiscardTag));
        std::vector<std::size_t> order = kept;
        stream.shuffle(order.begin(), order.end());
        order.resize(static_cast<std::size_t>(discard));
        std::sort(order.begin(), order.end());
        std::vector<std::size_t> filtered;
        filtered.reserve(kept.size() - order.size());
        std::size_t next_drop = 0;
        for (std::size_t idx : kept) {
            if (next_drop < order.size() && order[next_drop] == idx) {
                ++next_drop;
            } else {
                filtered.push_back(idx);
            }
        }
        kept = std::move(filtered);
    }

    const RoundRobinSchedule schedule = round_robin(d);
    PairwiseDataset data(d, Setting::Symmetric);
    std::vector<int> rank_of(static_cast<std::size_t>(d));
    const std::size_t groups = kept.size() / static_cast<std::size_t>(d);
    for (std::size_t g = 0; g < groups; ++g) {
        for (std::size_t r = 0; r < schedule.rounds.size(); ++r) {
            const PartialRanking& ranking = rankings[kept[g * static_cast<std::size_t>(d) + r]];
            for (std::size_t pos = 0; pos < ranking.size(); ++pos)
                rank_of[static_cast<std::size_t>(ranking[pos])] = static_cast<int>(pos);
            for (const auto& [a, b] : schedule.rounds[r]) {
                const bool a_wins = rank_of[static_cast<std::size_t>(a)] <
                                    rank_of[static_cast<std::size_t>(b)];
                record_ordered(data, a_wins ? a : b, a_wins ? b : a);
            }
        }
    }
    return data;
}

PairwiseDataset break_complete(const RankingDataset& rankings) {
    PairwiseDataset data(rankings.dim(), Setting::Symmetric);
    for (std::size_t idx = 0; idx < rankings.size(); ++idx) {
        const PartialRanking& ranking = rankings[idx];
        for (std::size_t a = 0; a < ranking.size(); ++a)
            for (std::size_t b = a + 1; b < ranking.size(); ++b)
                record_ordered(data, ranking[a], ranking[b]);
    }
    return data;
}

PairwiseDataset break_rankings(Method method, const RankingDataset& rankings,
                               std::uint64_t seed) {
    switch (method) {
        case Method::RandomDisjoint: return break_random_disjoint(rankings, seed);
        case Method::DeterministicDisjoint: return break_deterministic_disjoint(rankings, seed);
        case Method::Complete: return break_complete(rankings);
    }
    throw std::logic_error("unreachable");
}

}  // namespace ranktest::rankbreak
