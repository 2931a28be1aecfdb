#include "ranktest/permutation.hpp"

#include <atomic>
#include <stdexcept>
#include <vector>

#include "ranktest/parallel.hpp"

namespace ranktest::perm {

namespace {

constexpr std::uint64_t kPairwiseTag = 0x70616972ULL;
constexpr std::uint64_t kRankingTag = 0x72616e6bULL;

void check_config(const PermutationConfig& cfg) {
    if (cfg.iterations < 1) throw std::invalid_argument("iteration count must be >= 1");
    if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0))
        throw std::invalid_argument("alpha must lie in (0, 1)");
}

stat::TestReport assemble_report(const stat::StatisticValue& observed, long long exceed,
                                 const PermutationConfig& cfg) {
    double p;
    if (cfg.smoothing == Smoothing::PaperExact) {
        p = static_cast<double>(exceed) / static_cast<double>(cfg.iterations);
    } else {
        p = static_cast<double>(1 + exceed) / static_cast<double>(1 + cfg.iterations);
    }
    stat::TestReport report;
    report.statistic = observed;
    report.p_value = p;
    report.reject = p < cfg.alpha;
    report.seed = cfg.seed;
    report.iterations = cfg.iterations;
    return report;
}

}  // namespace

const char* to_string(Smoothing smoothing) {
    return smoothing == Smoothing::PaperExact ? "paper-exact" : "add-one";
}

std::pair<PairwiseDataset, PairwiseDataset> permute_pairwise_once(const PairwiseDataset& x,
                                                                  const PairwiseDataset& y,
                                                                  rng::Stream& stream) {
    if (x.dim() != y.dim() || x.setting() != y.setting())
        throw std::invalid_argument("dataset shape mismatch");
    PairwiseDataset xp = x;
    PairwiseDataset yp = y;
    for_each_slot(x.dim(), x.setting(), [&](int i, int j) {
        const long long kp = x.count(i, j);
        const long long kq = y.count(i, j);
        const long long successes = x.wins(i, j) + y.wins(i, j);
        if (kp + kq == 0) return;
        const long long new_x = stream.hypergeometric(kp + kq, successes, kp);
        xp.set_slot(i, j, kp, new_x);
        yp.set_slot(i, j, kq, successes - new_x);
    });
    return {std::move(xp), std::move(yp)};
}

stat::TestReport pairwise_permutation_test(const PairwiseDataset& x, const PairwiseDataset& y,
                                           const PermutationConfig& cfg) {
    check_config(cfg);
    const stat::StatisticValue observed = stat::statistic(x, y);
    std::atomic<long long> exceed{0};
    detail::parallel_for(cfg.iterations, cfg.threads, [&](long long iter) {
        rng::Stream stream(rng::derive(cfg.seed, kPairwiseTag, static_cast<std::uint64_t>(iter)));
        const auto [xp, yp] = permute_pairwise_once(x, y, stream);
        if (stat::statistic(xp, yp).value >= observed.value) exceed.fetch_add(1);
    });
    return assemble_report(observed, exceed.load(), cfg);
}

stat::TestReport ranking_permutation_test(const RankingDataset& s_p, const RankingDataset& s_q,
                                          const rankbreak::RankBreaker& breaker,
                                          const PermutationConfig& cfg) {
    check_config(cfg);
    if (s_p.dim() != s_q.dim()) throw std::invalid_argument("ranking dimension mismatch");
    if (s_p.size() == 0 || s_q.size() == 0)
        throw std::invalid_argument("both populations need at least one ranking");

    const int d = s_p.dim();
    const auto break_population = [&](const RankingDataset& data, std::uint64_t iter,
                                      std::uint64_t population) {
        return rankbreak::break_rankings(
            breaker.method, data, rng::derive(cfg.seed, kRankingTag, iter, population));
    };
    const stat::StatisticValue observed =
        stat::statistic(break_population(s_p, 0, 1), break_population(s_q, 0, 2));

    std::vector<const PartialRanking*> pooled;
    pooled.reserve(s_p.size() + s_q.size());
    for (const auto& r : s_p.rankings()) pooled.push_back(&r);
    for (const auto& r : s_q.rankings()) pooled.push_back(&r);
    const std::size_t n_p = s_p.size();

    std::atomic<long long> exceed{0};
    detail::parallel_for(cfg.iterations, cfg.threads, [&](long long iter0) {
        const auto iter = static_cast<std::uint64_t>(iter0 + 1);
        rng::Stream stream(rng::derive(cfg.seed, kRankingTag, iter));
        std::vector<std::size_t> order(pooled.size());
        for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
        stream.shuffle(order.begin(), order.end());
        RankingDataset shuffled_p(d);
        RankingDataset shuffled_q(d);
        for (std::size_t i = 0; i < order.size(); ++i) {
            (i < n_p ? shuffled_p : shuffled_q).add(*pooled[order[i]]);
        }
        const auto t = stat::statistic(break_population(shuffled_p, iter, 1),
                                       break_population(shuffled_q, iter, 2));
        if (t.value >= observed.value) exceed.fetch_add(1);
    });
    return assemble_report(observed, exceed.load(), cfg);
}

}  // namespace ranktest::perm
