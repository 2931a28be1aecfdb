#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "ranktest/generators.hpp"
#include "ranktest/plackett_luce.hpp"
#include "ranktest/validate.hpp"

using namespace ranktest;

TEST_CASE("model-free generator hits the requested separation") {
    rng::Stream stream(2);
    for (const auto setting : {Setting::Symmetric, Setting::Asymmetric}) {
        for (const double eps : {0.0, 0.01, 0.05, 0.2}) {
            const auto [p, q] = gen::gen_model_free(8, Epsilon(eps), setting, stream);
            CHECK(frobenius_separation(p, q).value == doctest::Approx(eps).epsilon(1e-9));
            CHECK(validate_model(q, ModelClass::Any).ok);
            if (eps == 0.0) CHECK(p == q);
            if (setting == Setting::Symmetric) {
                for (int i = 0; i < 8; ++i)
                    for (int j = i + 1; j < 8; ++j) CHECK(q(i, j) + q(j, i) == 1.0);
            }
        }
    }
}

TEST_CASE("model-free generator reports infeasible separations") {
    rng::Stream stream(3);
    // d=2 symmetric has one free slot: |delta| = eps*d/sqrt(2) = 0.42 > 1/2
    // is impossible once eps crosses sqrt(2)/4.
    CHECK_THROWS_AS(gen::gen_model_free(2, Epsilon(0.4), Setting::Symmetric, stream),
                    std::runtime_error);
}

TEST_CASE("parameter-based generator closed form for BTL") {
    rng::Stream stream(5);
    const auto pair = gen::gen_parameter_based(10, Epsilon(0.05), LinkFunction::btl(), stream);
    CHECK(pair.eta == doctest::Approx(0.05 * std::sqrt(2.0)).epsilon(1e-12));
    // 0.5 * ln((0.5 + eta) / (0.5 - eta)) evaluated independently
    CHECK(pair.delta == doctest::Approx(0.14237564316780443).epsilon(1e-12));
    CHECK(frobenius_separation(pair.p, pair.q).value == doctest::Approx(0.05).epsilon(1e-9));
    CHECK(validate_model(pair.q, LinkFunction::btl(), pair.weights_q).ok);
    CHECK(validate_model(pair.q, ModelClass::SST).ok);  // BTL sits inside SST
}

TEST_CASE("parameter-based generator handles Thurstone and odd d") {
    rng::Stream stream(7);
    SUBCASE("thurstone even d") {
        const auto pair =
            gen::gen_parameter_based(6, Epsilon(0.08), LinkFunction::thurstone(), stream);
        CHECK(frobenius_separation(pair.p, pair.q).value ==
              doctest::Approx(0.08).epsilon(1e-9));
        CHECK(validate_model(pair.q, LinkFunction::thurstone(), pair.weights_q).ok);
    }
    SUBCASE("odd d solves the norm equation") {
        const auto pair =
            gen::gen_parameter_based(7, Epsilon(0.06), LinkFunction::btl(), stream);
        CHECK(frobenius_separation(pair.p, pair.q).value ==
              doctest::Approx(0.06).epsilon(1e-9));
        CHECK(validate_model(pair.q, LinkFunction::btl(), pair.weights_q).ok);
        double sum = 0.0;
        for (const double w : pair.weights_q) sum += w;
        CHECK(sum == doctest::Approx(0.0).epsilon(1e-12));
    }
    SUBCASE("zero offset gives the null pair") {
        const auto pair =
            gen::gen_parameter_based(6, Epsilon(0.0), LinkFunction::btl(), stream);
        CHECK(pair.p == pair.q);
        CHECK(pair.delta == 0.0);
    }
    SUBCASE("eta out of range") {
        CHECK_THROWS_AS(
            gen::gen_parameter_based(6, Epsilon(0.4), LinkFunction::btl(), stream),
            std::domain_error);
    }
}

TEST_CASE("SST staircase output is SST under the identity ordering") {
    rng::Stream stream(11);
    for (int rep = 0; rep < 10; ++rep) {
        const auto [p, q] = gen::gen_sst(7, Epsilon(0.05), stream);
        std::vector<int> identity{0, 1, 2, 3, 4, 5, 6};
        CHECK(validate_model(q, ModelClass::SST, identity).ok);
        CHECK(frobenius_separation(p, q).value == doctest::Approx(0.05).epsilon(1e-9));
    }
    const auto [p0, q0] = gen::gen_sst(5, Epsilon(0.0), stream);
    CHECK(p0 == q0);
}

TEST_CASE("MST theta construction") {
    rng::Stream stream(13);
    for (int rep = 0; rep < 10; ++rep) {
        const auto q = gen::gen_mst_theta(8, 0.2, stream);
        std::vector<int> identity{0, 1, 2, 3, 4, 5, 6, 7};
        CHECK(validate_model(q, ModelClass::MST, identity).ok);
        CHECK(validate_model(q, ModelClass::WST, identity).ok);
        const auto p = ProbabilityMatrix::constant_half(8, Setting::Symmetric);
        CHECK(frobenius_separation(p, q).value ==
              doctest::Approx(0.2 / std::sqrt(8.0)).epsilon(1e-12));
        // exactly one perturbed entry per quadrant row and column
        for (int r = 0; r < 4; ++r) {
            int row_hits = 0, col_hits = 0;
            for (int c = 4; c < 8; ++c) {
                if (q(r, c) != 0.5) ++row_hits;
                if (q(c - 4, r + 4) != 0.5) ++col_hits;
            }
            CHECK(row_hits == 1);
            CHECK(col_hits == 1);
        }
    }
    const auto flat = gen::gen_mst_theta(6, 0.0, stream);
    CHECK(flat == ProbabilityMatrix::constant_half(6, Setting::Symmetric));
    CHECK_THROWS_AS(gen::gen_mst_theta(5, 0.1, stream), std::invalid_argument);
    CHECK_THROWS_AS(gen::gen_mst_theta(6, 0.5, stream), std::invalid_argument);
}

TEST_CASE("planted clique construction") {
    rng::Stream stream(17);
    SUBCASE("kappa 0 is the flat matrix") {
        CHECK(gen::gen_planted_clique_sst(6, 0, stream) ==
              ProbabilityMatrix::constant_half(6, Setting::Symmetric));
    }
    SUBCASE("separation formula") {
        const auto q = gen::gen_planted_clique_sst(8, 2, stream);
        const auto p = ProbabilityMatrix::constant_half(8, Setting::Symmetric);
        const double sep = frobenius_separation(p, q).value;
        CHECK(sep * sep == doctest::Approx(4.0 / 128.0).epsilon(1e-12));
    }
    SUBCASE("SST holds under the row-sum ordering") {
        for (int rep = 0; rep < 10; ++rep) {
            const auto q = gen::gen_planted_clique_sst(10, 3, stream);
            CHECK(validate_model(q, ModelClass::SST).ok);
        }
    }
    SUBCASE("bounds") {
        CHECK_THROWS_AS(gen::gen_planted_clique_sst(8, 5, stream), std::invalid_argument);
        CHECK_THROWS_AS(gen::gen_planted_clique_sst(7, 2, stream), std::invalid_argument);
    }
}

TEST_CASE("count distributions") {
    rng::Stream stream(19);
    SUBCASE("fixed fills every slot") {
        const auto counts =
            gen::sample_counts(gen::CountDistribution::fixed(5), 3, Setting::Symmetric, stream);
        for_each_slot(3, Setting::Symmetric, [&](int i, int j) { CHECK(counts(i, j) == 5); });
        CHECK(counts(1, 0) == 0);
    }
    SUBCASE("binomial with a = 1 is degenerate at n") {
        const auto dist = gen::CountDistribution::binomial(7, 1.0);
        for (int rep = 0; rep < 20; ++rep) CHECK(dist.sample(stream) == 7);
    }
    SUBCASE("poisson mean check") {
        const auto dist = gen::CountDistribution::poisson(4.0);
        const long long reps = 100000;
        double sum = 0.0;
        for (long long r = 0; r < reps; ++r) sum += static_cast<double>(dist.sample(stream));
        const double se = 2.0 / std::sqrt(static_cast<double>(reps));
        CHECK(std::abs(sum / static_cast<double>(reps) - 4.0) <= 4.0 * se);
    }
    SUBCASE("geometric support starts at one") {
        const auto dist = gen::CountDistribution::geometric(0.35);
        for (int rep = 0; rep < 1000; ++rep) CHECK(dist.sample(stream) >= 1);
        CHECK(dist.mean() == doctest::Approx(1.0 / 0.35));
        CHECK(dist.prob_one() == doctest::Approx(0.35));
    }
    SUBCASE("moment report") {
        const auto report = gen::moment_report(gen::CountDistribution::binomial(8, 0.5));
        CHECK(report.mu == doctest::Approx(4.0));
        CHECK(report.sigma == doctest::Approx(std::sqrt(2.0)));
        CHECK(report.p1 == doctest::Approx(8.0 * 0.5 * std::pow(0.5, 7)));
        CHECK(report.mean_exceeds_p1);
        const auto degenerate = gen::moment_report(gen::CountDistribution::fixed(1));
        CHECK_FALSE(degenerate.mean_exceeds_p1);
    }
    SUBCASE("parsing") {
        CHECK(gen::CountDistribution::parse("fixed:5").describe() == "fixed:5");
        CHECK(gen::CountDistribution::parse("binomial:8,0.5").mean() == doctest::Approx(4.0));
        CHECK_THROWS_AS(gen::CountDistribution::parse("nope:1"), std::invalid_argument);
        CHECK_THROWS_AS(gen::CountDistribution::parse("fixed"), std::invalid_argument);
    }
}

TEST_CASE("comparison sampling") {
    rng::Stream stream(23);
    auto m = ProbabilityMatrix::constant_half(3, Setting::Symmetric);
    CountGrid counts(3, 0);
    for_each_slot(3, Setting::Symmetric, [&](int i, int j) { counts(i, j) = 10; });
    SUBCASE("certain winners sweep") {
        m.set_pair(0, 1, 1.0);
        m.set_pair(0, 2, 0.0);
        const auto data = gen::sample_comparisons(m, counts, stream);
        CHECK(data.wins(0, 1) == 10);
        CHECK(data.wins(0, 2) == 0);
    }
    SUBCASE("fair coin empirical rate") {
        long long wins = 0, total = 0;
        CountGrid big(3, 0);
        for_each_slot(3, Setting::Symmetric, [&](int i, int j) { big(i, j) = 4000; });
        const auto data = gen::sample_comparisons(m, big, stream);
        for_each_slot(3, Setting::Symmetric, [&](int i, int j) {
            wins += data.wins(i, j);
            total += data.count(i, j);
        });
        const double rate = static_cast<double>(wins) / static_cast<double>(total);
        const double se = 0.5 / std::sqrt(static_cast<double>(total));
        CHECK(std::abs(rate - 0.5) <= 4.0 * se);
    }
}

TEST_CASE("plackett-luce sampling") {
    rng::Stream stream(29);
    SUBCASE("two items with a 2:1 weight ratio") {
        const gen::PLWeights weights{{std::log(2.0), 0.0}};
        const std::vector<int> subset{0, 1};
        long long first = 0;
        const long long reps = 30000;
        for (long long r = 0; r < reps; ++r)
            first += gen::sample_pl_ranking(weights, subset, stream)[0] == 0 ? 1 : 0;
        const double rate = static_cast<double>(first) / static_cast<double>(reps);
        const double se = std::sqrt((2.0 / 3.0) * (1.0 / 3.0) / static_cast<double>(reps));
        CHECK(std::abs(rate - 2.0 / 3.0) <= 4.0 * se);
    }
    SUBCASE("closed-form marginals") {
        const gen::PLWeights weights{{std::log(2.0), 0.0}};
        const auto m = gen::pl_marginal_matrix(weights);
        CHECK(m(0, 1) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
        CHECK(m(1, 0) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
    }
    SUBCASE("marginal matrix is SST under weight-descending order") {
        const gen::PLWeights weights{{0.3, -0.8, 1.4, 0.0, -0.1}};
        const auto m = gen::pl_marginal_matrix(weights);
        CHECK(validate_model(m, ModelClass::SST, std::vector<int>{2, 0, 3, 4, 1}).ok);
        CHECK(validate_model(m, ModelClass::SST).ok);  // row-sum heuristic agrees
    }
    SUBCASE("input validation") {
        const gen::PLWeights weights{{0.0, 0.0}};
        CHECK_THROWS_AS(gen::sample_pl_ranking(weights, std::vector<int>{0}, stream),
                        std::invalid_argument);
        CHECK_THROWS_AS((gen::PLWeights{{1.0, std::nan("")}}), std::invalid_argument);
    }
    SUBCASE("centering") {
        const gen::PLWeights weights{{1.0, 2.0, 3.0}};
        const auto centered = weights.centered();
        CHECK(centered.values[0] == doctest::Approx(-1.0));
        CHECK(centered.values[2] == doctest::Approx(1.0));
    }
}

TEST_CASE("generators are deterministic given the seed") {
    for (std::uint64_t seed : {1ULL, 99ULL}) {
        rng::Stream a(seed), b(seed);
        const auto qa = gen::gen_mst_theta(6, 0.1, a);
        const auto qb = gen::gen_mst_theta(6, 0.1, b);
        CHECK(qa == qb);
        const auto [pa, qa2] = gen::gen_sst(5, Epsilon(0.03), a);
        const auto [pb, qb2] = gen::gen_sst(5, Epsilon(0.03), b);
        CHECK(qa2 == qb2);
    }
}
