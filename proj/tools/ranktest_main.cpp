// ranktest: two-sample tests for pairwise-comparison and ranking data,
// plus the synthetic experiment harness behind the power-curve studies.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ranktest/csv_io.hpp"
#include "ranktest/experiment.hpp"
#include "ranktest/generators.hpp"
#include "ranktest/json_report.hpp"
#include "ranktest/permutation.hpp"
#include "ranktest/plackett_luce.hpp"
#include "ranktest/rank_breaking.hpp"
#include "ranktest/statistic.hpp"
#include "ranktest/svg_plot.hpp"

namespace {

using namespace ranktest;

std::uint64_t resolve_seed(std::optional<std::uint64_t> flag_seed) {
    if (flag_seed) return *flag_seed;
    if (const char* env = std::getenv("RANKTEST_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw std::runtime_error("RANKTEST_SEED is not a valid unsigned integer");
        }
    }
    std::random_device device;
    return (static_cast<std::uint64_t>(device()) << 32) ^ device();
}

Setting parse_setting(const std::string& name) {
    if (name == "symmetric") return Setting::Symmetric;
    if (name == "asymmetric") return Setting::Asymmetric;
    throw std::runtime_error("setting must be symmetric or asymmetric");
}

perm::Smoothing parse_smoothing(const std::string& name) {
    if (name == "paper-exact") return perm::Smoothing::PaperExact;
    if (name == "add-one") return perm::Smoothing::AddOne;
    throw std::runtime_error("smoothing must be paper-exact or add-one");
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        io::write_file(out_path, text);
    }
}

std::string zero_padded_name(int index, int d) {
    int digits = 1;
    for (int v = d - 1; v >= 10; v /= 10) ++digits;
    std::string number = std::to_string(index);
    return "item" + std::string(static_cast<std::size_t>(digits) - number.size(), '0') + number;
}

struct TestPairwiseArgs {
    std::string input;
    std::string setting = "symmetric";
    bool drop_ties = false;
    double alpha = 0.05;
    long long permutations = 5000;
    std::optional<std::uint64_t> seed;
    std::string smoothing = "paper-exact";
    bool fixed_threshold = false;
    bool paper_exact = false;
    double nu = 1.0 / 3.0;
    int threads = 1;
    std::string json_out;
};

int run_test_pairwise(const TestPairwiseArgs& args) {
    const Setting setting = parse_setting(args.setting);
    const auto ingest = io::ingest_pairwise_csv(args.input, setting, args.drop_ties);

    io::OrderedJson params;
    params["command"] = "test-pairwise";
    params["input"] = args.input;
    params["setting"] = to_string(setting);
    params["d"] = ingest.names.names.size();
    params["items"] = ingest.names.names;
    params["observations_p"] = ingest.population_p.total_comparisons();
    params["observations_q"] = ingest.population_q.total_comparisons();
    if (ingest.dropped_ties > 0) params["dropped_ties"] = ingest.dropped_ties;

    stat::TestReport report;
    if (args.fixed_threshold) {
        stat::FixedTestConfig cfg;
        cfg.nu = args.nu;
        cfg.paper_exact = args.paper_exact;
        report = stat::fixed_test(ingest.population_p, ingest.population_q, cfg);
        params["calibration"] = "fixed-threshold";
        params["nu"] = args.nu;
        params["paper_exact"] = args.paper_exact;
    } else {
        perm::PermutationConfig cfg;
        cfg.iterations = args.permutations;
        cfg.alpha = args.alpha;
        cfg.seed = resolve_seed(args.seed);
        cfg.smoothing = parse_smoothing(args.smoothing);
        cfg.threads = args.threads;
        report = perm::pairwise_permutation_test(ingest.population_p, ingest.population_q, cfg);
        params["calibration"] = "permutation";
        params["alpha"] = args.alpha;
        params["smoothing"] = args.smoothing;
    }
    emit(io::render_test_report_json(report, std::move(params)), args.json_out);
    return 0;
}

struct TestRankingArgs {
    std::string input;
    std::string breaking = "complete";
    double alpha = 0.05;
    long long permutations = 200;
    std::optional<std::uint64_t> seed;
    std::string smoothing = "paper-exact";
    int threads = 1;
    std::string json_out;
};

int run_test_ranking(const TestRankingArgs& args) {
    const auto ingest = io::ingest_ranking_csv(args.input);
    perm::PermutationConfig cfg;
    cfg.iterations = args.permutations;
    cfg.alpha = args.alpha;
    cfg.seed = resolve_seed(args.seed);
    cfg.smoothing = parse_smoothing(args.smoothing);
    cfg.threads = args.threads;
    rankbreak::RankBreaker breaker{rankbreak::method_from_string(args.breaking), cfg.seed};

    const auto report =
        perm::ranking_permutation_test(ingest.population_p, ingest.population_q, breaker, cfg);

    io::OrderedJson params;
    params["command"] = "test-ranking";
    params["input"] = args.input;
    params["d"] = ingest.names.names.size();
    params["items"] = ingest.names.names;
    params["rankings_p"] = ingest.population_p.size();
    params["rankings_q"] = ingest.population_q.size();
    params["rank_breaking"] = args.breaking;
    params["calibration"] = "permutation";
    params["alpha"] = args.alpha;
    params["smoothing"] = args.smoothing;
    emit(io::render_test_report_json(report, std::move(params)), args.json_out);
    return 0;
}

struct PowerArgs {
    std::string model = "model-free";
    std::string setting;
    int d = 20;
    double epsilon = 0.05;
    double a = 1.0;
    std::vector<double> sweep = {0.5, 1.0, 2.0, 4.0, 8.0};
    long long trials = 100;
    double alpha = 0.05;
    long long permutations = 5000;
    std::optional<std::uint64_t> seed;
    bool null_hypothesis = false;
    int threads = 1;
    std::string out;
    std::string svg;
};

harness::PowerCurveSpec to_spec(const PowerArgs& args, harness::Model model) {
    harness::PowerCurveSpec spec;
    spec.model = model;
    spec.setting = args.setting.empty()
                       ? (model == harness::Model::ModelFree ? Setting::Asymmetric
                                                             : Setting::Symmetric)
                       : parse_setting(args.setting);
    spec.d = args.d;
    spec.epsilon = args.epsilon;
    spec.a = args.a;
    spec.sweep = args.sweep;
    spec.trials = args.trials;
    spec.alpha = args.alpha;
    spec.permutations = args.permutations;
    spec.seed = resolve_seed(args.seed);
    spec.null_hypothesis = args.null_hypothesis;
    spec.threads = args.threads;
    return spec;
}

std::vector<std::pair<double, double>> to_xy(std::span<const harness::PowerPoint> points) {
    std::vector<std::pair<double, double>> xy;
    xy.reserve(points.size());
    for (const auto& point : points) xy.emplace_back(point.sweep, point.power);
    return xy;
}

int run_power_curve_command(const PowerArgs& args) {
    const auto spec = to_spec(args, harness::model_from_string(args.model));
    const auto points = harness::run_power_curve(spec);
    emit(harness::render_power_csv(points), args.out);
    if (!args.svg.empty()) {
        const harness::SvgSeries series{args.model, to_xy(points)};
        io::write_file(args.svg,
                       harness::render_line_svg("power vs sample-size scaling", "c", "power",
                                                std::span(&series, 1), args.alpha));
    }
    return 0;
}

int run_model_comparison(const PowerArgs& args) {
    std::vector<harness::LabelledCurve> curves;
    std::vector<harness::SvgSeries> series;
    for (const auto model :
         {harness::Model::ModelFree, harness::Model::Btl, harness::Model::Sst}) {
        PowerArgs per_model = args;
        per_model.setting = "symmetric";  // shared setting keeps the curves comparable
        const auto spec = to_spec(per_model, model);
        auto points = harness::run_power_curve(spec);
        series.push_back({to_string(model), to_xy(points)});
        curves.push_back({to_string(model), std::move(points)});
    }
    emit(harness::render_model_comparison_csv(curves), args.out);
    if (!args.svg.empty())
        io::write_file(args.svg, harness::render_line_svg("power by generating model", "c",
                                                          "power", series, args.alpha));
    return 0;
}

struct GeneratePairwiseArgs {
    std::string model = "model-free";
    int d = 10;
    double epsilon = 0.05;
    double eta = 0.1;
    int kappa = 2;
    std::string dist = "fixed:5";
    std::optional<std::uint64_t> seed;
    std::string out;
};

// Always emits symmetric-setting data: the winner/loser CSV cannot carry an
// ordered-context loss, so an asymmetric file would come back degenerate.
// Asymmetric synthetic designs run in-memory via power-curve.
int run_generate_pairwise(const GeneratePairwiseArgs& args) {
    const std::uint64_t seed = resolve_seed(args.seed);
    rng::Stream stream(seed);
    ProbabilityMatrix p = ProbabilityMatrix::constant_half(args.d, Setting::Symmetric);
    ProbabilityMatrix q = p;
    if (args.model == "model-free") {
        auto pair = gen::gen_model_free(args.d, Epsilon(args.epsilon), Setting::Symmetric, stream);
        p = std::move(pair.p);
        q = std::move(pair.q);
    } else if (args.model == "btl" || args.model == "thurstone") {
        auto pair = gen::gen_parameter_based(
            args.d, Epsilon(args.epsilon),
            args.model == "btl" ? LinkFunction::btl() : LinkFunction::thurstone(), stream);
        p = std::move(pair.p);
        q = std::move(pair.q);
    } else if (args.model == "sst") {
        auto pair = gen::gen_sst(args.d, Epsilon(args.epsilon), stream);
        p = std::move(pair.p);
        q = std::move(pair.q);
    } else if (args.model == "mst") {
        q = gen::gen_mst_theta(args.d, args.eta, stream);
    } else if (args.model == "planted-clique") {
        q = gen::gen_planted_clique_sst(args.d, args.kappa, stream);
    } else {
        throw std::runtime_error("unknown model: " + args.model);
    }

    const auto dist = gen::CountDistribution::parse(args.dist);
    const auto counts_p = gen::sample_counts(dist, args.d, Setting::Symmetric, stream);
    const auto counts_q = gen::sample_counts(dist, args.d, Setting::Symmetric, stream);
    const auto x = gen::sample_comparisons(p, counts_p, stream);
    const auto y = gen::sample_comparisons(q, counts_q, stream);

    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(args.d));
    for (int i = 0; i < args.d; ++i) names.push_back(zero_padded_name(i, args.d));
    emit(io::emit_pairwise_csv(x, y, io::NameMap::from_names(std::move(names))), args.out);
    std::cerr << "seed " << seed << ", separation "
              << harness::format_double(frobenius_separation(p, q).value) << "\n";
    return 0;
}

struct GenerateRankingArgs {
    int d = 10;
    long long per_population = 200;
    int subset_size = 0;  // 0 = total rankings
    double spread_p = 0.0;
    double spread_q = 0.0;
    std::optional<std::uint64_t> seed;
    std::string out;
};

int run_generate_ranking(const GenerateRankingArgs& args) {
    if (args.d < 2) throw std::runtime_error("need d >= 2");
    const int m = args.subset_size == 0 ? args.d : args.subset_size;
    if (m < 2 || m > args.d) throw std::runtime_error("subset size must lie in [2, d]");
    const std::uint64_t seed = resolve_seed(args.seed);
    rng::Stream stream(seed);

    const auto weights = [&](double spread) {
        std::vector<double> w(static_cast<std::size_t>(args.d));
        for (int i = 0; i < args.d; ++i) w[static_cast<std::size_t>(i)] = -spread * i;
        return gen::PLWeights(std::move(w)).centered();
    };
    const gen::PLWeights weights_p = weights(args.spread_p);
    const gen::PLWeights weights_q = weights(args.spread_q);

    RankingDataset p(args.d);
    RankingDataset q(args.d);
    std::vector<int> all(static_cast<std::size_t>(args.d));
    for (int i = 0; i < args.d; ++i) all[static_cast<std::size_t>(i)] = i;
    const auto draw = [&](const gen::PLWeights& w, RankingDataset& target) {
        std::vector<int> subset = all;
        stream.shuffle(subset.begin(), subset.end());
        subset.resize(static_cast<std::size_t>(m));
        target.add(gen::sample_pl_ranking(w, subset, stream));
    };
    for (long long r = 0; r < args.per_population; ++r) draw(weights_p, p);
    for (long long r = 0; r < args.per_population; ++r) draw(weights_q, q);

    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(args.d));
    for (int i = 0; i < args.d; ++i) names.push_back(zero_padded_name(i, args.d));
    emit(io::emit_ranking_csv(p, q, io::NameMap::from_names(std::move(names))), args.out);
    std::cerr << "seed " << seed << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-sample testing on pairwise-comparison and ranking data"};
    app.require_subcommand(1);

    // ---- test ----
    auto* test = app.add_subcommand("test", "run a two-sample test on a CSV file");
    test->require_subcommand(1);

    TestPairwiseArgs tp;
    auto* test_pairwise = test->add_subcommand("pairwise", "population,winner,loser[,result]");
    test_pairwise->add_option("--input", tp.input, "input CSV")->required();
    test_pairwise->add_option("--setting", tp.setting, "symmetric|asymmetric");
    test_pairwise->add_flag("--drop-ties", tp.drop_ties, "drop rows whose result is draw");
    test_pairwise->add_option("--alpha", tp.alpha, "significance level");
    test_pairwise->add_option("--permutations", tp.permutations, "permutation iterations");
    std::uint64_t tp_seed = 0;
    auto* tp_seed_opt = test_pairwise->add_option("--seed", tp_seed, "RNG seed");
    test_pairwise->add_option("--smoothing", tp.smoothing, "paper-exact|add-one");
    test_pairwise->add_flag("--fixed-threshold", tp.fixed_threshold,
                            "use the fixed-threshold rule instead of permutation");
    test_pairwise->add_flag("--paper-exact", tp.paper_exact,
                            "with --fixed-threshold: use the rounded 11*d threshold");
    test_pairwise->add_option("--nu", tp.nu, "total-error target for the fixed threshold");
    test_pairwise->add_option("--threads", tp.threads, "worker threads (0 = all cores)");
    test_pairwise->add_option("--json", tp.json_out, "write the JSON report here");

    TestRankingArgs tr;
    auto* test_ranking = test->add_subcommand("ranking", "population,ranking with a>b>c");
    test_ranking->add_option("--input", tr.input, "input CSV")->required();
    test_ranking->add_option("--rank-breaking", tr.breaking,
                             "random-disjoint|deterministic-disjoint|complete");
    test_ranking->add_option("--alpha", tr.alpha, "significance level");
    test_ranking->add_option("--permutations", tr.permutations, "permutation iterations");
    std::uint64_t tr_seed = 0;
    auto* tr_seed_opt = test_ranking->add_option("--seed", tr_seed, "RNG seed");
    test_ranking->add_option("--smoothing", tr.smoothing, "paper-exact|add-one");
    test_ranking->add_option("--threads", tr.threads, "worker threads (0 = all cores)");
    test_ranking->add_option("--json", tr.json_out, "write the JSON report here");

    // ---- experiments ----
    PowerArgs pc;
    auto* power = app.add_subcommand("power-curve", "replicate the power-vs-scaling experiment");
    std::uint64_t pc_seed = 0;
    CLI::Option* pc_seed_opt = nullptr;
    const auto add_power_options = [&](CLI::App* cmd, PowerArgs& args) {
        cmd->add_option("--d", args.d, "item count");
        cmd->add_option("--epsilon", args.epsilon, "separation (1/d)||P-Q||_F");
        cmd->add_option("--a", args.a, "binomial comparison probability");
        cmd->add_option("--sweep", args.sweep, "scaling values c; n = c/(a d eps^2)");
        cmd->add_option("--trials", args.trials, "trials per grid point");
        cmd->add_option("--alpha", args.alpha, "significance level");
        cmd->add_option("--permutations", args.permutations, "permutation iterations");
        cmd->add_flag("--null", args.null_hypothesis, "generate under P = Q");
        cmd->add_option("--threads", args.threads, "worker threads (0 = all cores)");
        cmd->add_option("--out", args.out, "write the results CSV here");
        cmd->add_option("--svg", args.svg, "also write an SVG line plot");
    };
    power->add_option("--model", pc.model, "model-free|btl|sst");
    power->add_option("--setting", pc.setting, "symmetric|asymmetric");
    add_power_options(power, pc);
    pc_seed_opt = power->add_option("--seed", pc_seed, "RNG seed");

    PowerArgs mc;
    mc.permutations = 500;
    auto* compare = app.add_subcommand("model-comparison",
                                       "power curves for model-free, BTL and SST generators");
    add_power_options(compare, mc);
    std::uint64_t mc_seed = 0;
    auto* mc_seed_opt = compare->add_option("--seed", mc_seed, "RNG seed");

    // ---- generate ----
    auto* generate = app.add_subcommand("generate", "write synthetic data sets");
    generate->require_subcommand(1);

    GeneratePairwiseArgs gp;
    auto* gen_pairwise = generate->add_subcommand("pairwise", "two-population comparison CSV");
    gen_pairwise->add_option("--model", gp.model,
                             "model-free|btl|thurstone|sst|mst|planted-clique");
    gen_pairwise->add_option("--d", gp.d, "item count");
    gen_pairwise->add_option("--epsilon", gp.epsilon, "separation");
    gen_pairwise->add_option("--eta", gp.eta, "perturbation magnitude (mst)");
    gen_pairwise->add_option("--kappa", gp.kappa, "clique size (planted-clique)");
    gen_pairwise->add_option("--dist", gp.dist,
                             "count distribution, e.g. fixed:5 or binomial:8,0.5");
    std::uint64_t gp_seed = 0;
    auto* gp_seed_opt = gen_pairwise->add_option("--seed", gp_seed, "RNG seed");
    gen_pairwise->add_option("--out", gp.out, "output CSV path");

    GenerateRankingArgs gr;
    auto* gen_ranking = generate->add_subcommand("ranking", "two-population ranking CSV");
    gen_ranking->add_option("--d", gr.d, "item count");
    gen_ranking->add_option("--per-population", gr.per_population, "rankings per population");
    gen_ranking->add_option("--subset-size", gr.subset_size, "ranking length (0 = total)");
    gen_ranking->add_option("--spread-p", gr.spread_p, "weight spread, population P");
    gen_ranking->add_option("--spread-q", gr.spread_q, "weight spread, population Q");
    std::uint64_t gr_seed = 0;
    auto* gr_seed_opt = gen_ranking->add_option("--seed", gr_seed, "RNG seed");
    gen_ranking->add_option("--out", gr.out, "output CSV path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*test_pairwise) {
            if (*tp_seed_opt) tp.seed = tp_seed;
            return run_test_pairwise(tp);
        }
        if (*test_ranking) {
            if (*tr_seed_opt) tr.seed = tr_seed;
            return run_test_ranking(tr);
        }
        if (*power) {
            if (*pc_seed_opt) pc.seed = pc_seed;
            return run_power_curve_command(pc);
        }
        if (*compare) {
            if (*mc_seed_opt) mc.seed = mc_seed;
            return run_model_comparison(mc);
        }
        if (*gen_pairwise) {
            if (*gp_seed_opt) gp.seed = gp_seed;
            return run_generate_pairwise(gp);
        }
        if (*gen_ranking) {
            if (*gr_seed_opt) gr.seed = gr_seed;
            return run_generate_ranking(gr);
        }
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 1;
    }
    return 0;
}
