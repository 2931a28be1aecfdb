#include "ranktest/experiment.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ranktest/generators.hpp"
#include "ranktest/parallel.hpp"

namespace ranktest::harness {

namespace {

constexpr std::uint64_t kTrialTag = 0x747269616cULL;
constexpr std::uint64_t kTestTag = 0x74657374ULL;

gen::MatrixPair generate_pair(const PowerCurveSpec& spec, rng::Stream& stream) {
    const Epsilon eps(spec.null_hypothesis ? 0.0 : spec.epsilon);
    switch (spec.model) {
        case Model::ModelFree: return gen::gen_model_free(spec.d, eps, spec.setting, stream);
        case Model::Btl: {
            auto pair = gen::gen_parameter_based(spec.d, eps, LinkFunction::btl(), stream);
            return {std::move(pair.p), std::move(pair.q)};
        }
        case Model::Sst: return gen::gen_sst(spec.d, eps, stream);
    }
    throw std::logic_error("unreachable");
}

void validate(const PowerCurveSpec& spec) {
    if (spec.d < 2) throw std::invalid_argument("power curve needs d >= 2");
    if (!(spec.epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
    if (!(spec.a > 0.0 && spec.a <= 1.0)) throw std::invalid_argument("a must lie in (0, 1]");
    if (spec.trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (spec.sweep.empty()) throw std::invalid_argument("sweep grid is empty");
    for (const double c : spec.sweep)
        if (!(c > 0.0)) throw std::invalid_argument("sweep values must be positive");
    if (spec.model != Model::ModelFree && spec.setting != Setting::Symmetric)
        throw std::invalid_argument("BTL/SST constructions require the symmetric setting");
}

}  // namespace

const char* to_string(Model model) {
    switch (model) {
        case Model::ModelFree: return "model-free";
        case Model::Btl: return "btl";
        case Model::Sst: return "sst";
    }
    return "?";
}

Model model_from_string(const std::string& name) {
    if (name == "model-free") return Model::ModelFree;
    if (name == "btl") return Model::Btl;
    if (name == "sst") return Model::Sst;
    throw std::invalid_argument("unknown model: " + name);
}

WilsonInterval wilson_interval(long long successes, long long trials, double z) {
    if (trials < 1) throw std::invalid_argument("wilson interval needs trials >= 1");
    const double n = static_cast<double>(trials);
    const double phat = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (phat + z2 / (2.0 * n)) / denom;
    const double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

std::vector<PowerPoint> run_power_curve(const PowerCurveSpec& spec) {
    validate(spec);
    const std::size_t grid = spec.sweep.size();
    std::vector<long long> sample_sizes(grid);
    for (std::size_t g = 0; g < grid; ++g) {
        const double n = spec.sweep[g] / (spec.a * spec.d * spec.epsilon * spec.epsilon);
        sample_sizes[g] = std::llround(n);
        if (sample_sizes[g] < 0) throw std::invalid_argument("negative sample size");
    }

    std::vector<unsigned char> rejected(grid * static_cast<std::size_t>(spec.trials), 0);
    detail::parallel_for(
        static_cast<long long>(rejected.size()), spec.threads, [&](long long flat) {
            const std::size_t g = static_cast<std::size_t>(flat) /
                                  static_cast<std::size_t>(spec.trials);
            const std::uint64_t trial = static_cast<std::uint64_t>(
                flat - static_cast<long long>(g) * spec.trials);
            rng::Stream stream(rng::derive(spec.seed, kTrialTag, g, trial));
            const auto [p, q] = generate_pair(spec, stream);
            const auto dist = gen::CountDistribution::binomial(sample_sizes[g], spec.a);
            const CountGrid counts_p = gen::sample_counts(dist, spec.d, spec.setting, stream);
            const CountGrid counts_q = gen::sample_counts(dist, spec.d, spec.setting, stream);
            const PairwiseDataset x = gen::sample_comparisons(p, counts_p, stream);
            const PairwiseDataset y = gen::sample_comparisons(q, counts_q, stream);
            perm::PermutationConfig cfg;
            cfg.iterations = spec.permutations;
            cfg.alpha = spec.alpha;
            cfg.seed = rng::derive(spec.seed, kTestTag, g, trial);
            cfg.smoothing = spec.smoothing;
            cfg.threads = 1;
            rejected[static_cast<std::size_t>(flat)] =
                perm::pairwise_permutation_test(x, y, cfg).reject ? 1 : 0;
        });

    std::vector<PowerPoint> points(grid);
    for (std::size_t g = 0; g < grid; ++g) {
        long long rejections = 0;
        for (long long t = 0; t < spec.trials; ++t)
            rejections += rejected[g * static_cast<std::size_t>(spec.trials) +
                                   static_cast<std::size_t>(t)];
        const WilsonInterval ci = wilson_interval(rejections, spec.trials);
        points[g] = {spec.sweep[g],
                     sample_sizes[g],
                     spec.trials,
                     rejections,
                     static_cast<double>(rejections) / static_cast<double>(spec.trials),
                     ci.lo,
                     ci.hi};
    }
    return points;
}

std::string format_double(double value) {
    char buffer[64];
    const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
    if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
    return std::string(buffer, ptr);
}

namespace {

void append_point(std::ostringstream& out, const PowerPoint& point) {
    out << format_double(point.sweep) << ',' << point.trials << ',' << point.rejections << ','
        << format_double(point.power) << ',' << format_double(point.ci_lo) << ','
        << format_double(point.ci_hi) << '\n';
}

}  // namespace

std::string render_power_csv(std::span<const PowerPoint> points) {
    std::ostringstream out;
    out << "sweep,trials,rejections,power,ci_lo,ci_hi\n";
    for (const auto& point : points) append_point(out, point);
    return out.str();
}

std::string render_model_comparison_csv(std::span<const LabelledCurve> curves) {
    std::ostringstream out;
    out << "model,sweep,trials,rejections,power,ci_lo,ci_hi\n";
    for (const auto& curve : curves) {
        for (const auto& point : curve.points) {
            out << curve.label << ',';
            append_point(out, point);
        }
    }
    return out.str();
}

}  // namespace ranktest::harness
