#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ranktest/permutation.hpp"
#include "ranktest/types.hpp"

namespace ranktest::harness {

/// Synthetic (P, Q) source for power experiments.
enum class Model { ModelFree, Btl, Sst };

const char* to_string(Model model);
Model model_from_string(const std::string& name);

/// One power-curve experiment: for each sweep value c the per-pair sample
/// size is n = round(c / (a d epsilon^2)) and counts are drawn i.i.d.
/// Binomial(n, a) per population. Each trial regenerates (P, Q) at the
/// requested separation (or the null), samples both datasets, and runs the
/// pairwise permutation test.
struct PowerCurveSpec {
    Model model = Model::ModelFree;
    Setting setting = Setting::Asymmetric;  // BTL/SST constructions are symmetric
    int d = 20;
    double epsilon = 0.05;
    double a = 1.0;
    std::vector<double> sweep = {0.5, 1.0, 2.0, 4.0, 8.0};
    long long trials = 100;
    double alpha = 0.05;
    long long permutations = 500;
    perm::Smoothing smoothing = perm::Smoothing::PaperExact;
    std::uint64_t seed = 0;
    bool null_hypothesis = false;  // P = Q while keeping the epsilon-based n scaling
    int threads = 1;
};

struct PowerPoint {
    double sweep = 0.0;
    long long sample_size = 0;  // n fed to Binomial(n, a); informational
    long long trials = 0;
    long long rejections = 0;
    double power = 0.0;
    double ci_lo = 0.0;  // 95% Wilson interval
    double ci_hi = 0.0;
};

std::vector<PowerPoint> run_power_curve(const PowerCurveSpec& spec);

struct WilsonInterval {
    double lo = 0.0;
    double hi = 0.0;
};

WilsonInterval wilson_interval(long long successes, long long trials,
                               double z = 1.959963984540054);

/// Canonical results schema: sweep,trials,rejections,power,ci_lo,ci_hi.
std::string render_power_csv(std::span<const PowerPoint> points);

struct LabelledCurve {
    std::string label;
    std::vector<PowerPoint> points;
};

/// Same schema with a leading model column.
std::string render_model_comparison_csv(std::span<const LabelledCurve> curves);

/// Locale-independent shortest round-trip formatting (used by all CSV
/// output so files are byte-stable across machines).
std::string format_double(double value);

}  // namespace ranktest::harness
