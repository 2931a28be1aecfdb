#include "ranktest/json_report.hpp"

namespace ranktest::io {

std::string render_test_report_json(const stat::TestReport& report, OrderedJson params) {
    OrderedJson out = std::move(params);
    out["statistic"] = report.statistic.value;
    out["active_pairs"] = report.statistic.active_pairs;
    if (report.threshold) out["threshold"] = *report.threshold;
    if (report.p_value) out["p_value"] = *report.p_value;
    if (report.iterations) out["iterations"] = *report.iterations;
    if (report.seed) out["seed"] = *report.seed;
    out["reject"] = report.reject;
    return out.dump(2) + "\n";
}

}  // namespace ranktest::io
