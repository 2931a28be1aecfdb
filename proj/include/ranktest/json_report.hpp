#pragma once

#include <string>

#include "json.hpp"
#include "ranktest/statistic.hpp"

namespace ranktest::io {

using OrderedJson = nlohmann::ordered_json;

/// Renders a test outcome as schema-stable JSON: the caller's run
/// parameters first (in insertion order), then the results. Every knob
/// needed to reproduce the run bit-for-bit belongs in `params`.
std::string render_test_report_json(const stat::TestReport& report, OrderedJson params);

}  // namespace ranktest::io
