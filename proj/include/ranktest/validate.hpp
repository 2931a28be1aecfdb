#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ranktest/link.hpp"
#include "ranktest/types.hpp"

namespace ranktest {

/// Stochastic-transitivity model classes, nested as
/// SST < MST < WST < Any. Parameter-based checks take the link and
/// weights explicitly (see the overload below).
enum class ModelClass { WST, MST, SST, Any };

const char* to_string(ModelClass cls);

struct ValidationReport {
    bool ok = true;
    std::string violation;  // describes the first violated pair/triple

    explicit operator bool() const { return ok; }
};

/// Items sorted by descending row sum of M, ties by index. The correct
/// ordering for every generator in this repository; external matrices can
/// pass an explicit ordering instead.
std::vector<int> row_sum_ordering(const ProbabilityMatrix& m);

/// Checks membership of m in the given class within 1e-9. `ordering`
/// lists items from most to least preferred; when absent the row-sum
/// heuristic above supplies the single candidate ordering.
ValidationReport validate_model(const ProbabilityMatrix& m, ModelClass cls,
                                std::optional<std::vector<int>> ordering = std::nullopt);

/// Parameter-based membership: M[i][j] = f(w_i - w_j) within 1e-9.
ValidationReport validate_model(const ProbabilityMatrix& m, const LinkFunction& link,
                                std::span<const double> weights);

}  // namespace ranktest
