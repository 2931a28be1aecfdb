#include "ranktest/validate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ranktest {

namespace {

constexpr double kTolerance = 1e-9;

std::string describe_pair(const char* what, int i, int j, double lhs, double rhs) {
    std::ostringstream out;
    out << what << " violated at (" << i << "," << j << "): " << lhs << " vs " << rhs;
    return out.str();
}

ValidationReport check_skew_symmetry(const ProbabilityMatrix& m) {
    const int d = m.dim();
    for (int i = 0; i < d; ++i) {
        for (int j = i + 1; j < d; ++j) {
            if (std::abs(m(i, j) + m(j, i) - 1.0) > kTolerance)
                return {false, describe_pair("shifted-skew-symmetry", i, j, m(i, j),
                                             1.0 - m(j, i))};
        }
    }
    return {};
}

std::vector<int> checked_ordering(const ProbabilityMatrix& m,
                                  std::optional<std::vector<int>> ordering) {
    if (!ordering) return row_sum_ordering(m);
    const int d = m.dim();
    if (static_cast<int>(ordering->size()) != d)
        throw std::invalid_argument("ordering must be a permutation of [d]");
    std::vector<bool> seen(static_cast<std::size_t>(d), false);
    for (const int item : *ordering) {
        if (item < 0 || item >= d || seen[static_cast<std::size_t>(item)])
            throw std::invalid_argument("ordering must be a permutation of [d]");
        seen[static_cast<std::size_t>(item)] = true;
    }
    return *std::move(ordering);
}

}  // namespace

const char* to_string(ModelClass cls) {
    switch (cls) {
        case ModelClass::WST: return "WST";
        case ModelClass::MST: return "MST";
        case ModelClass::SST: return "SST";
        case ModelClass::Any: return "model-free";
    }
    return "?";
}

std::vector<int> row_sum_ordering(const ProbabilityMatrix& m) {
    const int d = m.dim();
    std::vector<double> sums(static_cast<std::size_t>(d), 0.0);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            if (i != j) sums[static_cast<std::size_t>(i)] += m(i, j);
    std::vector<int> order(static_cast<std::size_t>(d));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return sums[static_cast<std::size_t>(a)] > sums[static_cast<std::size_t>(b)];
    });
    return order;
}

ValidationReport validate_model(const ProbabilityMatrix& m, ModelClass cls,
                                std::optional<std::vector<int>> ordering) {
    if (cls == ModelClass::Any) return {};

    if (auto skew = check_skew_symmetry(m); !skew) return skew;
    const std::vector<int> order = checked_ordering(m, std::move(ordering));
    const int d = m.dim();

    if (cls == ModelClass::WST) {
        for (int a = 0; a < d; ++a) {
            for (int b = a + 1; b < d; ++b) {
                const int i = order[a], j = order[b];
                if (m(i, j) < 0.5 - kTolerance)
                    return {false, describe_pair("WST", i, j, m(i, j), 0.5)};
            }
        }
        return {};
    }

    if (cls == ModelClass::MST) {
        for (int a = 0; a < d; ++a) {
            for (int b = a + 1; b < d; ++b) {
                for (int c = b + 1; c < d; ++c) {
                    const int i = order[a], j = order[b], l = order[c];
                    const double floor = std::min(m(i, j), m(j, l));
                    if (m(i, l) < floor - kTolerance) {
                        std::ostringstream out;
                        out << "MST violated at (" << i << "," << j << "," << l
                            << "): " << m(i, l) << " < min(" << m(i, j) << ", " << m(j, l)
                            << ")";
                        return {false, out.str()};
                    }
                }
            }
        }
        return {};
    }

    // SST: every row of a more-preferred item dominates entrywise.
    for (int a = 0; a < d; ++a) {
        for (int b = a + 1; b < d; ++b) {
            const int i = order[a], j = order[b];
            for (int l = 0; l < d; ++l) {
                if (m(i, l) < m(j, l) - kTolerance) {
                    std::ostringstream out;
                    out << "SST violated at (" << i << "," << j << "," << l << "): " << m(i, l)
                        << " < " << m(j, l);
                    return {false, out.str()};
                }
            }
        }
    }
    return {};
}

ValidationReport validate_model(const ProbabilityMatrix& m, const LinkFunction& link,
                                std::span<const double> weights) {
    const int d = m.dim();
    if (static_cast<int>(weights.size()) != d)
        throw std::invalid_argument("weight vector length must equal d");
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) {
            if (i == j) continue;
            const double expected = link(weights[static_cast<std::size_t>(i)] -
                                         weights[static_cast<std::size_t>(j)]);
            if (std::abs(m(i, j) - expected) > kTolerance)
                return {false, describe_pair("parameter-based", i, j, m(i, j), expected)};
        }
    }
    return {};
}

}  // namespace ranktest
