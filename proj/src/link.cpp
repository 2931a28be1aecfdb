#include "ranktest/link.hpp"

#include <cmath>
#include <stdexcept>

namespace ranktest {

LinkFunction LinkFunction::btl() {
    return LinkFunction("btl", [](double theta) { return 1.0 / (1.0 + std::exp(-theta)); });
}

LinkFunction LinkFunction::thurstone() {
    return LinkFunction("thurstone",
                        [](double theta) { return 0.5 * std::erfc(-theta / std::sqrt(2.0)); });
}

LinkFunction LinkFunction::custom(std::string name, std::function<double(double)> fn) {
    LinkFunction link(std::move(name), std::move(fn));
    double prev = -1.0;
    for (int i = -40; i <= 40; ++i) {
        const double theta = 0.25 * i;
        const double y = link(theta);
        if (!(y >= 0.0 && y <= 1.0)) throw std::invalid_argument("link range must be [0, 1]");
        if (y + 1e-12 < prev) throw std::invalid_argument("link must be nondecreasing");
        if (std::abs(y + link(-theta) - 1.0) > 1e-9)
            throw std::invalid_argument("link must satisfy f(t) = 1 - f(-t)");
        prev = y;
    }
    return link;
}

double LinkFunction::invert(double y) const {
    double lo = 0.0, hi = 1.0;
    if (y < fn_(0.0)) {
        hi = 0.0;
        lo = -1.0;
        while (fn_(lo) > y) {
            lo *= 2.0;
            if (lo < -1e6) throw std::domain_error("link inversion target unreachable");
        }
    } else {
        while (fn_(hi) < y) {
            hi *= 2.0;
            if (hi > 1e6) throw std::domain_error("link inversion target unreachable");
        }
    }
    for (int iter = 0; iter < 200 && hi - lo > 1e-12; ++iter) {
        const double mid = 0.5 * (lo + hi);
        (fn_(mid) < y ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace ranktest
