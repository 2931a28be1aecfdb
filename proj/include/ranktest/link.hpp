#pragma once

#include <functional>
#include <string>

namespace ranktest {

/// A valid link for parameter-based models: nondecreasing f with
/// f(theta) = 1 - f(-theta). M[i][j] = f(w_i - w_j).
class LinkFunction {
public:
    static LinkFunction btl();        // logistic
    static LinkFunction thurstone();  // standard Gaussian CDF
    /// Custom links get a cheap grid check of validity at construction.
    static LinkFunction custom(std::string name, std::function<double(double)> fn);

    double operator()(double theta) const { return fn_(theta); }
    const std::string& name() const { return name_; }

    /// Solves f(theta) = y for y in (f-range) by bisection to 1e-12.
    double invert(double y) const;

private:
    LinkFunction(std::string name, std::function<double(double)> fn)
        : name_(std::move(name)), fn_(std::move(fn)) {}

    std::string name_;
    std::function<double(double)> fn_;
};

}  // namespace ranktest
