#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace rmtlab::quad {

struct QuadratureError : std::runtime_error {
    QuadratureError(const std::string& what, double value, double error_estimate)
        : std::runtime_error(what), value(value), error_estimate(error_estimate) {}
    double value;
    double error_estimate;
};

/// Adaptive Gauss-Kronrod (G7/K15) integration of f on [a, b].
/// Bisects panels until the panel error estimate sums below
/// max(abs_tol, rel_tol * |integral|); throws QuadratureError (carrying the
/// best value and achieved error estimate) if the depth limit is hit.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-10, double rel_tol = 1e-12, int max_depth = 60);

}  // namespace rmtlab::quad
