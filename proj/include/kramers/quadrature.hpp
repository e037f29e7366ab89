#pragma once

#include <functional>
#include <vector>

namespace kramers {

/// Cumulative integral of f from x0 over `count` steps of width `step`.
/// Returns count+1 values; each step uses Simpson's rule with a midpoint
/// evaluation, so smooth integrands are resolved far below scheme error.
std::vector<double> cumulative_simpson(const std::function<double(double)>& f, double x0,
                                       double step, int count);

/// Simpson integral over [a, b] with n subintervals.
double integrate_simpson(const std::function<double(double)>& f, double a, double b, int n);

/// Trapezoid mass of nodal values on a uniform grid with spacing h.
double trapezoid_mass(const std::vector<double>& v, double h);

}  // namespace kramers
