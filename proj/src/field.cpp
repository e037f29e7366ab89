#include "kramers/field.hpp"

namespace kramers {

std::vector<double> centered_derivative(const std::vector<double>& f, double h) {
    const int n = static_cast<int>(f.size());
    if (n < 3) throw std::invalid_argument("centered_derivative: need at least 3 nodes");
    std::vector<double> d(n);
    d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
    for (int i = 1; i < n - 1; ++i) d[i] = (f[i + 1] - f[i - 1]) / (2.0 * h);
    d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
    return d;
}

}  // namespace kramers
