#include "kramers/quadrature.hpp"

namespace kramers {

std::vector<double> cumulative_simpson(const std::function<double(double)>& f, double x0,
                                       double step, int count) {
    std::vector<double> acc(static_cast<size_t>(count) + 1);
    acc[0] = 0.0;
    double fl = f(x0);
    for (int i = 0; i < count; ++i) {
        const double xl = x0 + i * step;
        const double fr = f(xl + step);
        acc[i + 1] = acc[i] + step / 6.0 * (fl + 4.0 * f(xl + 0.5 * step) + fr);
        fl = fr;
    }
    return acc;
}

double integrate_simpson(const std::function<double(double)>& f, double a, double b, int n) {
    const double h = (b - a) / n;
    double acc = 0.0;
    double fl = f(a);
    for (int i = 0; i < n; ++i) {
        const double xl = a + i * h;
        const double fr = f(xl + h);
        acc += h / 6.0 * (fl + 4.0 * f(xl + 0.5 * h) + fr);
        fl = fr;
    }
    return acc;
}

double trapezoid_mass(const std::vector<double>& v, double h) {
    if (v.size() < 2) return 0.0;
    double acc = 0.5 * (v.front() + v.back());
    for (size_t i = 1; i + 1 < v.size(); ++i) acc += v[i];
    return acc * h;
}

}  // namespace kramers
