#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

#include "kramers/grid.hpp"

namespace kramers {

/// Grid-sampled scalar function with a time stamp.
struct SolutionField {
    Grid1D grid;
    std::vector<double> values;
    double time = 0.0;

    SolutionField() = default;
    SolutionField(const Grid1D& g, double fill = 0.0)
        : grid(g), values(static_cast<size_t>(g.n), fill) {}

    static SolutionField sample(const Grid1D& g, const std::function<double(double)>& f) {
        SolutionField u(g);
        for (int i = 0; i < g.n; ++i) u.values[i] = f(g.node(i));
        return u;
    }

    double& operator[](int i) { return values[i]; }
    double operator[](int i) const { return values[i]; }

    void check_shape() const {
        if (static_cast<int>(values.size()) != grid.n)
            throw std::invalid_argument("SolutionField: value count does not match grid");
    }

    bool all_finite() const {
        for (double v : values)
            if (!std::isfinite(v)) return false;
        return true;
    }
};

/// Scalar samples on a phase grid, x-major: values[ix * ny + iy].
struct PhaseField {
    PhaseGrid grid;
    std::vector<double> values;
    double time = 0.0;

    PhaseField() = default;
    explicit PhaseField(const PhaseGrid& g, double fill = 0.0)
        : grid(g), values(static_cast<size_t>(g.size()), fill) {}

    static PhaseField sample(const PhaseGrid& g, const std::function<double(double, double)>& f) {
        PhaseField u(g);
        for (int ix = 0; ix < g.x.n; ++ix)
            for (int iy = 0; iy < g.y.n; ++iy)
                u.values[static_cast<size_t>(ix) * g.y.n + iy] = f(g.x.node(ix), g.y.node(iy));
        return u;
    }

    double& at(int ix, int iy) { return values[static_cast<size_t>(ix) * grid.y.n + iy]; }
    double at(int ix, int iy) const { return values[static_cast<size_t>(ix) * grid.y.n + iy]; }

    /// Copy of the row y = y.node(iy) as a 1D field on the x grid.
    SolutionField slice_y(int iy) const {
        SolutionField s(grid.x);
        s.time = time;
        for (int ix = 0; ix < grid.x.n; ++ix) s.values[ix] = at(ix, iy);
        return s;
    }
};

/// Centered first difference, second-order one-sided at the ends.
std::vector<double> centered_derivative(const std::vector<double>& f, double h);

inline double max_abs(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

inline double sup_distance(const SolutionField& a, const SolutionField& b) {
    if (a.values.size() != b.values.size())
        throw std::invalid_argument("sup_distance: field sizes differ");
    double m = 0.0;
    for (size_t i = 0; i < a.values.size(); ++i) m = std::max(m, std::abs(a.values[i] - b.values[i]));
    return m;
}

}  // namespace kramers
