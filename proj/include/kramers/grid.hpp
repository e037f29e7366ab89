#pragma once

#include <cmath>
#include <stdexcept>

namespace kramers {

/// Uniform 1D grid on [xmin, xmax] with n nodes.
struct Grid1D {
    double xmin = 0.0;
    double xmax = 1.0;
    int n = 2;

    Grid1D() = default;
    Grid1D(double lo, double hi, int count) : xmin(lo), xmax(hi), n(count) {
        if (!(xmax > xmin) || n < 2)
            throw std::invalid_argument("Grid1D: need xmax > xmin and at least 2 nodes");
    }

    double h() const { return (xmax - xmin) / (n - 1); }

    // Last node pinned to xmax so boundary rows sit exactly on the boundary.
    double node(int i) const { return i == n - 1 ? xmax : xmin + i * h(); }

    int nearest(double x) const {
        int i = static_cast<int>(std::lround((x - xmin) / h()));
        if (i < 0) i = 0;
        if (i >= n) i = n - 1;
        return i;
    }

    Grid1D refined() const { return Grid1D(xmin, xmax, 2 * n - 1); }
};

/// Tensor grid for the phase-space solver: x-window times a symmetric velocity window.
struct PhaseGrid {
    Grid1D x;
    Grid1D y;  // [-Ymax, Ymax]

    PhaseGrid() = default;
    PhaseGrid(Grid1D xs, Grid1D ys) : x(xs), y(ys) {
        if (!(y.xmax > 0.0) || std::abs(y.xmin + y.xmax) > 1e-12 * y.xmax)
            throw std::invalid_argument("PhaseGrid: velocity window must be symmetric [-Ymax, Ymax]");
    }

    double ymax() const { return y.xmax; }
    long size() const { return static_cast<long>(x.n) * y.n; }
};

}  // namespace kramers
