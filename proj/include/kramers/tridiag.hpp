#pragma once

#include <cmath>
#include <span>
#include <stdexcept>
#include <vector>

namespace kramers {

/// Thomas factorization of a tridiagonal matrix, reusable across right-hand sides.
/// No pivoting; intended for the diagonally dominant systems assembled by the solvers.
class TridiagFactor {
  public:
    TridiagFactor() = default;

    /// sub has n-1 entries (row i couples to i-1), diag n, sup n-1.
    void factor(std::span<const double> sub, std::span<const double> diag,
                std::span<const double> sup) {
        const size_t n = diag.size();
        if (sub.size() != n - 1 || sup.size() != n - 1)
            throw std::invalid_argument("TridiagFactor: band sizes inconsistent");
        sub_.assign(sub.begin(), sub.end());
        cp_.resize(n - 1);
        invd_.resize(n);
        double d = diag[0];
        check_pivot(d, 0);
        invd_[0] = 1.0 / d;
        for (size_t i = 1; i < n; ++i) {
            cp_[i - 1] = sup[i - 1] * invd_[i - 1];
            d = diag[i] - sub[i - 1] * cp_[i - 1];
            check_pivot(d, i);
            invd_[i] = 1.0 / d;
        }
    }

    void solve(std::span<const double> rhs, std::span<double> x) const {
        const size_t n = invd_.size();
        x[0] = rhs[0] * invd_[0];
        for (size_t i = 1; i < n; ++i) x[i] = (rhs[i] - sub_[i - 1] * x[i - 1]) * invd_[i];
        for (size_t i = n - 1; i > 0; --i) x[i - 1] -= cp_[i - 1] * x[i];
    }

    size_t size() const { return invd_.size(); }

  private:
    static void check_pivot(double d, size_t row) {
        if (d == 0.0 || !std::isfinite(d))
            throw std::runtime_error("tridiagonal solve: zero or non-finite pivot at row " +
                                     std::to_string(row));
    }

    std::vector<double> sub_, cp_, invd_;
};

/// One-shot solve, overwriting nothing.
inline std::vector<double> solve_tridiag(std::span<const double> sub, std::span<const double> diag,
                                         std::span<const double> sup, std::span<const double> rhs) {
    TridiagFactor f;
    f.factor(sub, diag, sup);
    std::vector<double> x(diag.size());
    f.solve(rhs, x);
    return x;
}

}  // namespace kramers
