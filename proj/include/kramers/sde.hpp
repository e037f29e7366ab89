#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kramers/coefficients.hpp"
#include "kramers/exec.hpp"

namespace kramers {

/// Coupled trajectories of the second-order Langevin system and its overdamped
/// limit, driven by the same Brownian increments. Paths are step-major with
/// `dim` components per instant.
struct PathPair {
    std::vector<double> times;
    std::vector<double> xmu;   // Langevin position
    std::vector<double> ymu;   // Langevin velocity
    std::vector<double> xlim;  // limit-SDE position
    double mu = 0.0;
    std::uint64_t seed = 0;
    int dim = 1;
};

struct MCEstimate {
    double value = 0.0;      // exceedance probability estimate in [0, 1]
    double halfwidth = 0.0;  // 95% binomial confidence half-width
    int npaths = 0;
};

/// One step of the Langevin system. The stiff -lambda*y/mu term is integrated
/// with the exact exponential factor at frozen coefficients; the Brownian
/// increment enters through the step-averaged kernel (1-alpha)/(lambda*dt) so
/// that both integrators consume the same dW and agree with plain
/// Euler-Maruyama as dt -> 0. Coefficient fields act componentwise.
void langevin_step(const CoefficientSet& c, double mu, double dt, std::span<double> x,
                   std::span<double> y, std::span<const double> dW);

/// Euler-Maruyama step of the overdamped limit dx = (b/lambda)dt + (sigma/lambda)dW.
void limit_step(const CoefficientSet& c, double dt, std::span<double> x,
                std::span<const double> dW);

/// Both trajectories under one Brownian path, recorded at every step.
PathPair simulate_coupled(const CoefficientSet& coeffs, double mu, std::vector<double> x0,
                          std::vector<double> p0, double T, double dt, std::uint64_t seed);

/// Fraction of paths whose running sup |x_mu - x_lim| exceeds delta, with a
/// binomial confidence half-width. Paths stream their running maximum, so
/// memory stays O(dim) per worker; the reduction is by path index and the
/// result is identical for any worker count.
MCEstimate estimate_sup_deviation(const CoefficientSet& coeffs, double mu,
                                  const std::vector<double>& x0, const std::vector<double>& p0,
                                  double T, double delta, double dt, int npaths,
                                  std::uint64_t seed, Exec exec = Exec::OpenMP);

/// Test hook: integrate the limit SDE with caller-supplied increments
/// (step-major, nsteps*dim values). Returns the final state.
std::vector<double> integrate_limit_with_increments(const CoefficientSet& coeffs,
                                                    std::vector<double> x0, double dt, int nsteps,
                                                    std::span<const double> dW);

/// Validated step count for (T, dt); requires T/dt to be an integer.
int checked_step_count(double T, double dt);

}  // namespace kramers
