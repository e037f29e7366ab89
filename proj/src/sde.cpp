#include "kramers/sde.hpp"

#include <cmath>
#include <stdexcept>

#include "kramers/rng.hpp"

namespace kramers {

namespace {

void check_sde_inputs(const CoefficientSet& c, double mu, double T, double dt) {
    if (!(mu > 0.0)) throw std::invalid_argument("simulate: mass mu must be positive");
    if (!(dt > 0.0)) throw std::invalid_argument("simulate: dt must be positive");
    if (c.mode() != FrictionMode::StrictPositive || !(c.lambda_min() > 0.0))
        throw std::invalid_argument(
            "simulate: friction must satisfy the strict positivity assumption");
    if (dt > mu / (4.0 * c.Theta()) * (1.0 + 1e-12))
        throw std::invalid_argument("simulate: dt exceeds the stiff-step bound mu/(4*Theta)");
    if (!(T > 0.0)) throw std::invalid_argument("simulate: horizon T must be positive");
}

}  // namespace

int checked_step_count(double T, double dt) {
    const double ratio = T / dt;
    const int nsteps = static_cast<int>(std::lround(ratio));
    if (nsteps < 1 || std::abs(ratio - nsteps) > 1e-9 * ratio)
        throw std::invalid_argument("simulate: T/dt must be an integer step count");
    return nsteps;
}

void langevin_step(const CoefficientSet& c, double mu, double dt, std::span<double> x,
                   std::span<double> y, std::span<const double> dW) {
    const size_t dim = x.size();
    for (size_t i = 0; i < dim; ++i) {
        const double xi = x[i];
        const double lam = c.lambda(xi);
        const double alpha = std::exp(-lam * dt / mu);
        const double relax = 1.0 - alpha;
        const double drift = c.b(xi) / lam;
        const double noise_gain = c.sigma(xi) * relax / (lam * dt);
        x[i] = xi + y[i] * dt;
        y[i] = alpha * y[i] + relax * drift + noise_gain * dW[i];
    }
}

void limit_step(const CoefficientSet& c, double dt, std::span<double> x,
                std::span<const double> dW) {
    for (size_t i = 0; i < x.size(); ++i) {
        const double lam = c.lambda(x[i]);
        x[i] += c.b(x[i]) / lam * dt + c.sigma(x[i]) / lam * dW[i];
    }
}

PathPair simulate_coupled(const CoefficientSet& coeffs, double mu, std::vector<double> x0,
                          std::vector<double> p0, double T, double dt, std::uint64_t seed) {
    check_sde_inputs(coeffs, mu, T, dt);
    if (x0.empty() || x0.size() != p0.size())
        throw std::invalid_argument("simulate: x0 and p0 must be nonempty and the same size");
    const int dim = static_cast<int>(x0.size());
    const int nsteps = checked_step_count(T, dt);

    PathPair out;
    out.mu = mu;
    out.seed = seed;
    out.dim = dim;
    out.times.resize(nsteps + 1);
    out.xmu.resize(static_cast<size_t>(nsteps + 1) * dim);
    out.ymu.resize(static_cast<size_t>(nsteps + 1) * dim);
    out.xlim.resize(static_cast<size_t>(nsteps + 1) * dim);

    std::vector<double> x = x0, y = p0, xl = x0, dW(dim);
    GaussianStream g(seed, 0);
    const double sqdt = std::sqrt(dt);
    auto record = [&](int k) {
        out.times[k] = k * dt;
        for (int i = 0; i < dim; ++i) {
            out.xmu[static_cast<size_t>(k) * dim + i] = x[i];
            out.ymu[static_cast<size_t>(k) * dim + i] = y[i];
            out.xlim[static_cast<size_t>(k) * dim + i] = xl[i];
        }
    };
    record(0);
    for (int k = 0; k < nsteps; ++k) {
        for (int i = 0; i < dim; ++i) dW[i] = sqdt * g.normal();
        langevin_step(coeffs, mu, dt, x, y, dW);
        limit_step(coeffs, dt, xl, dW);
        record(k + 1);
    }
    out.times[nsteps] = T;
    return out;
}

MCEstimate estimate_sup_deviation(const CoefficientSet& coeffs, double mu,
                                  const std::vector<double>& x0, const std::vector<double>& p0,
                                  double T, double delta, double dt, int npaths,
                                  std::uint64_t seed, Exec exec) {
    check_sde_inputs(coeffs, mu, T, dt);
    if (npaths < 100) throw std::invalid_argument("estimate_sup_deviation: need npaths >= 100");
    if (!(delta >= 0.0)) throw std::invalid_argument("estimate_sup_deviation: delta must be >= 0");
    const int dim = static_cast<int>(x0.size());
    const int nsteps = checked_step_count(T, dt);
    const double sqdt = std::sqrt(dt);

    std::vector<char> exceeded(npaths, 0);
    auto run_path = [&](int p) {
        GaussianStream g(seed, static_cast<std::uint64_t>(p));
        std::vector<double> x = x0, y = p0, xl = x0, dW(dim);
        double maxdev = 0.0;
        for (int k = 0; k < nsteps; ++k) {
            for (int i = 0; i < dim; ++i) dW[i] = sqdt * g.normal();
            langevin_step(coeffs, mu, dt, x, y, dW);
            limit_step(coeffs, dt, xl, dW);
            double d2 = 0.0;
            for (int i = 0; i < dim; ++i) d2 += (x[i] - xl[i]) * (x[i] - xl[i]);
            maxdev = std::max(maxdev, std::sqrt(d2));
        }
        exceeded[p] = maxdev > delta ? 1 : 0;
    };

    if (exec == Exec::OpenMP) {
#pragma omp parallel for schedule(static)
        for (int p = 0; p < npaths; ++p) run_path(p);
    } else {
        for (int p = 0; p < npaths; ++p) run_path(p);
    }

    long count = 0;
    for (int p = 0; p < npaths; ++p) count += exceeded[p];
    MCEstimate est;
    est.npaths = npaths;
    est.value = static_cast<double>(count) / npaths;
    est.halfwidth = 1.96 * std::sqrt(est.value * (1.0 - est.value) / npaths);
    return est;
}

std::vector<double> integrate_limit_with_increments(const CoefficientSet& coeffs,
                                                    std::vector<double> x0, double dt, int nsteps,
                                                    std::span<const double> dW) {
    const size_t dim = x0.size();
    if (dW.size() != static_cast<size_t>(nsteps) * dim)
        throw std::invalid_argument("integrate_limit_with_increments: increment count mismatch");
    for (int k = 0; k < nsteps; ++k)
        limit_step(coeffs, dt, x0, dW.subspan(static_cast<size_t>(k) * dim, dim));
    return x0;
}

}  // namespace kramers
