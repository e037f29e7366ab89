#include "kramers/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kramers {

ScalarField ScalarField::constant(double c) {
    ScalarField s;
    s.f_ = [c](double) { return c; };
    s.df_ = [](double) { return 0.0; };
    return s;
}

ScalarField ScalarField::analytic(std::function<double(double)> f) {
    ScalarField s;
    s.f_ = std::move(f);
    return s;
}

ScalarField ScalarField::analytic(std::function<double(double)> f,
                                  std::function<double(double)> df) {
    ScalarField s;
    s.f_ = std::move(f);
    s.df_ = std::move(df);
    return s;
}

ScalarField ScalarField::tabulated(std::vector<double> xs, std::vector<double> ys) {
    if (xs.size() != ys.size() || xs.size() < 2)
        throw std::invalid_argument("tabulated field: need matching arrays with at least 2 samples");
    for (size_t i = 1; i < xs.size(); ++i)
        if (!(xs[i] > xs[i - 1]))
            throw std::invalid_argument("tabulated field: abscissae must be strictly increasing");
    double step = xs[1] - xs[0];
    auto interp = [xs = std::move(xs), ys = std::move(ys)](double x) {
        if (x <= xs.front()) return ys.front();
        if (x >= xs.back()) return ys.back();
        auto it = std::upper_bound(xs.begin(), xs.end(), x);
        size_t i = static_cast<size_t>(it - xs.begin());
        double t = (x - xs[i - 1]) / (xs[i] - xs[i - 1]);
        return (1.0 - t) * ys[i - 1] + t * ys[i];
    };
    ScalarField s;
    s.f_ = std::move(interp);
    s.fd_step_ = 0.5 * step;
    return s;
}

double ScalarField::deriv(double x) const {
    if (df_) return df_(x);
    const double h = fd_step_;
    return (f_(x + h) - f_(x - h)) / (2.0 * h);
}

FrictionProfile FrictionProfile::power(double p, double scale) {
    if (!(p >= 1.0) || !(scale > 0.0))
        throw std::invalid_argument("power profile: need exponent >= 1 and positive scale");
    FrictionProfile fp;
    fp.lambda0 = [p, scale](double r) { return r > 0.0 ? scale * std::pow(r, p) : 0.0; };
    fp.dlambda0 = [p, scale](double r) { return r > 0.0 ? scale * p * std::pow(r, p - 1.0) : 0.0; };
    fp.C0 = p;
    fp.primitive_ = [p, scale](double r) {
        return r > 0.0 ? scale * std::pow(r, p + 1.0) / (p + 1.0) : 0.0;
    };
    return fp;
}

double FrictionProfile::Lambda0(double r) const {
    if (primitive_) return primitive_(r);
    // Composite Simpson fallback for non-catalog profiles.
    if (r <= 0.0) return 0.0;
    const int n = 256;
    const double h = r / n;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
        const double a = i * h;
        acc += h / 6.0 * (lambda0(a) + 4.0 * lambda0(a + 0.5 * h) + lambda0(a + h));
    }
    return acc;
}

void FrictionProfile::validate_samples(double rmax, int nsamples, double tol) const {
    double prev = 0.0;
    for (int i = 1; i <= nsamples; ++i) {
        const double r = rmax * i / nsamples;
        const double v = lambda0(r);
        if (!(v > 0.0))
            throw std::invalid_argument("friction profile: lambda0 must be positive for r > 0");
        if (v < prev - tol)
            throw std::invalid_argument("friction profile: lambda0 must be nondecreasing");
        if (r * dlambda0(r) > C0 * v + tol)
            throw std::invalid_argument(
                "friction profile: growth bound r*lambda0'(r) <= C0*lambda0(r) violated");
        prev = v;
    }
    if (lambda0(0.0) != 0.0 || lambda0(-rmax) != 0.0)
        throw std::invalid_argument("friction profile: lambda0 must vanish on (-inf, 0]");
}

double signed_distance(const DomainGeometry& geom, double x) {
    if (std::abs(x) > geom.LU * (1.0 + 1e-12))
        throw std::invalid_argument("signed_distance: point outside the closed domain");
    return geom.signed_distance(x);
}

CoefficientSet CoefficientSet::build(ScalarField sigma, ScalarField b, ScalarField lambda,
                                     FrictionMode mode, double xlo, double xhi,
                                     std::optional<FrictionProfile> profile) {
    if (!(xhi > xlo)) throw std::invalid_argument("CoefficientSet: empty sampling window");
    CoefficientSet c;
    c.sigma_ = std::move(sigma);
    c.b_ = std::move(b);
    c.lambda_ = std::move(lambda);
    c.mode_ = mode;
    c.profile_ = std::move(profile);
    c.xlo_ = xlo;
    c.xhi_ = xhi;

    const int ns = 2000;
    double a_min = 1e300, a_max = -1e300, l_min = 1e300, l_max = -1e300;
    for (int i = 0; i <= ns; ++i) {
        const double x = xlo + (xhi - xlo) * i / ns;
        const double av = c.a(x);
        const double lv = c.lambda_(x);
        if (!std::isfinite(av) || !std::isfinite(lv) || !std::isfinite(c.b_(x)))
            throw std::invalid_argument("coefficients: non-finite sample at x=" + std::to_string(x));
        a_min = std::min(a_min, av);
        a_max = std::max(a_max, av);
        l_min = std::min(l_min, lv);
        l_max = std::max(l_max, lv);
    }
    if (!(a_min > 0.0))
        throw std::invalid_argument(
            "coefficients: diffusion violates the uniform ellipticity lower bound (a <= 0 sampled)");
    if (l_min < 0.0)
        throw std::invalid_argument("coefficients: friction violates nonnegativity (lambda < 0 sampled)");
    if (mode == FrictionMode::StrictPositive && !(l_min > 0.0))
        throw std::invalid_argument(
            "coefficients: friction violates the strict positivity assumption (lambda touches 0)");

    c.a_min_ = a_min;
    c.a_max_ = a_max;
    c.lam_min_ = l_min;
    c.lam_max_ = l_max;
    c.theta_ = mode == FrictionMode::StrictPositive ? std::min(a_min, l_min) : a_min;
    c.Theta_ = std::max(a_max, l_max);
    return c;
}

CoefficientSet builtin_coefficients(const std::string& name, const CatalogParams& p) {
    auto sigma_of_a = [](double a0, double aq, double ac) {
        return ScalarField::analytic(
            [=](double x) { return std::sqrt(a0 + aq * (x - ac) * (x - ac)); },
            [=](double x) {
                const double s = std::sqrt(a0 + aq * (x - ac) * (x - ac));
                return aq * (x - ac) / s;
            });
    };
    const ScalarField sigma = sigma_of_a(p.a0, p.a_quad, p.a_center);
    const ScalarField b = ScalarField::analytic([=](double x) { return p.b0 + p.b_slope * x; },
                                                [=](double) { return p.b_slope; });

    if (name == "constant") {
        const ScalarField lam = ScalarField::constant(p.lambda_const);
        const FrictionMode mode =
            p.lambda_const > 0.0 ? FrictionMode::StrictPositive : FrictionMode::Vanishing;
        return CoefficientSet::build(sigma, b, lam, mode, p.xlo, p.xhi);
    }
    if (name == "linear-drift") {
        const ScalarField lam = ScalarField::constant(p.lambda_const);
        return CoefficientSet::build(sigma, b, lam, FrictionMode::StrictPositive, p.xlo, p.xhi);
    }
    if (name == "sin-friction") {
        const double l0 = p.lambda_const, amp = p.lambda_amp;
        const ScalarField lam =
            ScalarField::analytic([=](double x) { return l0 + amp * std::sin(x); },
                                  [=](double x) { return amp * std::cos(x); });
        return CoefficientSet::build(sigma, b, lam, FrictionMode::StrictPositive, p.xlo, p.xhi);
    }
    if (name == "smooth-bump-friction") {
        // lambda = lambda0(d(x)) outside the dead zone, identically 0 on it.
        FrictionProfile prof = FrictionProfile::power(p.bump_power, p.lambda_amp);
        prof.delta0 = p.LV;  // the profile form holds all the way out in this catalog entry
        const double LV = p.LV;
        auto lam0 = prof.lambda0;
        auto dlam0 = prof.dlambda0;
        const ScalarField lam = ScalarField::analytic(
            [=](double x) { return lam0(std::abs(x) - LV); },
            [=](double x) {
                const double s = x >= 0.0 ? 1.0 : -1.0;
                return s * dlam0(std::abs(x) - LV);
            });
        return CoefficientSet::build(sigma, b, lam, FrictionMode::Vanishing, p.xlo, p.xhi, prof);
    }
    throw std::invalid_argument("unknown coefficient catalog entry: " + name);
}

}  // namespace kramers
