#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "kramers/grid.hpp"

namespace kramers {

/// Scalar coefficient field on the spatial domain. Catalog fields are
/// closed-form callables with analytic derivatives; tabulated fields use
/// linear interpolation and centered-difference derivatives.
class ScalarField {
  public:
    ScalarField() : ScalarField(constant(0.0)) {}

    static ScalarField constant(double c);
    static ScalarField analytic(std::function<double(double)> f);
    static ScalarField analytic(std::function<double(double)> f,
                                std::function<double(double)> df);
    static ScalarField tabulated(std::vector<double> xs, std::vector<double> ys);

    double operator()(double x) const { return f_(x); }
    double deriv(double x) const;
    bool has_analytic_deriv() const { return static_cast<bool>(df_); }

  private:
    std::function<double(double)> f_;
    std::function<double(double)> df_;
    double fd_step_ = 1e-6;
};

/// Friction profile lambda0 used near the dead-zone boundary:
/// lambda0 == 0 on (-inf, 0], positive and nondecreasing on (0, inf),
/// with r * lambda0'(r) <= C0 * lambda0(r).
struct FrictionProfile {
    std::function<double(double)> lambda0;
    std::function<double(double)> dlambda0;
    double C0 = 3.0;
    double delta0 = 0.5;  // width of the neighborhood where lambda = lambda0(d)

    /// scale * max(r,0)^p; satisfies r*lambda0' = p*lambda0, so C0 = p.
    static FrictionProfile power(double p, double scale = 1.0);

    /// Primitive of lambda0 from 0 (closed form for the power profile).
    double Lambda0(double r) const;

    void validate_samples(double rmax, int nsamples = 1000, double tol = 1e-12) const;

  private:
    std::function<double(double)> primitive_;
    friend FrictionProfile make_profile(std::function<double(double)>, std::function<double(double)>,
                                        double, double, std::function<double(double)>);
};

/// Interval domain U = (-LU, LU) with dead zone V = (-LV, LV).
struct DomainGeometry {
    double LU = 1.0;
    double LV = 0.5;

    DomainGeometry() = default;
    DomainGeometry(double lu, double lv) : LU(lu), LV(lv) {
        if (!(0.0 < LV && LV < LU))
            throw std::invalid_argument("DomainGeometry: need 0 < LV < LU");
    }

    /// Signed distance to the dead-zone boundary, negative inside V. Exact in 1D.
    double signed_distance(double x) const { return std::abs(x) - LV; }
};

/// Free-function form used by callers that validate the domain membership.
double signed_distance(const DomainGeometry& geom, double x);

enum class FrictionMode {
    StrictPositive,  // theta <= lambda <= Theta
    Vanishing        // 0 <= lambda <= Theta, lambda == 0 on the dead zone
};

/// Coefficient bundle with measured ellipticity/friction bounds. The diffusion
/// a is derived from sigma, so a == sigma^2 holds exactly at every point.
/// Immutable after construction and safe to share across threads.
class CoefficientSet {
  public:
    static CoefficientSet build(ScalarField sigma, ScalarField b, ScalarField lambda,
                                FrictionMode mode, double xlo, double xhi,
                                std::optional<FrictionProfile> profile = std::nullopt);

    double a(double x) const {
        const double s = sigma_(x);
        return s * s;
    }
    double b(double x) const { return b_(x); }
    double sigma(double x) const { return sigma_(x); }
    double lambda(double x) const { return lambda_(x); }
    double lambda_deriv(double x) const { return lambda_.deriv(x); }
    double b_deriv(double x) const { return b_.deriv(x); }
    double a_deriv(double x) const { return 2.0 * sigma_(x) * sigma_.deriv(x); }

    double theta() const { return theta_; }
    double Theta() const { return Theta_; }
    double a_min() const { return a_min_; }
    double a_max() const { return a_max_; }
    double lambda_min() const { return lam_min_; }
    double lambda_max() const { return lam_max_; }
    FrictionMode mode() const { return mode_; }
    const std::optional<FrictionProfile>& profile() const { return profile_; }

    double sample_lo() const { return xlo_; }
    double sample_hi() const { return xhi_; }

  private:
    CoefficientSet() = default;

    ScalarField sigma_, b_, lambda_;
    FrictionMode mode_ = FrictionMode::StrictPositive;
    std::optional<FrictionProfile> profile_;
    double theta_ = 0, Theta_ = 0;
    double a_min_ = 0, a_max_ = 0, lam_min_ = 0, lam_max_ = 0;
    double xlo_ = 0, xhi_ = 0;
};

/// Named parameters for the coefficient catalog.
struct CatalogParams {
    double a0 = 1.0;        // a = a0 + a_quad * (x - a_center)^2
    double a_quad = 0.0;
    double a_center = 0.0;
    double b0 = 0.0;        // b = b0 + b_slope * x
    double b_slope = 0.0;
    double lambda_const = 1.0;  // constant / sin-friction base level
    double lambda_amp = 1.0;    // sin-friction amplitude, or bump profile scale
    double bump_power = 3.0;    // exponent p of the power profile
    double LV = 0.5;            // dead-zone half width (smooth-bump-friction)
    double xlo = -1.0;          // sampling window for the measured bounds
    double xhi = 1.0;
};

/// Catalog entries: "constant", "smooth-bump-friction", "linear-drift",
/// "sin-friction". Tabulated fields go through CoefficientSet::build directly.
CoefficientSet builtin_coefficients(const std::string& name, const CatalogParams& params);

}  // namespace kramers
