#pragma once

#include <optional>
#include <vector>

#include "wlab/extended_real.hpp"

namespace wlab {

// Jacobi-equation solutions u'' + kappa*u = 0:
//   sn_kappa: u(0) = 0, u'(0) = 1      cs_kappa: u(0) = 1, u'(0) = 0
// Piecewise trig / linear / hyperbolic in the sign of kappa. Total functions;
// sn is odd and cs is even by construction (exactly, not just to roundoff).
double sn(double kappa, double t);
double cs(double kappa, double t);

// Positivity horizons: sn_kappa > 0 on (0, R_kappa), cs_kappa > 0 on (0, L_kappa),
// with R_kappa = pi/sqrt(kappa), L_kappa = pi/(2 sqrt(kappa)) for kappa > 0 and
// both +inf for kappa <= 0.
struct Horizon {
    ExtendedReal sn_positive_until;  // R_kappa
    ExtendedReal cs_positive_until;  // L_kappa
};
Horizon horizon(double kappa);

// Maximal solution of the scalar Riccati equation a' + a^2 + K = 0, a(0) = a0,
// in the unified fractional-linear form
//     a(t) = (a0*cs_K(t) - K*sn_K(t)) / (cs_K(t) + a0*sn_K(t)),
// valid for every K. pole_time is the first positive zero of the denominator
// (+inf when there is none); evaluation outside [0, pole_time) throws.
class RiccatiSolution {
public:
    RiccatiSolution(double K, double a0);

    [[nodiscard]] double forcing() const { return K_; }
    [[nodiscard]] double initial() const { return a0_; }
    [[nodiscard]] const ExtendedReal& pole_time() const { return pole_; }

    // a(t) for t in [0, pole_time); throws std::domain_error otherwise.
    [[nodiscard]] double operator()(double t) const;

private:
    double K_;
    double a0_;
    ExtendedReal pole_;
};

inline RiccatiSolution riccati_closed(double K, double a0) { return {K, a0}; }

// Classical RK4 path for a' = -a^2 - K, the independent oracle for the closed
// form. Divergence past |a| > cap is a distinguished outcome, not a failure:
// the path stops and blow_up_time records where it happened.
struct RiccatiPath {
    std::vector<double> times;
    std::vector<double> values;
    std::optional<double> blow_up_time;
};
RiccatiPath riccati_numeric(double K, double a0, double t_end, double step, double cap = 1e8);

// Tubular-width constant:
//   K+ = 0:  1/max{0, kappa+}  (with 1/0 = +inf)
//   K+ != 0: (1/sqrt|K+|) * arccot(kappa+/sqrt|K+|),  arccot valued in (0, pi).
ExtendedReal h_tilde(double K_plus, double kappa_plus);

// Mean-curvature floor -mu(h) <= H(h) where mu solves mu' + mu^2 + K- = 0,
// mu(0) = -kappa-. `uniform` is the h-independent floor -(sqrt|K-| + |kappa-|),
// which never exceeds -mu(h). h must lie in [0, pole time of mu).
struct MeanCurvatureFloor {
    double at_h;     // -mu(h)
    double uniform;  // -(sqrt|K-| + |kappa-|)
};
MeanCurvatureFloor mean_curvature_floor(double K_minus, double kappa_minus, double h);

// Eigenvalues of Hess(eta), eta = (1/2) d_h^2, at distance parameter t = h - s
// from the inner level set: rho_i = t*kappa_i(t) ascending for i < n, rho_n = 1.
// admissible is false when some t*kappa_i exceeds 1 (the inputs left the
// admissible tube); t*kappa_i = 1 itself is admissible.
struct HessEtaSpectrum {
    std::vector<double> rho;
    double t = 0.0;
    bool admissible = true;
};
HessEtaSpectrum hessian_eta_eigs(double t, std::vector<double> curvatures);

}  // namespace wlab
