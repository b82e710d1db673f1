#pragma once

#include <string>
#include <vector>

#include "wlab/extended_real.hpp"

namespace wlab {

// Curvature data of a manifold class. Sectional bounds K-, K+ and principal
// curvature bounds kappa-, kappa+ feed the two-sided class; ricci_K_minus
// ((n-1)*ricci_K_minus <= Ric) and mean_kappa_minus (lower bound on the
// boundary mean curvature) feed the Ricci/mean class used by the Reilly-based
// bound. For flat planar domains K- = K+ = ricci_K_minus = 0.
struct GeometryBounds {
    int dim = 2;
    double K_minus = 0.0;
    double K_plus = 0.0;
    double kappa_minus = 0.0;
    double kappa_plus = 0.0;
    double ricci_K_minus = 0.0;
    double mean_kappa_minus = 0.0;
    double roll = 1.0;  // rolling radius, > 0

    void validate() const;  // throws std::invalid_argument on a bad class
};

// Explicit constants derived from a GeometryBounds:
//   B     = (n-1)(sqrt|K-| + |kappa-|)
//   h~    = h_tilde(K+, kappa+)
//   B_bar = 2(B + 1/h~)          A_bar = 2(B/(n-1) + (n-1)/h~)
// with 1/h~ = 0 when h~ = +inf.
struct DerivedConstants {
    double B = 0.0;
    ExtendedReal h_tilde = ExtendedReal::infinity();
    double B_bar = 0.0;
    double A_bar = 0.0;
};
DerivedConstants derive_constants(const GeometryBounds& g);

// Upper bound (1/sqrt(beta) + sqrt(B_bar + beta*eta_k))^2. Requires beta > 0.
double thm1_bound(double beta, double eta_k, double B_bar);

// Upper bound (1 + beta*A_bar)*lambda_s + beta*lambda_s^2. Requires beta > 0.
double thm2_bound(double beta, double lambda_s, double A_bar);

// Reilly-route upper bound for the class with Ricci lower bound (n-1)K- and
// mean curvature >= kappa- > 0:
//   (1/(2(n-1)kappa-)) * [(K- + 2 eta_k) + sqrt(Q)] + beta*eta_k,
//   Q = (K- + 2 eta_k)^2 - 4 kappa- (n-1) eta_k.
// kappa- <= 0 or Q < 0 make the bound inapplicable; roundoff-negative Q
// (|Q| <= 1e-12 (K-+2 eta_k)^2) is clamped to 0 so sharp cases stay usable.
struct Thm3Result {
    bool applicable = false;
    double value = 0.0;
    double Q = 0.0;
    std::string reason;  // empty when applicable
};
Thm3Result thm3_bound(int n, double K_minus, double kappa_minus, double beta, double eta_k);

// lambda_s_k + beta*eta_k.
double lower_bound(double beta, double lambda_s_k, double eta_k);

// Weyl constant C_n = 2*pi / (omega_{n-1} Vol(Gamma))^{1/(n-1)} with
// omega_{n-1} the volume of the unit (n-1)-ball (omega_1 = 2, omega_2 = pi).
double weyl_constant(int n, double vol_boundary);

enum class WeylKind { steklov, wentzel };

// Leading-order prediction: C_n k^{1/(n-1)} (Steklov) or
// beta C_n^2 k^{2/(n-1)} (Wentzel).
double weyl_predict(WeylKind kind, int n, double vol_boundary, int k, double beta);

// Unit (n-1)-ball volume used in the Weyl normalization.
double unit_ball_volume(int m);

// Sorted eigenvalue lists, repeated by multiplicity; first entry of each is 0.
struct SpectrumTriple {
    double beta = 0.0;
    std::vector<double> steklov;
    std::vector<double> eta;
    std::vector<double> wentzel;

    void validate() const;  // lengths equal, ascending, leading zeros
};

// Grouped view of a flattened ascending list for reports: consecutive values
// within rel_tol * max(1, |v|) collapse into (value, multiplicity).
struct SpectrumGroup {
    double value = 0.0;
    int multiplicity = 0;
};
std::vector<SpectrumGroup> group_spectrum(const std::vector<double>& ascending,
                                          double rel_tol = 1e-9);

// One inequality check against a computed lambda_W.
struct BoundCheck {
    bool applicable = false;
    double value = 0.0;
    double slack = 0.0;  // bound - lambda_w (upper) or lambda_w - bound (lower)
    bool pass = true;
};

struct BoundReport {
    int k = 0;
    double lambda_w = 0.0;
    double lambda_s = 0.0;
    double eta = 0.0;
    BoundCheck lower;   // lambda_s + beta*eta <= lambda_w
    BoundCheck thm1;    // beta > 0 only
    BoundCheck thm2;    // beta > 0 only
    BoundCheck thm3;    // mean_kappa_minus > 0 and Q >= 0 only
    std::string thm3_reason;
};

// An inequality lhs <= rhs passes at tolerance tol when
// lhs <= rhs*(1 + tol) + 1e-12.
bool certified_le(double lhs, double rhs, double tol);

// Per-index reports for all four checks; tol is the relative certification
// tolerance.
std::vector<BoundReport> verify(const SpectrumTriple& spectra, const GeometryBounds& g,
                                double tol = 1e-9);

bool all_pass(const std::vector<BoundReport>& reports);

}  // namespace wlab
