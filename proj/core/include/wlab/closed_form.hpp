#pragma once

#include <array>
#include <string>
#include <variant>

#include <Eigen/Dense>

#include "wlab/bounds.hpp"

namespace wlab {

// Test-domain catalog. Lengths positive; annulus needs R_in < R_out;
// ellipse a >= b.
struct DiskSpec {
    double R = 1.0;
};
struct BallSpec {
    int n = 3;
    double R = 1.0;
};
struct AnnulusSpec {
    double R_in = 1.0;
    double R_out = 2.0;
};
struct EllipseSpec {
    double a = 2.0;
    double b = 1.0;
};
struct StarSpec {
    double R = 1.0;
    double eps = 0.1;
    int m = 5;
};
using DomainSpec = std::variant<DiskSpec, BallSpec, AnnulusSpec, EllipseSpec, StarSpec>;

void validate_domain(const DomainSpec& d);  // throws std::invalid_argument
std::string domain_name(const DomainSpec& d);
int domain_dim(const DomainSpec& d);

// |Gamma|: 2*pi*R, sphere area, 2*pi(R_in+R_out), or quadrature arclength.
double boundary_volume(const DomainSpec& d);

// Separation-of-variables spectra. Lists are flattened by multiplicity,
// ascending, truncated to count.
SpectrumTriple disk_spectra(double R, double beta, int count);
SpectrumTriple ball_spectra(int n, double R, double beta, int count);
SpectrumTriple annulus_spectra(double R_in, double R_out, double beta, int count);

bool has_closed_form(const DomainSpec& d);  // disk, ball, annulus
SpectrumTriple closed_form_spectra(const DomainSpec& d, double beta, int count);

// Dimension of the degree-k spherical-harmonic space on S^{n-1}.
long long spherical_harmonic_dim(int n, int k);

// One angular mode of the annulus Wentzel problem as a 2x2 generalized
// eigenproblem T x = lambda M x in the scaled coefficient basis
// {(r/R_out)^k, (R_in/r)^k} (k = 0 uses {1, ln(r/R_out)}).
struct AnnulusMode {
    Eigen::Matrix2d T;
    Eigen::Matrix2d M;
    int k = 0;
};
AnnulusMode annulus_mode_system(double R_in, double R_out, double beta, int k);

// det(T - lambda*M); the roots are the mode's eigenvalues.
double annulus_mode_det(const AnnulusMode& mode, double lambda);

// Both eigenvalues, ascending, via the quadratic formula. Throws on a
// degenerate system (det M ~ 0, which R_in < R_out rules out).
std::array<double, 2> annulus_mode_eigenvalues(const AnnulusMode& mode);

// Curvature bounds, rolling radius, and Ricci/mean data per domain. The star
// domain samples the plane-curve curvature (4096 points, Richardson error
// check) and estimates the rolling radius from curvature and normal-collision
// sampling.
GeometryBounds geometry_of(const DomainSpec& d);

// Signed curvature of the polar curve r(th) = R(1 + eps cos(m th)) w.r.t. the
// outward normal.
double star_curvature(const StarSpec& s, double theta);

}  // namespace wlab
