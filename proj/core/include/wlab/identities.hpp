#pragma once

#include <functional>
#include <string>
#include <vector>

#include "wlab/test_functions.hpp"

namespace wlab {

struct IdentityResult {
    double residual = 0.0;  // |lhs - rhs| / (|lhs| + |rhs|), 0 when both vanish
    double lhs = 0.0;
    double rhs = 0.0;
    int quad_radial = 0;
    int quad_angular = 0;
};

// Rayleigh-quotient decomposition for a harmonic u on the disk of radius R,
// with tube width h in (0, R), eta = (1/2)(h - d_Gamma)^2. Both sides of the
// div-form identity (Laplacian written as div grad, flat metric):
//   lhs = beta * int_Gamma |grad_Gamma u|^2
//   rhs = (beta/h) * int_{M_h} (|grad u|^2 div(grad eta)
//                               - 2 Hess eta(grad u, grad u))
//         + beta * int_Gamma (du/dn)^2
// The sign layout was fixed once against the divergence-theorem oracle and is
// hard-coded here.
IdentityResult poh_residual(double R, const Field2D& u, double h, double beta,
                            int quad_radial = 32, int quad_angular = 64);

// Reilly's identity on flat domains (Ric = 0), with the boundary Laplacian in
// the -div grad convention and H the trace of the second fundamental form:
//   int_M (tr Hess f)^2 - |Hess f|^2
//     = int_Gamma H v^2 - 2 v (Delta_Gamma z) + (1/R) |grad_Gamma z|^2,
// v = df/dn, z = f|_Gamma.
IdentityResult reilly_residual_disk(double R, const Field2D& f, int quad_radial = 32,
                                    int quad_angular = 64);
IdentityResult reilly_residual_ball(double R, const Field3D& f, int quad_radial = 32,
                                    int quad_polar = 32, int quad_angular = 64);

// Analytic polar Hessian eigenvalues of eta = (1/2)(r - R + h)^2 (radial 1,
// tangential (r - R + h)/r) against the t*kappa rule; max deviation over
// `samples` radii in (R - h, R].
double hess_eta_polar_check(double R, double h, int samples);

// Planar vector field with closed-form divergence for the divergence-theorem
// oracle.
struct VectorField2D {
    std::string name;
    std::function<Eigen::Vector2d(double, double)> value;
    std::function<double(double, double)> divergence;
};
std::vector<VectorField2D> divergence_catalog();

// | int_M div F - int_Gamma F.n | on the annulus {r0 <= r <= R} (disk when
// r0 = 0), normalized.
IdentityResult divergence_theorem_oracle(double r0, double R, const VectorField2D& F,
                                         int quad_radial = 32, int quad_angular = 64);

}  // namespace wlab
