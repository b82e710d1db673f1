#pragma once

#include <Eigen/Dense>

namespace wlab {

// Dense symmetric eigensolver by cyclic Jacobi rotations. Sweeps row by row
// until the off-diagonal Frobenius norm reaches machine level relative to
// ||A||_F. Deterministic; eigenvalues ascending, eigenvectors as columns.
struct SymEigResult {
    Eigen::VectorXd values;
    Eigen::MatrixXd vectors;  // empty unless requested
    int sweeps = 0;
    double off_norm = 0.0;  // final off-diagonal Frobenius norm
};
SymEigResult jacobi_eigen(Eigen::MatrixXd A, bool want_vectors = false, int max_sweeps = 60);

// Generalized symmetric problem A x = lambda B x with B SPD, reduced by the
// Cholesky congruence B = C C^T to C^{-1} A C^{-T} y = lambda y, x = C^{-T} y.
// Throws std::runtime_error when B fails to factor.
SymEigResult generalized_sym_eigen(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
                                   bool want_vectors = false);

}  // namespace wlab
