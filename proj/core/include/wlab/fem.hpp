#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Sparse>

#include "wlab/bounds.hpp"
#include "wlab/mesh.hpp"

namespace wlab {

// Assembled P1 system: global stiffness (entries int grad phi_i . grad phi_j),
// consistent boundary mass |e|/6 [[2,1],[1,2]] and boundary stiffness
// (1/|e|) [[1,-1],[-1,1]] on the boundary vertices, plus the
// boundary/interior partition (both in ascending global order).
struct DtNSystem {
    Eigen::SparseMatrix<double> A;
    Eigen::MatrixXd Mb;
    Eigen::MatrixXd Lb;
    std::vector<int> boundary;
    std::vector<int> interior;
    std::vector<int> global_to_boundary;  // -1 for interior vertices
    int n_loops = 0;

    [[nodiscard]] int boundary_size() const { return static_cast<int>(boundary.size()); }
};

DtNSystem assemble(const Mesh& m);

struct DtnDiagnostics {
    std::string method;  // "ldlt" or "pcg"
    int columns = 0;
    double max_rel_residual = 0.0;
    int max_iterations = 0;
};

// Discrete Dirichlet-to-Neumann matrix N = A_GG - A_GI A_II^{-1} A_IG on the
// boundary vertices (symmetrized Schur complement). Interior solves are a
// direct LDLT for interior size <= 4000 and IC-preconditioned CG otherwise;
// every column must reach a 1e-10 relative residual or the call throws with
// diagnostics.
Eigen::MatrixXd dtn_matrix(const DtNSystem& s, DtnDiagnostics* diag = nullptr);

struct DiscreteSpectra {
    std::vector<double> values;  // ascending
    Eigen::MatrixXd vectors;     // boundary vectors as columns when requested
};

// (N + beta*Lb) v = lambda Mb v via Cholesky congruence + cyclic Jacobi.
// beta = 0 is the Steklov list. count must not exceed the boundary size.
DiscreteSpectra solve_spectrum(const DtNSystem& s, double beta, int count,
                               bool want_vectors = false);
// Same, reusing a precomputed DtN matrix (beta sweeps).
DiscreteSpectra solve_spectrum_with(const Eigen::MatrixXd& N, const DtNSystem& s, double beta,
                                    int count, bool want_vectors = false);

// Lb w = eta Mb w, the boundary-Laplacian list.
DiscreteSpectra boundary_laplace_spectrum(const DtNSystem& s, int count,
                                          bool want_vectors = false);

// Interior values solving A_II u_I = -A_IG u_G for boundary data u_G indexed
// like s.boundary; returns the full nodal field.
Eigen::VectorXd harmonic_extension(const DtNSystem& s, const Eigen::VectorXd& boundary_values);

// Discrete Dirichlet energy u^T A u of a full nodal field.
double dirichlet_energy(const DtNSystem& s, const Eigen::VectorXd& field);

// Steklov / boundary-Laplacian / Wentzel triple from one assembled system
// (N computed once).
SpectrumTriple fem_spectrum_triple(const DtNSystem& s, double beta, int count);
SpectrumTriple fem_spectrum_triple_with(const Eigen::MatrixXd& N, const DtNSystem& s,
                                        double beta, int count);

}  // namespace wlab
