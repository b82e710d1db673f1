#include "wlab/fem.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/IterativeLinearSolvers>
#include <Eigen/SparseCholesky>

#include "wlab/sym_eig.hpp"

namespace wlab {

namespace {

// Direct factorization up to this interior size, preconditioned CG above.
// Sparse LDLT handles every desk-scale mesh in this repo; CG is the escape
// hatch for meshes far past that.
constexpr int kDirectSolveLimit = 60000;
constexpr double kColumnResidualLimit = 1e-10;

}  // namespace

DtNSystem assemble(const Mesh& m) {
    if (m.boundary_loops.empty())
        throw std::invalid_argument("assemble: mesh has no boundary loops (not finalized?)");
    DtNSystem s;
    const int nv = m.num_vertices();

    std::vector<Eigen::Triplet<double>> trips;
    trips.reserve(9 * m.triangles.size());
    for (int t = 0; t < m.num_triangles(); ++t) {
        const auto& tri = m.triangles[t];
        const Eigen::Vector2d p0 = m.vertices[tri[0]];
        const Eigen::Vector2d p1 = m.vertices[tri[1]];
        const Eigen::Vector2d p2 = m.vertices[tri[2]];
        const double area = triangle_area(m, t);
        // Constant P1 gradients: grad lambda_i = perp(opposite edge) / (2 area).
        const Eigen::Vector2d e0 = p2 - p1;
        const Eigen::Vector2d e1 = p0 - p2;
        const Eigen::Vector2d e2 = p1 - p0;
        const Eigen::Vector2d g[3] = {Eigen::Vector2d(-e0.y(), e0.x()) / (2.0 * area),
                                      Eigen::Vector2d(-e1.y(), e1.x()) / (2.0 * area),
                                      Eigen::Vector2d(-e2.y(), e2.x()) / (2.0 * area)};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                trips.emplace_back(tri[i], tri[j], area * g[i].dot(g[j]));
    }
    s.A.resize(nv, nv);
    s.A.setFromTriplets(trips.begin(), trips.end());

    // Partition in ascending global order.
    std::vector<bool> on_boundary(nv, false);
    for (const auto& loop : m.boundary_loops)
        for (int v : loop) on_boundary[v] = true;
    s.global_to_boundary.assign(nv, -1);
    for (int v = 0; v < nv; ++v) {
        if (on_boundary[v]) {
            s.global_to_boundary[v] = static_cast<int>(s.boundary.size());
            s.boundary.push_back(v);
        } else {
            s.interior.push_back(v);
        }
    }
    s.n_loops = static_cast<int>(m.boundary_loops.size());

    const int nb = s.boundary_size();
    s.Mb = Eigen::MatrixXd::Zero(nb, nb);
    s.Lb = Eigen::MatrixXd::Zero(nb, nb);
    for (const auto& loop : m.boundary_loops) {
        const int len = static_cast<int>(loop.size());
        for (int e = 0; e < len; ++e) {
            const int u = loop[e];
            const int v = loop[(e + 1) % len];
            const double h = (m.vertices[u] - m.vertices[v]).norm();
            const int bu = s.global_to_boundary[u];
            const int bv = s.global_to_boundary[v];
            s.Mb(bu, bu) += h / 3.0;
            s.Mb(bv, bv) += h / 3.0;
            s.Mb(bu, bv) += h / 6.0;
            s.Mb(bv, bu) += h / 6.0;
            s.Lb(bu, bu) += 1.0 / h;
            s.Lb(bv, bv) += 1.0 / h;
            s.Lb(bu, bv) -= 1.0 / h;
            s.Lb(bv, bu) -= 1.0 / h;
        }
    }
    return s;
}

namespace {

struct Partitioned {
    Eigen::SparseMatrix<double> AII;
    Eigen::SparseMatrix<double> AIB;  // interior x boundary
    Eigen::MatrixXd ABB;
};

Partitioned split(const DtNSystem& s) {
    const int ni = static_cast<int>(s.interior.size());
    const int nb = s.boundary_size();
    std::vector<int> global_to_interior(s.A.rows(), -1);
    for (int i = 0; i < ni; ++i) global_to_interior[s.interior[i]] = i;

    Partitioned p;
    p.ABB = Eigen::MatrixXd::Zero(nb, nb);
    std::vector<Eigen::Triplet<double>> tii, tib;
    for (int col = 0; col < s.A.outerSize(); ++col) {
        for (Eigen::SparseMatrix<double>::InnerIterator it(s.A, col); it; ++it) {
            const int gi = static_cast<int>(it.row());
            const int gj = static_cast<int>(it.col());
            const int bi = s.global_to_boundary[gi];
            const int bj = s.global_to_boundary[gj];
            if (bi < 0 && bj < 0)
                tii.emplace_back(global_to_interior[gi], global_to_interior[gj], it.value());
            else if (bi < 0 && bj >= 0)
                tib.emplace_back(global_to_interior[gi], bj, it.value());
            else if (bi >= 0 && bj >= 0)
                p.ABB(bi, bj) += it.value();
        }
    }
    p.AII.resize(ni, ni);
    p.AII.setFromTriplets(tii.begin(), tii.end());
    p.AIB.resize(ni, nb);
    p.AIB.setFromTriplets(tib.begin(), tib.end());
    return p;
}

// Multi-right-hand-side interior solve following the size policy.
Eigen::MatrixXd interior_solve(const Eigen::SparseMatrix<double>& AII, const Eigen::MatrixXd& B,
                               DtnDiagnostics* diag) {
    const int ni = static_cast<int>(AII.rows());
    Eigen::MatrixXd X(ni, B.cols());
    double max_res = 0.0;
    int max_iter = 0;
    std::string method;
    if (ni <= kDirectSolveLimit) {
        method = "ldlt";
        Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> solver(AII);
        if (solver.info() != Eigen::Success)
            throw std::runtime_error("dtn_matrix: interior LDLT factorization failed");
        X = solver.solve(B);
    } else {
        method = "pcg";
        Eigen::ConjugateGradient<Eigen::SparseMatrix<double>, Eigen::Lower | Eigen::Upper,
                                 Eigen::IncompleteCholesky<double>>
            solver;
        solver.setTolerance(1e-13);
        solver.setMaxIterations(20000);
        solver.compute(AII);
        if (solver.info() != Eigen::Success)
            throw std::runtime_error("dtn_matrix: IC preconditioner setup failed");
        for (int j = 0; j < B.cols(); ++j) {
            X.col(j) = solver.solve(B.col(j));
            max_iter = std::max(max_iter, static_cast<int>(solver.iterations()));
        }
    }
    for (int j = 0; j < B.cols(); ++j) {
        const double bn = B.col(j).norm();
        if (bn == 0.0) continue;
        max_res = std::max(max_res, (AII * X.col(j) - B.col(j)).norm() / bn);
    }
    if (diag) {
        diag->method = method;
        diag->columns = static_cast<int>(B.cols());
        diag->max_rel_residual = max_res;
        diag->max_iterations = max_iter;
    }
    if (max_res > kColumnResidualLimit)
        throw std::runtime_error("dtn_matrix: interior solve residual " +
                                 std::to_string(max_res) + " exceeds 1e-10 (" + method + ")");
    return X;
}

}  // namespace

Eigen::MatrixXd dtn_matrix(const DtNSystem& s, DtnDiagnostics* diag) {
    const Partitioned p = split(s);
    if (s.interior.empty()) {
        if (diag) *diag = {"none", 0, 0.0, 0};
        return p.ABB;
    }
    const Eigen::MatrixXd X = interior_solve(p.AII, Eigen::MatrixXd(p.AIB), diag);
    Eigen::MatrixXd N = p.ABB - Eigen::MatrixXd(p.AIB.transpose()) * X;
    N = 0.5 * (N + N.transpose().eval());
    return N;
}

DiscreteSpectra solve_spectrum_with(const Eigen::MatrixXd& N, const DtNSystem& s, double beta,
                                    int count, bool want_vectors) {
    if (beta < 0.0) throw std::invalid_argument("solve_spectrum: beta must be >= 0");
    if (count < 1 || count > s.boundary_size())
        throw std::invalid_argument("solve_spectrum: count must be in [1, boundary size]");
    Eigen::MatrixXd G = N;
    if (beta > 0.0) G += beta * s.Lb;
    SymEigResult res = generalized_sym_eigen(G, s.Mb, want_vectors);
    DiscreteSpectra out;
    out.values.assign(res.values.data(), res.values.data() + count);
    if (want_vectors) out.vectors = res.vectors.leftCols(count);
    return out;
}

DiscreteSpectra solve_spectrum(const DtNSystem& s, double beta, int count, bool want_vectors) {
    return solve_spectrum_with(dtn_matrix(s), s, beta, count, want_vectors);
}

DiscreteSpectra boundary_laplace_spectrum(const DtNSystem& s, int count, bool want_vectors) {
    if (count < 1 || count > s.boundary_size())
        throw std::invalid_argument("boundary_laplace_spectrum: bad count");
    SymEigResult res = generalized_sym_eigen(s.Lb, s.Mb, want_vectors);
    DiscreteSpectra out;
    out.values.assign(res.values.data(), res.values.data() + count);
    if (want_vectors) out.vectors = res.vectors.leftCols(count);
    return out;
}

Eigen::VectorXd harmonic_extension(const DtNSystem& s, const Eigen::VectorXd& boundary_values) {
    if (boundary_values.size() != s.boundary_size())
        throw std::invalid_argument("harmonic_extension: boundary data size mismatch");
    Eigen::VectorXd field = Eigen::VectorXd::Zero(s.A.rows());
    for (int b = 0; b < s.boundary_size(); ++b) field[s.boundary[b]] = boundary_values[b];
    if (s.interior.empty()) return field;
    const Partitioned p = split(s);
    const Eigen::MatrixXd rhs = -(p.AIB * boundary_values);
    const Eigen::MatrixXd ui = interior_solve(p.AII, rhs, nullptr);
    for (size_t i = 0; i < s.interior.size(); ++i)
        field[s.interior[i]] = ui(static_cast<Eigen::Index>(i), 0);
    return field;
}

double dirichlet_energy(const DtNSystem& s, const Eigen::VectorXd& field) {
    return field.dot(s.A * field);
}

namespace {

// The kernels are known exactly (constants for N and N + beta*Lb, one
// locally-constant mode per boundary loop for Lb); report them as exact
// zeros when the solver lands within its 1e-10 contract.
void snap_kernel(std::vector<double>& values, int kernel_dim) {
    for (int i = 0; i < kernel_dim && i < static_cast<int>(values.size()); ++i)
        if (std::fabs(values[i]) <= 1e-10) values[i] = 0.0;
}

}  // namespace

SpectrumTriple fem_spectrum_triple_with(const Eigen::MatrixXd& N, const DtNSystem& s,
                                        double beta, int count) {
    SpectrumTriple t;
    t.beta = beta;
    t.steklov = solve_spectrum_with(N, s, 0.0, count).values;
    t.eta = boundary_laplace_spectrum(s, count).values;
    t.wentzel = (beta == 0.0) ? t.steklov : solve_spectrum_with(N, s, beta, count).values;
    snap_kernel(t.steklov, 1);
    snap_kernel(t.wentzel, 1);
    snap_kernel(t.eta, s.n_loops);
    return t;
}

SpectrumTriple fem_spectrum_triple(const DtNSystem& s, double beta, int count) {
    return fem_spectrum_triple_with(dtn_matrix(s), s, beta, count);
}

}  // namespace wlab
