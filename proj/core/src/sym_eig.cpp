#include "wlab/sym_eig.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace wlab {

namespace {

double off_diagonal_norm(const Eigen::MatrixXd& A) {
    double s = 0.0;
    const auto n = A.rows();
    for (Eigen::Index p = 0; p < n; ++p)
        for (Eigen::Index q = p + 1; q < n; ++q) s += A(p, q) * A(p, q);
    return std::sqrt(2.0 * s);
}

}  // namespace

SymEigResult jacobi_eigen(Eigen::MatrixXd A, bool want_vectors, int max_sweeps) {
    const Eigen::Index n = A.rows();
    if (A.cols() != n) throw std::invalid_argument("jacobi_eigen: matrix must be square");
    SymEigResult out;
    Eigen::MatrixXd V;
    if (want_vectors) V = Eigen::MatrixXd::Identity(n, n);

    const double norm = std::max(A.norm(), 1e-300);
    const double target = 1e-15 * norm;

    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        const double off = off_diagonal_norm(A);
        if (off <= target) break;
        // Threshold keeps early sweeps from chasing negligible entries.
        const double thresh = (sweep < 3) ? 0.1 * off / double(n * n) : 0.0;
        bool rotated = false;
        for (Eigen::Index p = 0; p < n - 1; ++p) {
            for (Eigen::Index q = p + 1; q < n; ++q) {
                const double apq = A(p, q);
                const double small =
                    1e-18 * std::sqrt(std::fabs(A(p, p) * A(q, q)) + 1e-300);
                if (std::fabs(apq) <= std::max(thresh, small)) continue;
                const double theta = 0.5 * (A(q, q) - A(p, p)) / apq;
                double t = 1.0 / (std::fabs(theta) + std::sqrt(1.0 + theta * theta));
                if (theta < 0.0) t = -t;
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const double tau = s / (1.0 + c);
                const double h = t * apq;
                A(p, p) -= h;
                A(q, q) += h;
                A(p, q) = 0.0;
                A(q, p) = 0.0;
                for (Eigen::Index i = 0; i < n; ++i) {
                    if (i == p || i == q) continue;
                    const double aip = A(i, p);
                    const double aiq = A(i, q);
                    A(i, p) = aip - s * (aiq + tau * aip);
                    A(p, i) = A(i, p);
                    A(i, q) = aiq + s * (aip - tau * aiq);
                    A(q, i) = A(i, q);
                }
                if (want_vectors) {
                    for (Eigen::Index i = 0; i < n; ++i) {
                        const double vip = V(i, p);
                        const double viq = V(i, q);
                        V(i, p) = vip - s * (viq + tau * vip);
                        V(i, q) = viq + s * (vip - tau * viq);
                    }
                }
                rotated = true;
            }
        }
        if (!rotated) break;
    }

    out.sweeps = sweep;
    out.off_norm = off_diagonal_norm(A);

    std::vector<Eigen::Index> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index a, Eigen::Index b) { return A(a, a) < A(b, b); });
    out.values.resize(n);
    for (Eigen::Index i = 0; i < n; ++i) out.values[i] = A(order[i], order[i]);
    if (want_vectors) {
        out.vectors.resize(n, n);
        for (Eigen::Index i = 0; i < n; ++i) out.vectors.col(i) = V.col(order[i]);
    }
    return out;
}

SymEigResult generalized_sym_eigen(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
                                   bool want_vectors) {
    Eigen::LLT<Eigen::MatrixXd> llt(B);
    if (llt.info() != Eigen::Success)
        throw std::runtime_error("generalized_sym_eigen: B is not positive definite");
    const Eigen::MatrixXd L = llt.matrixL();
    // S = L^{-1} A L^{-T}, symmetrized against roundoff drift.
    Eigen::MatrixXd S = L.triangularView<Eigen::Lower>().solve(A);
    S = L.triangularView<Eigen::Lower>().solve(S.transpose().eval());
    S = 0.5 * (S + S.transpose().eval());
    SymEigResult res = jacobi_eigen(std::move(S), want_vectors);
    if (want_vectors)
        res.vectors = L.transpose().triangularView<Eigen::Upper>().solve(res.vectors);
    return res;
}

}  // namespace wlab
