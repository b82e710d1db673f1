#include <doctest.h>

#include <random>

#include <Eigen/Eigenvalues>

#include "wlab/sym_eig.hpp"

using namespace wlab;

namespace {

Eigen::MatrixXd random_symmetric(int n, std::mt19937& rng) {
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    Eigen::MatrixXd A(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) A(i, j) = d(rng);
    return 0.5 * (A + A.transpose().eval());
}

Eigen::MatrixXd random_spd(int n, std::mt19937& rng) {
    const Eigen::MatrixXd S = random_symmetric(n, rng);
    return S * S.transpose() + double(n) * Eigen::MatrixXd::Identity(n, n);
}

}  // namespace

TEST_SUITE("sym_eig") {

TEST_CASE("cyclic jacobi matches the library eigensolver") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + trial;
        const Eigen::MatrixXd A = random_symmetric(n, rng);
        const SymEigResult mine = jacobi_eigen(A, true);
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ref(A);
        const double scale = std::max(1.0, A.norm());
        for (int i = 0; i < n; ++i)
            CHECK(std::fabs(mine.values[i] - ref.eigenvalues()[i]) <= 1e-12 * scale);
        // Residual and orthonormality of the returned vectors.
        for (int i = 0; i < n; ++i) {
            const Eigen::VectorXd v = mine.vectors.col(i);
            CHECK((A * v - mine.values[i] * v).norm() <= 1e-12 * scale);
        }
        CHECK((mine.vectors.transpose() * mine.vectors -
               Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("generalized problem matches the library solver") {
    std::mt19937 rng(777);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 3 + trial;
        const Eigen::MatrixXd A = random_symmetric(n, rng);
        const Eigen::MatrixXd B = random_spd(n, rng);
        const SymEigResult mine = generalized_sym_eigen(A, B, true);
        Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> ref(A, B);
        const double scale = std::max(1.0, ref.eigenvalues().cwiseAbs().maxCoeff());
        for (int i = 0; i < n; ++i)
            CHECK(std::fabs(mine.values[i] - ref.eigenvalues()[i]) <= 1e-11 * scale);
        for (int i = 0; i < n; ++i) {
            const Eigen::VectorXd v = mine.vectors.col(i);
            CHECK((A * v - mine.values[i] * (B * v)).norm() <= 1e-10 * scale * v.norm());
        }
    }
    Eigen::MatrixXd not_spd = -Eigen::MatrixXd::Identity(4, 4);
    CHECK_THROWS_AS(generalized_sym_eigen(Eigen::MatrixXd::Identity(4, 4), not_spd, false),
                    std::runtime_error);
}

TEST_CASE("deterministic output and exact diagonal passthrough") {
    Eigen::MatrixXd D = Eigen::MatrixXd::Zero(4, 4);
    D.diagonal() << 3.0, -1.0, 2.0, 0.5;
    const SymEigResult r = jacobi_eigen(D, false);
    CHECK(r.values[0] == -1.0);
    CHECK(r.values[3] == 3.0);
    CHECK(r.sweeps == 0);  // already diagonal

    std::mt19937 rng(5);
    const Eigen::MatrixXd A = random_symmetric(25, rng);
    const SymEigResult a = jacobi_eigen(A, true);
    const SymEigResult b = jacobi_eigen(A, true);
    CHECK((a.values - b.values).cwiseAbs().maxCoeff() == 0.0);
    CHECK((a.vectors - b.vectors).cwiseAbs().maxCoeff() == 0.0);
}

}  // TEST_SUITE
