#pragma once

#include <vector>

namespace wlab {

// Gauss-Legendre nodes/weights on [-1, 1]; exact for polynomials of degree
// 2n - 1 (the exactness is pinned by tests).
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussLegendre gauss_legendre(int n);

// Nodes/weights mapped to [a, b].
GaussLegendre gauss_legendre_on(double a, double b, int n);

// Tensor rule on the polar annulus {r0 <= r <= r1} x [0, 2pi): the weight
// includes the polar Jacobian r.
struct PolarRule {
    std::vector<double> r;
    std::vector<double> theta;
    std::vector<double> weight;  // flattened, radial-major
    int n_radial = 0;
    int n_angular = 0;

    template <typename F>
    double integrate(F&& f) const {
        double total = 0.0;
        int k = 0;
        for (int i = 0; i < n_radial; ++i)
            for (int j = 0; j < n_angular; ++j, ++k) total += weight[k] * f(r[i], theta[j]);
        return total;
    }
};
PolarRule polar_rule(double r0, double r1, int n_radial, int n_angular);

// Boundary circle of radius R: ds = R dtheta.
struct CircleRule {
    std::vector<double> theta;
    std::vector<double> weight;

    template <typename F>
    double integrate(F&& f) const {
        double total = 0.0;
        for (size_t i = 0; i < theta.size(); ++i) total += weight[i] * f(theta[i]);
        return total;
    }
};
CircleRule circle_rule(double R, int n_angular);

// Solid ball of radius R in spherical coordinates (r, mu = cos(phi), theta);
// weights include r^2 (the d(mu) substitution absorbs sin(phi)).
struct BallRule {
    std::vector<double> r;
    std::vector<double> mu;
    std::vector<double> theta;
    std::vector<double> weight;  // flattened r-major, then mu, then theta
    int nr = 0, nmu = 0, nth = 0;

    template <typename F>
    double integrate(F&& f) const {
        double total = 0.0;
        int k = 0;
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nmu; ++j)
                for (int l = 0; l < nth; ++l, ++k) total += weight[k] * f(r[i], mu[j], theta[l]);
        return total;
    }
};
BallRule ball_rule(double R, int nr, int nmu, int nth);

// Sphere of radius R: dS = R^2 dmu dtheta.
struct SphereRule {
    std::vector<double> mu;
    std::vector<double> theta;
    std::vector<double> weight;  // flattened mu-major
    int nmu = 0, nth = 0;

    template <typename F>
    double integrate(F&& f) const {
        double total = 0.0;
        int k = 0;
        for (int j = 0; j < nmu; ++j)
            for (int l = 0; l < nth; ++l, ++k) total += weight[k] * f(mu[j], theta[l]);
        return total;
    }
};
SphereRule sphere_rule(double R, int nmu, int nth);

}  // namespace wlab
