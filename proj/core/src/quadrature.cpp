#include "wlab/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace wlab {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

GaussLegendre gauss_legendre(int n) {
    if (n < 1) throw std::invalid_argument("gauss_legendre: n must be >= 1");
    GaussLegendre gl;
    gl.nodes.resize(n);
    gl.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Newton from the Chebyshev-like initial guess.
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        gl.nodes[i] = -x;
        gl.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        gl.weights[i] = w;
        gl.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) gl.nodes[n / 2] = 0.0;
    return gl;
}

GaussLegendre gauss_legendre_on(double a, double b, int n) {
    GaussLegendre gl = gauss_legendre(n);
    const double mid = 0.5 * (a + b);
    const double hw = 0.5 * (b - a);
    for (int i = 0; i < n; ++i) {
        gl.nodes[i] = mid + hw * gl.nodes[i];
        gl.weights[i] *= hw;
    }
    return gl;
}

PolarRule polar_rule(double r0, double r1, int n_radial, int n_angular) {
    if (!(r0 >= 0.0 && r0 < r1)) throw std::invalid_argument("polar_rule: need 0 <= r0 < r1");
    const GaussLegendre rad = gauss_legendre_on(r0, r1, n_radial);
    const GaussLegendre ang = gauss_legendre_on(0.0, 2.0 * kPi, n_angular);
    PolarRule rule;
    rule.n_radial = n_radial;
    rule.n_angular = n_angular;
    rule.r = rad.nodes;
    rule.theta = ang.nodes;
    rule.weight.reserve(static_cast<size_t>(n_radial) * n_angular);
    for (int i = 0; i < n_radial; ++i)
        for (int j = 0; j < n_angular; ++j)
            rule.weight.push_back(rad.weights[i] * ang.weights[j] * rad.nodes[i]);
    return rule;
}

CircleRule circle_rule(double R, int n_angular) {
    if (!(R > 0.0)) throw std::invalid_argument("circle_rule: R must be > 0");
    const GaussLegendre ang = gauss_legendre_on(0.0, 2.0 * kPi, n_angular);
    CircleRule rule;
    rule.theta = ang.nodes;
    rule.weight.resize(ang.weights.size());
    for (size_t i = 0; i < ang.weights.size(); ++i) rule.weight[i] = ang.weights[i] * R;
    return rule;
}

BallRule ball_rule(double R, int nr, int nmu, int nth) {
    if (!(R > 0.0)) throw std::invalid_argument("ball_rule: R must be > 0");
    const GaussLegendre rad = gauss_legendre_on(0.0, R, nr);
    const GaussLegendre pol = gauss_legendre_on(-1.0, 1.0, nmu);
    const GaussLegendre ang = gauss_legendre_on(0.0, 2.0 * kPi, nth);
    BallRule rule;
    rule.nr = nr;
    rule.nmu = nmu;
    rule.nth = nth;
    rule.r = rad.nodes;
    rule.mu = pol.nodes;
    rule.theta = ang.nodes;
    rule.weight.reserve(static_cast<size_t>(nr) * nmu * nth);
    for (int i = 0; i < nr; ++i)
        for (int j = 0; j < nmu; ++j)
            for (int l = 0; l < nth; ++l)
                rule.weight.push_back(rad.weights[i] * pol.weights[j] * ang.weights[l] *
                                      rad.nodes[i] * rad.nodes[i]);
    return rule;
}

SphereRule sphere_rule(double R, int nmu, int nth) {
    if (!(R > 0.0)) throw std::invalid_argument("sphere_rule: R must be > 0");
    const GaussLegendre pol = gauss_legendre_on(-1.0, 1.0, nmu);
    const GaussLegendre ang = gauss_legendre_on(0.0, 2.0 * kPi, nth);
    SphereRule rule;
    rule.nmu = nmu;
    rule.nth = nth;
    rule.mu = pol.nodes;
    rule.theta = ang.nodes;
    rule.weight.reserve(static_cast<size_t>(nmu) * nth);
    for (int j = 0; j < nmu; ++j)
        for (int l = 0; l < nth; ++l)
            rule.weight.push_back(pol.weights[j] * ang.weights[l] * R * R);
    return rule;
}

}  // namespace wlab
