#include "wlab/model_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wlab {

namespace {

constexpr double kPi = 3.14159265358979323846;

// arccot with range (0, pi), continuous across x = 0.
double arccot(double x) { return std::atan2(1.0, x); }

double sn_nonneg(double kappa, double t) {
    if (kappa > 0.0) {
        const double s = std::sqrt(kappa);
        return std::sin(s * t) / s;
    }
    if (kappa < 0.0) {
        const double s = std::sqrt(-kappa);
        return std::sinh(s * t) / s;
    }
    return t;
}

}  // namespace

double sn(double kappa, double t) {
    const double m = sn_nonneg(kappa, std::fabs(t));
    return t < 0.0 ? -m : m;
}

double cs(double kappa, double t) {
    const double a = std::fabs(t);
    if (kappa > 0.0) return std::cos(std::sqrt(kappa) * a);
    if (kappa < 0.0) return std::cosh(std::sqrt(-kappa) * a);
    return 1.0;
}

Horizon horizon(double kappa) {
    if (kappa > 0.0) {
        const double s = std::sqrt(kappa);
        return {ExtendedReal(kPi / s), ExtendedReal(kPi / (2.0 * s))};
    }
    return {ExtendedReal::infinity(), ExtendedReal::infinity()};
}

RiccatiSolution::RiccatiSolution(double K, double a0)
    : K_(K), a0_(a0), pole_(ExtendedReal::infinity()) {
    // Denominator psi(t) = cs_K(t) + a0*sn_K(t); a = psi'/psi. First positive
    // zero of psi is the pole.
    if (K > 0.0) {
        // psi = cos(st) + (a0/s) sin(st): zero when cot(st) = -a0/s.
        const double s = std::sqrt(K);
        pole_ = ExtendedReal(arccot(-a0 / s) / s);
    } else if (K == 0.0) {
        // psi = 1 + a0 t.
        if (a0 < 0.0) pole_ = ExtendedReal(-1.0 / a0);
    } else {
        // psi = cosh(st) + (a0/s) sinh(st): zero iff tanh(st) = -s/a0 in (0,1).
        const double s = std::sqrt(-K);
        if (a0 < -s) pole_ = ExtendedReal(std::atanh(-s / a0) / s);
    }
}

double RiccatiSolution::operator()(double t) const {
    if (t < 0.0) throw std::domain_error("RiccatiSolution: t < 0");
    if (pole_.finite() && t >= pole_.value())
        throw std::domain_error("RiccatiSolution: t at or past pole time");
    const double c = cs(K_, t);
    const double s = sn(K_, t);
    return (a0_ * c - K_ * s) / (c + a0_ * s);
}

RiccatiPath riccati_numeric(double K, double a0, double t_end, double step, double cap) {
    if (step <= 0.0) throw std::invalid_argument("riccati_numeric: step must be > 0");
    RiccatiPath path;
    auto rhs = [K](double a) { return -a * a - K; };
    double t = 0.0;
    double a = a0;
    path.times.push_back(t);
    path.values.push_back(a);
    while (t < t_end) {
        const double h = std::min(step, t_end - t);
        const double k1 = rhs(a);
        const double k2 = rhs(a + 0.5 * h * k1);
        const double k3 = rhs(a + 0.5 * h * k2);
        const double k4 = rhs(a + h * k3);
        a += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t += h;
        if (!std::isfinite(a) || std::fabs(a) > cap) {
            path.blow_up_time = t;
            break;
        }
        path.times.push_back(t);
        path.values.push_back(a);
    }
    return path;
}

ExtendedReal h_tilde(double K_plus, double kappa_plus) {
    if (K_plus == 0.0) {
        const double d = std::max(0.0, kappa_plus);
        if (d == 0.0) return ExtendedReal::infinity();
        return {1.0 / d};
    }
    const double s = std::sqrt(std::fabs(K_plus));
    return {arccot(kappa_plus / s) / s};
}

MeanCurvatureFloor mean_curvature_floor(double K_minus, double kappa_minus, double h) {
    if (h < 0.0) throw std::domain_error("mean_curvature_floor: h must be >= 0");
    const RiccatiSolution mu(K_minus, -kappa_minus);
    if (mu.pole_time().finite() && h >= mu.pole_time().value())
        throw std::domain_error("mean_curvature_floor: h at or past the pole of mu");
    const double uniform = -(std::sqrt(std::fabs(K_minus)) + std::fabs(kappa_minus));
    return {-mu(h), uniform};
}

HessEtaSpectrum hessian_eta_eigs(double t, std::vector<double> curvatures) {
    if (t < 0.0) throw std::domain_error("hessian_eta_eigs: t must be >= 0");
    HessEtaSpectrum out;
    out.t = t;
    out.rho.reserve(curvatures.size() + 1);
    for (double k : curvatures) out.rho.push_back(t * k);
    std::sort(out.rho.begin(), out.rho.end());
    for (double r : out.rho) {
        if (r > 1.0) out.admissible = false;
    }
    out.rho.push_back(1.0);  // normal direction, exact
    return out;
}

}  // namespace wlab
