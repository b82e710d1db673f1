#include "wlab/identities.hpp"

#include <cmath>
#include <stdexcept>

#include "wlab/model_geometry.hpp"
#include "wlab/quadrature.hpp"

namespace wlab {

namespace {

// scale is the absolute-value mass of the identity's terms; it keeps the
// residual well conditioned when both sides cancel to 0 analytically.
double normalized(double lhs, double rhs, double scale) {
    const double denom = std::max(std::fabs(lhs) + std::fabs(rhs), scale);
    if (denom == 0.0) return 0.0;
    return std::fabs(lhs - rhs) / denom;
}

}  // namespace

IdentityResult poh_residual(double R, const Field2D& u, double h, double beta, int quad_radial,
                            int quad_angular) {
    if (!(h > 0.0 && h < R)) throw std::domain_error("poh_residual: need 0 < h < R");
    const CircleRule bdry = circle_rule(R, quad_angular);
    const PolarRule tube = polar_rule(R - h, R, quad_radial, quad_angular);

    // Boundary pieces at r = R: tangential and normal gradient components.
    const double gamma_energy = bdry.integrate([&](double th) {
        const double c = std::cos(th), s = std::sin(th);
        const Eigen::Vector2d g = u.grad(R * c, R * s);
        const double gt = -g.x() * s + g.y() * c;
        return gt * gt;
    });
    const double normal_energy = bdry.integrate([&](double th) {
        const double c = std::cos(th), s = std::sin(th);
        const Eigen::Vector2d g = u.grad(R * c, R * s);
        const double gn = g.x() * c + g.y() * s;
        return gn * gn;
    });

    // Tube integral of |grad u|^2 div(grad eta) - 2 Hess eta(grad u, grad u)
    // with grad eta = (r - R + h) e_r, div grad eta = 2 - (R - h)/r and
    // Hess eta = diag(1, (r - R + h)/r) in the polar frame.
    const double tube_term = tube.integrate([&](double r, double th) {
        const double c = std::cos(th), s = std::sin(th);
        const Eigen::Vector2d g = u.grad(r * c, r * s);
        const double gr = g.x() * c + g.y() * s;
        const double gt = -g.x() * s + g.y() * c;
        const double rho = r - R + h;
        const double div_grad_eta = 2.0 - (R - h) / r;
        const double hess_eta_gg = gr * gr + (rho / r) * gt * gt;
        return g.squaredNorm() * div_grad_eta - 2.0 * hess_eta_gg;
    });

    IdentityResult out;
    out.lhs = beta * gamma_energy;
    out.rhs = (beta / h) * tube_term + beta * normal_energy;
    out.residual = normalized(out.lhs, out.rhs, 0.0);
    out.quad_radial = quad_radial;
    out.quad_angular = quad_angular;
    return out;
}

IdentityResult reilly_residual_disk(double R, const Field2D& f, int quad_radial,
                                    int quad_angular) {
    const PolarRule vol = polar_rule(0.0, R, quad_radial, quad_angular);
    const CircleRule bdry = circle_rule(R, quad_angular);
    const double H = 1.0 / R;  // trace of the second fundamental form (n = 2)

    const double lhs = vol.integrate([&](double r, double th) {
        const Eigen::Matrix2d hess = f.hess(r * std::cos(th), r * std::sin(th));
        const double lap = hess.trace();
        return lap * lap - hess.squaredNorm();
    });
    const double lhs_abs = vol.integrate([&](double r, double th) {
        const Eigen::Matrix2d hess = f.hess(r * std::cos(th), r * std::sin(th));
        const double lap = hess.trace();
        return lap * lap + hess.squaredNorm();
    });
    double rhs_abs = 0.0;
    auto boundary_terms = [&](double th, bool absolute) {
        const double c = std::cos(th), s = std::sin(th);
        const double x = R * c, y = R * s;
        const Eigen::Vector2d n(c, s);
        const Eigen::Vector2d g = f.grad(x, y);
        const Eigen::Matrix2d hess = f.hess(x, y);
        const double v = g.dot(n);
        const double tang2 = g.squaredNorm() - v * v;
        // Surface splitting: Delta f = Delta_Gamma z + Hess f(n,n) + H v, so
        // the geometer's Delta_Gamma z is minus the leftover.
        const double lap_gamma_geom = -(hess.trace() - n.dot(hess * n) - H * v);
        if (absolute)
            return H * v * v + 2.0 * std::fabs(v * lap_gamma_geom) + (1.0 / R) * tang2;
        return H * v * v - 2.0 * v * lap_gamma_geom + (1.0 / R) * tang2;
    };
    const double rhs = bdry.integrate([&](double th) { return boundary_terms(th, false); });
    rhs_abs = bdry.integrate([&](double th) { return boundary_terms(th, true); });

    IdentityResult out;
    out.lhs = lhs;
    out.rhs = rhs;
    out.residual = normalized(lhs, rhs, lhs_abs + rhs_abs);
    out.quad_radial = quad_radial;
    out.quad_angular = quad_angular;
    return out;
}

IdentityResult reilly_residual_ball(double R, const Field3D& f, int quad_radial, int quad_polar,
                                    int quad_angular) {
    const BallRule vol = ball_rule(R, quad_radial, quad_polar, quad_angular);
    const SphereRule bdry = sphere_rule(R, quad_polar, quad_angular);
    const double H = 2.0 / R;  // trace of the second fundamental form (n = 3)

    auto cart = [&](double mu, double th, double radius) -> Eigen::Vector3d {
        const double sphi = std::sqrt(std::max(0.0, 1.0 - mu * mu));
        return {radius * sphi * std::cos(th), radius * sphi * std::sin(th), radius * mu};
    };

    const double lhs = vol.integrate([&](double r, double mu, double th) {
        const Eigen::Vector3d p = cart(mu, th, r);
        const Eigen::Matrix3d hess = f.hess(p.x(), p.y(), p.z());
        const double lap = hess.trace();
        return lap * lap - hess.squaredNorm();
    });
    const double lhs_abs = vol.integrate([&](double r, double mu, double th) {
        const Eigen::Vector3d p = cart(mu, th, r);
        const Eigen::Matrix3d hess = f.hess(p.x(), p.y(), p.z());
        const double lap = hess.trace();
        return lap * lap + hess.squaredNorm();
    });
    auto boundary_terms = [&](double mu, double th, bool absolute) {
        const Eigen::Vector3d p = cart(mu, th, R);
        const Eigen::Vector3d n = p / R;
        const Eigen::Vector3d g = f.grad(p.x(), p.y(), p.z());
        const Eigen::Matrix3d hess = f.hess(p.x(), p.y(), p.z());
        const double v = g.dot(n);
        const double tang2 = g.squaredNorm() - v * v;
        const double lap_gamma_geom = -(hess.trace() - n.dot(hess * n) - H * v);
        if (absolute)
            return H * v * v + 2.0 * std::fabs(v * lap_gamma_geom) + (1.0 / R) * tang2;
        return H * v * v - 2.0 * v * lap_gamma_geom + (1.0 / R) * tang2;
    };
    const double rhs = bdry.integrate([&](double mu, double th) {
        return boundary_terms(mu, th, false);
    });
    const double rhs_abs = bdry.integrate([&](double mu, double th) {
        return boundary_terms(mu, th, true);
    });

    IdentityResult out;
    out.lhs = lhs;
    out.rhs = rhs;
    out.residual = normalized(lhs, rhs, lhs_abs + rhs_abs);
    out.quad_radial = quad_radial;
    out.quad_angular = quad_angular;
    return out;
}

double hess_eta_polar_check(double R, double h, int samples) {
    if (!(h > 0.0 && h < R)) throw std::domain_error("hess_eta_polar_check: need 0 < h < R");
    if (samples < 1) throw std::invalid_argument("hess_eta_polar_check: samples must be >= 1");
    double max_dev = 0.0;
    for (int i = 0; i < samples; ++i) {
        // Radii in (R - h, R]; t = h - s with s = R - r.
        const double r = R - h + h * (i + 1.0) / samples;
        const double s = R - r;
        const double t = h - s;
        // Direct polar Hessian of eta = (1/2)(r - R + h)^2: radial 1,
        // tangential eta'/r.
        const double tangential_direct = (r - R + h) / r;
        const HessEtaSpectrum spec = hessian_eta_eigs(t, {1.0 / (R - s)});
        max_dev = std::max(max_dev, std::fabs(tangential_direct - spec.rho[0]));
        max_dev = std::max(max_dev, std::fabs(1.0 - spec.rho[1]));
    }
    return max_dev;
}

std::vector<VectorField2D> divergence_catalog() {
    std::vector<VectorField2D> out;
    out.push_back({"radial",
                   [](double x, double y) { return Eigen::Vector2d(x, y); },
                   [](double, double) { return 2.0; }});
    out.push_back({"constant",
                   [](double, double) { return Eigen::Vector2d(1.0, 0.0); },
                   [](double, double) { return 0.0; }});
    // r^2 * grad(r^2 cos 2 theta) = (x^2 + y^2) (2x, -2y).
    out.push_back({"r2_grad_saddle",
                   [](double x, double y) {
                       const double r2 = x * x + y * y;
                       return Eigen::Vector2d(2.0 * r2 * x, -2.0 * r2 * y);
                   },
                   [](double x, double y) { return 4.0 * (x * x - y * y); }});
    out.push_back({"swirl_plus_source",
                   [](double x, double y) { return Eigen::Vector2d(x * x - y, x * y + y * y); },
                   [](double x, double y) { return 2.0 * x + x + 2.0 * y; }});
    return out;
}

IdentityResult divergence_theorem_oracle(double r0, double R, const VectorField2D& F,
                                         int quad_radial, int quad_angular) {
    if (!(r0 >= 0.0 && r0 < R))
        throw std::invalid_argument("divergence_theorem_oracle: need 0 <= r0 < R");
    const PolarRule vol = polar_rule(r0, R, quad_radial, quad_angular);
    const CircleRule outer = circle_rule(R, quad_angular);

    const double volume_side = vol.integrate(
        [&](double r, double th) { return F.divergence(r * std::cos(th), r * std::sin(th)); });
    const double volume_abs = vol.integrate([&](double r, double th) {
        return std::fabs(F.divergence(r * std::cos(th), r * std::sin(th)));
    });
    double flux = outer.integrate([&](double th) {
        const double c = std::cos(th), s = std::sin(th);
        return F.value(R * c, R * s).dot(Eigen::Vector2d(c, s));
    });
    double flux_abs = outer.integrate([&](double th) {
        const double c = std::cos(th), s = std::sin(th);
        return std::fabs(F.value(R * c, R * s).dot(Eigen::Vector2d(c, s)));
    });
    if (r0 > 0.0) {
        const CircleRule inner = circle_rule(r0, quad_angular);
        flux += inner.integrate([&](double th) {
            const double c = std::cos(th), s = std::sin(th);
            return F.value(r0 * c, r0 * s).dot(Eigen::Vector2d(-c, -s));
        });
        flux_abs += inner.integrate([&](double th) {
            const double c = std::cos(th), s = std::sin(th);
            return std::fabs(F.value(r0 * c, r0 * s).dot(Eigen::Vector2d(-c, -s)));
        });
    }

    IdentityResult out;
    out.lhs = volume_side;
    out.rhs = flux;
    out.residual = normalized(volume_side, flux, volume_abs + flux_abs);
    out.quad_radial = quad_radial;
    out.quad_angular = quad_angular;
    return out;
}

}  // namespace wlab
