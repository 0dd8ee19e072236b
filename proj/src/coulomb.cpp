#include "cornell/coulomb.hpp"

#include <cmath>

#include <fmt/format.h>

#include "cornell/error.hpp"
#include "cornell/specfun.hpp"

namespace cornell::coulomb {

namespace {

void require_state(int n) {
    if (n < 0) {
        throw DomainError(fmt::format("radial quantum number n must be >= 0 (got {})", n));
    }
}

void require_coulomb(const SystemParams& p, const char* what) {
    if (!(p.a() > 0.0)) {
        throw DomainError(fmt::format("{}: requires a Coulomb term a > 0", what));
    }
}

double principal(int n, HalfInteger lambda) { return n + lambda.value() + 1.0; }

}  // namespace

CoulombState coulomb_state(const SystemParams& p, int n) {
    require_state(n);
    const HalfInteger lambda = p.lambda();
    return {n, coulomb_energy(p, n), 2.0 * lambda.value() + 1.0,
            2.0 * p.m() * p.a() / principal(n, lambda)};
}

double coulomb_energy(const SystemParams& p, int n) {
    require_state(n);
    if (p.a() == 0.0) {
        return 0.0;
    }
    const double nu = principal(n, p.lambda());
    return -p.m() * p.a() * p.a() / (2.0 * nu * nu);
}

double g_map(const SystemParams& p, int n, RadialPoint r) {
    require_state(n);
    require_coulomb(p, "g_map");
    return 2.0 * p.m() * p.a() * r.value() / principal(n, p.lambda());
}

RadialPoint r_of_g(const SystemParams& p, int n, double g) {
    require_state(n);
    require_coulomb(p, "r_of_g");
    if (!(g > 0.0)) {
        throw DomainError(fmt::format("r_of_g: requires g > 0 (got {})", g));
    }
    return RadialPoint(g * principal(n, p.lambda()) / (2.0 * p.m() * p.a()));
}

double big_r_of_g(int n, HalfInteger lambda, double g) {
    require_state(n);
    if (!(g > 0.0) || !std::isfinite(g)) {
        throw DomainError(fmt::format("big_r_of_g: requires g > 0 (got {})", g));
    }
    return principal(n, lambda) / g - lambda.times_successor() / (g * g) - 0.25;
}

double coulomb_wavefunction(const SystemParams& p, int n, RadialPoint r) {
    const double g = g_map(p, n, r);
    const HalfInteger lambda = p.lambda();
    const double alpha = 2.0 * lambda.value() + 1.0;
    return std::exp(-0.5 * g + (lambda.value() + 1.0) * std::log(g)) *
           specfun::laguerre(n, alpha, g);
}

double coulomb_log_deriv_g(int n, HalfInteger lambda, double g) {
    require_state(n);
    if (!(g > 0.0)) {
        throw DomainError(fmt::format("coulomb_log_deriv_g: requires g > 0 (got {})", g));
    }
    const double alpha = 2.0 * lambda.value() + 1.0;
    double result = -0.5 + (lambda.value() + 1.0) / g;
    if (n > 0) {
        result -= specfun::laguerre(n - 1, alpha + 1.0, g) / specfun::laguerre(n, alpha, g);
    }
    return result;
}

double coulomb_superpotential(const SystemParams& p, int n, RadialPoint r) {
    const double g = g_map(p, n, r);
    const double slope = 2.0 * p.m() * p.a() / principal(n, p.lambda());
    return -coulomb_log_deriv_g(n, p.lambda(), g) * slope / std::sqrt(2.0 * p.m());
}

RadialPoint coulomb_peak_radius(const SystemParams& p) {
    require_coulomb(p, "coulomb_peak_radius");
    const double k = p.lambda().value() + 1.0;
    return RadialPoint(k * k / (p.m() * p.a()));
}

}  // namespace cornell::coulomb
