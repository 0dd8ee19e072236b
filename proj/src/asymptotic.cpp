#include "cornell/asymptotic.hpp"

#include <cmath>
#include <vector>

#include <fmt/format.h>

#include "cornell/coulomb.hpp"
#include "cornell/error.hpp"
#include "cornell/specfun.hpp"
#include "root_solve.hpp"

namespace cornell::asymptotic {

namespace {

constexpr int kScanPoints = 400;

double mass(const AsymptoticModel& model) { return model.params.m(); }

// Prefactor a/(Λ+1) - (Λ+1)/(m r), written so that it is exactly zero at r = r_c.
double prefactor(const AsymptoticModel& model, double r) {
    const double k = model.lambda.value() + 1.0;
    const double a = model.params.a();
    if (a > 0.0) {
        const double r_c = coulomb::coulomb_peak_radius(model.params).value();
        return a / k * (1.0 - r_c / r);
    }
    return -k / (mass(model) * r);
}

double profile_at(const AsymptoticModel& model, double r) {
    return prefactor(model, r) * model.scale * specfun::airy_log_deriv(model.scale * r);
}

}  // namespace

AsymptoticModel AsymptoticModel::from(const SystemParams& p) {
    return {p, std::cbrt(2.0 * p.m() * p.b()), p.lambda()};
}

void RootBracket::validate() const {
    if (!(lo > 0.0) || !(hi > lo) || !std::isfinite(hi)) {
        throw DomainError(fmt::format("root bracket requires 0 < lo < hi (got [{}, {}])", lo, hi));
    }
    if (!(tol_abs > 0.0)) {
        throw DomainError(fmt::format("root bracket requires tol_abs > 0 (got {})", tol_abs));
    }
    if (max_iter <= 0) {
        throw DomainError(fmt::format("root bracket requires max_iter > 0 (got {})", max_iter));
    }
}

double f_value(const AsymptoticModel& model, RadialPoint r) {
    return specfun::airy(model.scale * r.value()).ai;
}

double f_log_deriv(const AsymptoticModel& model, RadialPoint r) {
    return model.scale * specfun::airy_log_deriv(model.scale * r.value());
}

double airy_ode_residual(const AsymptoticModel& model, RadialPoint r) {
    const double c = model.scale;
    const double x = c * r.value();
    // f''(r) = c² Ai''(x) = c² x f(r)
    const double curvature = c * c * x;
    return curvature / (2.0 * mass(model)) - model.params.b() * r.value();
}

double airy_ode_residual_fd(const AsymptoticModel& model, RadialPoint r) {
    const double c = model.scale;
    const double x = c * r.value();
    double h = 0.01 / std::sqrt(std::max(1.0, x));
    h = std::min(h, x / 4.0);
    const auto ai = [](double t) { return specfun::airy(t).ai; };
    const double f0 = ai(x);
    const double second = (-ai(x + 2 * h) + 16.0 * ai(x + h) - 30.0 * f0 + 16.0 * ai(x - h) -
                           ai(x - 2 * h)) /
                          (12.0 * h * h);
    return c * c * second / (2.0 * mass(model) * f0) - model.params.b() * r.value();
}

RadialPoint asymptotic_peak_radius(const AsymptoticModel& model) {
    // Solved in x = c r so that r0 b^{1/3} is independent of b.
    const double k = model.lambda.value() + 1.0;
    const auto phi = [k](double x) { return k / x + specfun::airy_log_deriv(x); };
    // -Ai'/Ai > sqrt(x), so phi < 0 at x = k^{2/3}; |Ai'/Ai| is increasing, which bounds lo.
    double hi = std::cbrt(k * k);
    double fhi = phi(hi);
    while (fhi >= 0.0) {
        hi *= 2.0;
        fhi = phi(hi);
    }
    double lo = 0.5 * k / std::fabs(specfun::airy_log_deriv(hi));
    double flo = phi(lo);
    while (flo <= 0.0) {
        lo *= 0.5;
        flo = phi(lo);
    }
    const double x0 = detail::solve_bracketed(phi, lo, hi, flo, fhi, 1e-12, 200,
                                              "asymptotic_peak_radius");
    return RadialPoint(x0 / model.scale);
}

double delta_e_profile(const AsymptoticModel& model, RadialPoint r) {
    return profile_at(model, r.value());
}

double moderating_superpotential(const AsymptoticModel& model, RadialPoint r) {
    return -f_log_deriv(model, r) / std::sqrt(2.0 * mass(model));
}

double moderating_superpotential_prime(const AsymptoticModel& model, RadialPoint r) {
    const double c = model.scale;
    const double log_deriv = f_log_deriv(model, r);
    // (f'/f)' = f''/f - (f'/f)²
    return -(c * c * c * r.value() - log_deriv * log_deriv) / std::sqrt(2.0 * mass(model));
}

double susy_delta_e(const AsymptoticModel& model, RadialPoint r) {
    double w_es = 0.0;
    if (model.params.a() > 0.0) {
        w_es = coulomb::coulomb_superpotential(model.params, 0, r);
    } else {
        // a -> 0 limit of -(1/sqrt(2m)) F'g'/F with F = e^{-g/2} g^{Λ+1}
        w_es = -(model.lambda.value() + 1.0) / (r.value() * std::sqrt(2.0 * mass(model)));
    }
    return -2.0 * w_es * moderating_superpotential(model, r);
}

CriticalRadius solve_r_delta_e(const AsymptoticModel& model, double e_exact,
                               std::optional<RootBracket> bracket) {
    if (!std::isfinite(e_exact)) {
        throw DomainError(fmt::format("solve_r_delta_e: e_exact must be finite (got {})", e_exact));
    }
    const SystemParams& p = model.params;
    const double target = e_exact - coulomb::coulomb_energy(p, 0);
    const bool coulomb_present = p.a() > 0.0;

    if (coulomb_present && target == 0.0 && !bracket) {
        return {coulomb::coulomb_peak_radius(p), 1, false};
    }
    if (!(target > 0.0)) {
        throw SolverError(SolverFailure::NoRoot,
                          fmt::format("solve_r_delta_e: correction e_exact - E_ES = {} is not "
                                      "positive, the profile never attains it",
                                      target));
    }

    const auto residual = [&](double r) { return profile_at(model, r) - target; };
    const double r0 = asymptotic_peak_radius(model).value();

    RootBracket br{0.0, 0.0};
    if (bracket) {
        br = *bracket;
    } else if (coulomb_present) {
        const double r_c = coulomb::coulomb_peak_radius(p).value();
        br.lo = std::min(1e-6, 1e-6 * r_c);
        br.hi = r_c;
    } else {
        // ΔE(r) decreases from +inf to 0 when a = 0; expand around r0 until it straddles.
        br.lo = 0.5 * r0;
        br.hi = 2.0 * r0;
        for (int i = 0; i < 200 && residual(br.lo) <= 0.0; ++i) {
            br.lo *= 0.5;
        }
        for (int i = 0; i < 200 && residual(br.hi) >= 0.0; ++i) {
            br.hi *= 2.0;
        }
    }
    br.validate();

    // Log-spaced scan for sign changes, then refine each one.
    std::vector<double> grid(kScanPoints);
    std::vector<double> values(kScanPoints);
    const double ratio = std::log(br.hi / br.lo) / (kScanPoints - 1);
    for (int i = 0; i < kScanPoints; ++i) {
        grid[i] = (i == kScanPoints - 1) ? br.hi : br.lo * std::exp(ratio * i);
        values[i] = residual(grid[i]);
    }
    std::vector<double> roots;
    for (int i = 0; i + 1 < kScanPoints; ++i) {
        if (values[i] == 0.0) {
            roots.push_back(grid[i]);
        } else if ((values[i] > 0.0) != (values[i + 1] > 0.0) && values[i + 1] != 0.0) {
            roots.push_back(detail::solve_bracketed(residual, grid[i], grid[i + 1], values[i],
                                                    values[i + 1], br.tol_abs, br.max_iter,
                                                    "solve_r_delta_e"));
        }
    }
    if (values.back() == 0.0) {
        roots.push_back(grid.back());
    }
    if (roots.empty()) {
        throw SolverError(SolverFailure::NoRoot,
                          fmt::format("solve_r_delta_e: target correction {} not attained on "
                                      "[{}, {}] (profile range [{}, {}])",
                                      target, br.lo, br.hi, values.back() + target,
                                      values.front() + target));
    }
    double best = roots.front();
    for (double r : roots) {
        if (std::fabs(r - r0) < std::fabs(best - r0)) {
            best = r;
        }
    }
    const int count = static_cast<int>(roots.size());
    return {RadialPoint(best), count, count > 1};
}

}  // namespace cornell::asymptotic
