#ifndef CORNELL_ASYMPTOTIC_HPP
#define CORNELL_ASYMPTOTIC_HPP

#include <optional>

#include "cornell/params.hpp"

namespace cornell::asymptotic {

/// Airy moderating function f(r) = Ai(c r), c = (2 m b)^{1/3}, attached to a parameter set.
struct AsymptoticModel {
    SystemParams params;
    double scale;        // c
    HalfInteger lambda;  // Λ

    static AsymptoticModel from(const SystemParams& p);
};

/// Interval and tolerance for the one-dimensional root solves.
struct RootBracket {
    double lo;
    double hi;
    double tol_abs = 1e-12;
    int max_iter = 200;

    /// Throws DomainError unless 0 < lo < hi and tol_abs > 0.
    void validate() const;
};

/// f(r) = Ai(c r)
double f_value(const AsymptoticModel& model, RadialPoint r);

/// f'(r)/f(r) = c Ai'(c r)/Ai(c r), negative for every r > 0.
double f_log_deriv(const AsymptoticModel& model, RadialPoint r);

/// f''/(2 m f) - b r with f'' taken from the Airy equation (zero up to rounding).
double airy_ode_residual(const AsymptoticModel& model, RadialPoint r);

/// Same residual with f'' from a five-point central difference of f_value.
double airy_ode_residual_fd(const AsymptoticModel& model, RadialPoint r);

/// r0: the maximum of r^{Λ+1} f(r), i.e. the root of (Λ+1)/r + f'/f = 0.
/// Depends on (m, b, Λ) only.
RadialPoint asymptotic_peak_radius(const AsymptoticModel& model);

/// Ground-state correction profile ΔE(r) = (a/(Λ+1) - (Λ+1)/(m r)) f'(r)/f(r).
double delta_e_profile(const AsymptoticModel& model, RadialPoint r);

/// ΔW = -f'/(sqrt(2m) f), the superpotential of the linear piece.
double moderating_superpotential(const AsymptoticModel& model, RadialPoint r);

/// d(ΔW)/dr, using f''/f = c³ r from the Airy equation.
double moderating_superpotential_prime(const AsymptoticModel& model, RadialPoint r);

/// The same correction assembled from superpotentials: ΔE = -2 W_ES ΔW, where
/// W_ES is the ground-state Coulomb superpotential. (With W² - W'/sqrt(2m) = V - E the
/// cross term of the split equation is 2 W_ES ΔW = -ΔE; the magnitude is the profile.)
double susy_delta_e(const AsymptoticModel& model, RadialPoint r);

struct CriticalRadius {
    RadialPoint r;
    int root_count;       // sign changes of ΔE(r) - target found in the bracket
    bool multiple_roots;  // root_count > 1; the root nearest r0 is returned
};

/// Solves ΔE(r) = e_exact - E_ES(n=0) for r. Default bracket: (min(1e-6, 1e-6 r_c), r_c)
/// for a > 0 with r_c the Coulomb peak, an expanding bracket around r0 for a = 0.
/// Throws SolverError(NoRoot) when the target is not attained in the bracket.
CriticalRadius solve_r_delta_e(const AsymptoticModel& model, double e_exact,
                               std::optional<RootBracket> bracket = std::nullopt);

}  // namespace cornell::asymptotic

#endif  // CORNELL_ASYMPTOTIC_HPP
