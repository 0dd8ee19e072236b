#ifndef CORNELL_COULOMB_HPP
#define CORNELL_COULOMB_HPP

#include "cornell/params.hpp"

namespace cornell::coulomb {

/// Exactly solvable sector: the Coulomb-like bound state with radial quantum number n.
struct CoulombState {
    int n;
    double energy;   // -m a² / (2 (n+Λ+1)²)
    double alpha;    // Laguerre order 2Λ+1
    double g_slope;  // dg/dr = 2 m a / (n+Λ+1)
};

CoulombState coulomb_state(const SystemParams& p, int n);

/// E_n = -m a² / (2 (n+Λ+1)²); zero (the continuum threshold) when a = 0.
double coulomb_energy(const SystemParams& p, int n);

/// g(r) = 2 m a r / (n+Λ+1). Requires a > 0.
double g_map(const SystemParams& p, int n, RadialPoint r);
RadialPoint r_of_g(const SystemParams& p, int n, double g);

/// R(g) = (n+Λ+1)/g - Λ(Λ+1)/g² - 1/4, the coefficient of F in F'' + R F = 0.
double big_r_of_g(int n, HalfInteger lambda, double g);

/// Unnormalized F_n(g) = e^{-g/2} g^{Λ+1} L_n^{2Λ+1}(g) at g = g(r).
double coulomb_wavefunction(const SystemParams& p, int n, RadialPoint r);

/// F_n'(g)/F_n(g) = -1/2 + (Λ+1)/g - L_{n-1}^{α+1}(g)/L_n^α(g).
double coulomb_log_deriv_g(int n, HalfInteger lambda, double g);

/// W_ES = -(1/sqrt(2m)) F'(g) g' / F(g) for state n.
double coulomb_superpotential(const SystemParams& p, int n, RadialPoint r);

/// Peak of the ground-state Coulomb wavefunction, (Λ+1)²/(m a). Requires a > 0.
RadialPoint coulomb_peak_radius(const SystemParams& p);

}  // namespace cornell::coulomb

#endif  // CORNELL_COULOMB_HPP
