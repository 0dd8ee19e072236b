#ifndef CORNELL_ORACLE_HPP
#define CORNELL_ORACLE_HPP

#include "cornell/params.hpp"

namespace cornell::oracle {

/// Uniform interior grid r_i = i h, i = 1..points, h = r_max/(points+1), u(0) = u(r_max) = 0.
struct RadialGrid {
    double r_max;
    int points;

    double spacing() const { return r_max / (points + 1); }
};

enum class EigenMethod { Matrix, Shooting };

const char* to_string(EigenMethod method) noexcept;

struct EigenResult {
    double energy;
    int node_count;
    RadialGrid grid;
    double est_error;
    EigenMethod method;
};

struct OracleOptions {
    /// Refine the grid until the Richardson error estimate is below this.
    double target_error = 1e-6;
    /// GridTooCoarse is raised when the final estimate still exceeds this.
    double max_error = 1e-5;
    int max_refinements = 3;
};

/// Amplitude (relative to the peak) allowed in the outer 2% of the domain.
inline constexpr double kTailTolerance = 1e-8;

/// Grid sized from the outer classical turning point r_t of an energy estimate:
/// r_max = r_t + min(10 (2mb)^{-1/3}, 25/κ) with κ = sqrt(2m |E_est|) for bound
/// Coulomb-like estimates, spacing <= r_t/2000, at least 500 points.
RadialGrid auto_grid(const SystemParams& p, int n);

/// (n+1)-th eigenvalue of the central-difference Hamiltonian by Sturm-sequence bisection,
/// Richardson-extrapolated over h, h/2, h/4.
EigenResult solve_eigenvalue_matrix(const SystemParams& p, int n, const RadialGrid& grid,
                                    const OracleOptions& options = {});
EigenResult solve_eigenvalue_matrix(const SystemParams& p, int n,
                                    const OracleOptions& options = {});

struct EnergyBracket {
    double lo;
    double hi;
};

/// Number of zeros in (0, r_max) of the regular solution at energy e, which equals the
/// number of eigenvalues of the problem on [0, r_max] lying below e.
int shooting_node_count(const SystemParams& p, double e, double r_max);

/// Energy interval holding exactly the n-th level, located by node counting alone.
EnergyBracket shooting_bracket(const SystemParams& p, int n);

/// Outward integration from the r^{Λ+1} origin series and inward integration from the
/// decaying tail, matched through their Wronskian at the outer turning point.
/// Throws SolverError(BracketInvalid) unless the bracket holds exactly level n.
EigenResult solve_eigenvalue_shooting(const SystemParams& p, int n, EnergyBracket bracket);
EigenResult solve_eigenvalue_shooting(const SystemParams& p, int n);

}  // namespace cornell::oracle

#endif  // CORNELL_ORACLE_HPP
