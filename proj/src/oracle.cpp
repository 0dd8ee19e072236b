#include "cornell/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include <boost/numeric/odeint.hpp>
#include <fmt/format.h>

#include "cornell/coulomb.hpp"
#include "cornell/error.hpp"
#include "root_solve.hpp"

namespace cornell::oracle {

namespace {

double potential(const SystemParams& p, double r) {
    return effective_potential(p, RadialPoint(r));
}

// Rough level estimate used only to size domains: the smaller of the first-order
// Coulomb estimate and a linear-plus-centrifugal estimate (dropping -a/r raises E).
double energy_estimate(const SystemParams& p, int n) {
    const double m = p.m();
    const double b = p.b();
    const double lambda = p.lambda().value();
    const double ll = p.lambda().times_successor();
    const double airy_unit = std::cbrt(b * b / (2.0 * m));
    const double zero = std::pow(1.5 * std::numbers::pi * (n + 0.75), 2.0 / 3.0);
    double centrifugal_min = 0.0;
    if (ll > 0.0) {
        const double r_min = std::cbrt(ll / (m * b));
        centrifugal_min = ll / (2.0 * m * r_min * r_min) + b * r_min;
    }
    double estimate = centrifugal_min + zero * airy_unit;
    if (p.a() > 0.0) {
        const double nu = n + lambda + 1.0;
        const double mean_r = (3.0 * nu * nu - ll) / (2.0 * m * p.a());
        estimate = std::min(estimate, coulomb::coulomb_energy(p, n) + b * mean_r);
    }
    return estimate;
}

// Largest r with V_eff(r) = e (the outer classical turning point).
double outer_turning_point(const SystemParams& p, double e) {
    double hi = std::max(1.0, 2.0 * std::fabs(e) / p.b());
    while (potential(p, hi) <= e) {
        hi *= 2.0;
    }
    double lo = hi;
    for (int i = 0; i < 200; ++i) {
        lo *= 0.5;
        if (potential(p, lo) < e) {
            break;
        }
    }
    if (potential(p, lo) >= e) {
        return lo;  // e lies below the whole potential
    }
    const auto f = [&](double r) { return potential(p, r) - e; };
    return detail::solve_bracketed(f, lo, hi, f(lo), f(hi), 1e-9 * hi, 200, "turning point");
}

// Entries in long double: the pivots carry an absolute rounding error of about
// eps * 4/h^2, which in double would swamp the h^4 accuracy of the extrapolation.
struct Tridiagonal {
    std::vector<long double> diag;
    long double off = 0.0L;
};

Tridiagonal discretize(const SystemParams& p, double r_max, int points) {
    const long double h = static_cast<long double>(r_max) / (points + 1);
    const long double kinetic = 1.0L / (2.0L * p.m() * h * h);
    Tridiagonal t{std::vector<long double>(points), -kinetic};
    const long double a = p.a(), b = p.b();
    const long double cent = p.lambda().times_successor() / (2.0L * p.m());
    for (int i = 0; i < points; ++i) {
        const long double r = h * (i + 1);
        t.diag[i] = 2.0L * kinetic - a / r + cent / (r * r) + b * r;
    }
    return t;
}

// Number of eigenvalues strictly below e (Sturm sequence of the LDL^T pivots).
int sturm_count(const Tridiagonal& t, long double e) {
    const long double off2 = t.off * t.off;
    const long double tiny = std::numeric_limits<long double>::epsilon() * std::fabs(t.off);
    int count = 0;
    long double q = 1.0L;
    for (std::size_t i = 0; i < t.diag.size(); ++i) {
        q = t.diag[i] - e - (i == 0 ? 0.0L : off2 / q);
        if (q == 0.0L) {
            q = -tiny;
        }
        if (q < 0.0L) {
            ++count;
        }
    }
    return count;
}

long double bisect_eigenvalue(const Tridiagonal& t, int k) {
    long double lo = *std::min_element(t.diag.begin(), t.diag.end()) - 2.0L * std::fabs(t.off);
    long double hi = *std::max_element(t.diag.begin(), t.diag.end()) + 2.0L * std::fabs(t.off);
    constexpr long double eps = std::numeric_limits<long double>::epsilon();
    for (int i = 0; i < 200 && hi - lo > 2.0L * eps * std::max(std::fabs(lo), std::fabs(hi)); ++i) {
        const long double mid = 0.5L * (lo + hi);
        if (sturm_count(t, mid) > k) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    return 0.5L * (lo + hi);
}

// Two sweeps of inverse iteration, (T - σ) x_{k+1} = x_k, σ just above the eigenvalue.
std::vector<double> eigenvector(const Tridiagonal& t, double energy) {
    const std::size_t n = t.diag.size();
    const double sigma = energy + 1e-10 * (std::fabs(energy) + 1.0);
    const double tiny = 1e-300;
    std::vector<double> x(n, 1.0), cp(n), dp(n);
    for (int sweep = 0; sweep < 3; ++sweep) {
        double denom = t.diag[0] - sigma;
        if (denom == 0.0) denom = tiny;
        cp[0] = t.off / denom;
        dp[0] = x[0] / denom;
        for (std::size_t i = 1; i < n; ++i) {
            denom = t.diag[i] - sigma - t.off * cp[i - 1];
            if (denom == 0.0) denom = tiny;
            cp[i] = t.off / denom;
            dp[i] = (x[i] - t.off * dp[i - 1]) / denom;
        }
        x[n - 1] = dp[n - 1];
        for (std::size_t i = n - 1; i-- > 0;) {
            x[i] = dp[i] - cp[i] * x[i + 1];
        }
        double peak = 0.0;
        for (double v : x) peak = std::max(peak, std::fabs(v));
        for (double& v : x) v /= peak;
    }
    return x;
}

int count_sign_changes(const std::vector<double>& x, double floor) {
    int changes = 0;
    int last = 0;
    for (double v : x) {
        if (std::fabs(v) <= floor) continue;
        const int s = v > 0.0 ? 1 : -1;
        if (last != 0 && s != last) ++changes;
        last = s;
    }
    return changes;
}

struct LevelSolve {
    double richardson;
    double est_error;
    int node_count;
    double tail;
};

LevelSolve matrix_levels(const SystemParams& p, int n, const RadialGrid& grid) {
    std::array<long double, 3> e{};
    int points = grid.points;
    Tridiagonal middle;
    long double finest_off = 0.0L;
    for (int level = 0; level < 3; ++level) {
        Tridiagonal t = discretize(p, grid.r_max, points);
        e[level] = bisect_eigenvalue(t, n);
        finest_off = t.off;
        if (level == 1) middle = std::move(t);
        points = 2 * points + 1;
    }
    const long double coarse = (4.0L * e[1] - e[0]) / 3.0L;
    const long double fine = (4.0L * e[2] - e[1]) / 3.0L;

    const std::vector<double> vec = eigenvector(middle, static_cast<double>(e[1]));
    const std::size_t tail_start = static_cast<std::size_t>(0.98 * vec.size());
    double tail = 0.0;
    for (std::size_t i = tail_start; i < vec.size(); ++i) tail = std::max(tail, std::fabs(vec[i]));
    // Bisection resolves the finest matrix only to ~eps ||T||, ||T|| ~ 4 |off|.
    const long double noise =
        10.0L * std::numeric_limits<long double>::epsilon() * 4.0L * std::fabs(finest_off);
    return {static_cast<double>(fine), static_cast<double>(std::fabs(fine - coarse) + noise),
            count_sign_changes(vec, 1e-9), tail};
}

void require_level(int n) {
    if (n < 0) {
        throw DomainError(fmt::format("radial quantum number n must be >= 0 (got {})", n));
    }
}

}  // namespace

const char* to_string(EigenMethod method) noexcept {
    return method == EigenMethod::Matrix ? "matrix" : "shooting";
}

RadialGrid auto_grid(const SystemParams& p, int n) {
    require_level(n);
    const double e_est = energy_estimate(p, n);
    const double r_turn = outer_turning_point(p, e_est);
    double margin = 10.0 / std::cbrt(2.0 * p.m() * p.b());
    if (e_est < 0.0) {
        margin = std::min(margin, 25.0 / std::sqrt(-2.0 * p.m() * e_est));
    }
    const double r_max = r_turn + margin;
    const double spacing = r_turn / 2000.0;
    const int points = std::max(500, static_cast<int>(std::ceil(r_max / spacing)));
    return {r_max, points};
}

EigenResult solve_eigenvalue_matrix(const SystemParams& p, int n, const RadialGrid& grid,
                                    const OracleOptions& options) {
    require_level(n);
    if (!(grid.r_max > 0.0) || grid.points < 3) {
        throw DomainError(fmt::format("radial grid needs r_max > 0 and >= 3 points (got {}, {})",
                                      grid.r_max, grid.points));
    }
    RadialGrid current = grid;
    LevelSolve solve = matrix_levels(p, n, current);
    for (int i = 0; i < options.max_refinements && solve.est_error > options.target_error; ++i) {
        current.points = 2 * current.points + 1;
        solve = matrix_levels(p, n, current);
    }
    if (solve.tail > kTailTolerance) {
        throw SolverError(SolverFailure::DomainTooSmall,
                          fmt::format("level {} still has relative amplitude {:.3g} near r_max = {}",
                                      n, solve.tail, current.r_max));
    }
    if (solve.est_error > options.max_error) {
        throw SolverError(SolverFailure::GridTooCoarse,
                          fmt::format("Richardson estimates disagree by {:.3g} on {} points",
                                      solve.est_error, current.points));
    }
    return {solve.richardson, solve.node_count, current, solve.est_error, EigenMethod::Matrix};
}

EigenResult solve_eigenvalue_matrix(const SystemParams& p, int n, const OracleOptions& options) {
    return solve_eigenvalue_matrix(p, n, auto_grid(p, n), options);
}

// ---------------------------------------------------------------------------
// Shooting

namespace {

namespace odeint = boost::numeric::odeint;
using State = std::array<double, 2>;

struct Integration {
    State state;
    int nodes;
    int steps;
};

struct Shooter {
    const SystemParams& p;
    double e;
    double rel_tol;

    double q(double r) const {
        return p.lambda().times_successor() / (r * r) +
               2.0 * p.m() * (-p.a() / r + p.b() * r - e);
    }

    Integration integrate(State s, double from, double to) const {
        auto stepper =
            odeint::make_controlled<odeint::runge_kutta_dopri5<State>>(1e-300, rel_tol);
        const auto rhs = [this](const State& x, State& dx, double r) {
            dx[0] = x[1];
            dx[1] = q(r) * x[0];
        };
        const double direction = to > from ? 1.0 : -1.0;
        double r = from;
        double dt = direction * std::fabs(to - from) * 1e-4;
        int nodes = 0;
        int steps = 0;
        int failures = 0;
        while (direction * (to - r) > 0.0) {
            if (direction * (r + dt - to) > 0.0) dt = to - r;
            const double before = s[0];
            if (stepper.try_step(rhs, s, r, dt) == odeint::success) {
                ++steps;
                if ((before > 0.0 && s[0] < 0.0) || (before < 0.0 && s[0] > 0.0)) ++nodes;
                const double size = std::fabs(s[0]) + std::fabs(s[1]);
                if (size > 1e200) {
                    s[0] /= size;
                    s[1] /= size;
                }
                if (std::fabs(to - r) < 1e-14 * std::fabs(to)) r = to;
            } else if (++failures > 100000) {
                throw SolverError(SolverFailure::NoConvergence,
                                  fmt::format("shooting integration stalled at r = {}", r));
            }
        }
        return {s, nodes, steps};
    }

    double length_scale() const {
        double scale = std::min(1.0, 1.0 / std::cbrt(2.0 * p.m() * p.b()));
        if (p.a() > 0.0) scale = std::min(scale, 1.0 / (p.m() * p.a()));
        return std::min(scale, 1.0 / std::sqrt(2.0 * p.m() * std::fabs(e) + 1.0));
    }

    // Frobenius series u = r^{Λ+1} Σ c_k r^k about the origin.
    std::pair<double, State> origin_start() const {
        const double r = 1e-3 * length_scale();
        const double lambda = p.lambda().value();
        const double two_m = 2.0 * p.m();
        std::array<double, 16> c{};
        c[0] = 1.0;
        for (int k = 1; k < 16; ++k) {
            double num = -two_m * p.a() * c[k - 1];
            if (k >= 2) num -= two_m * e * c[k - 2];
            if (k >= 3) num += two_m * p.b() * c[k - 3];
            c[k] = num / (k * (k + 2.0 * lambda + 1.0));
        }
        double sum = 0.0, dsum = 0.0, pw = 1.0;
        for (int k = 0; k < 16; ++k) {
            sum += c[k] * pw;
            dsum += (lambda + 1.0 + k) * c[k] * pw;
            pw *= r;
        }
        const double lead = std::pow(r, lambda);
        return {r, State{lead * r * sum, lead * dsum}};
    }

    Integration outward(double to) const {
        const auto [r0, s0] = origin_start();
        return integrate(s0, r0, to);
    }

    // Decaying WKB tail: u'/u = -sqrt(Q) - Q'/(4Q).
    Integration inward(double r_max, double to) const {
        const double qv = std::max(q(r_max), 1e-12);
        const double h = 1e-6 * r_max;
        const double dq = (q(r_max + h) - q(r_max - h)) / (2.0 * h);
        return integrate(State{1.0, -std::sqrt(qv) - dq / (4.0 * qv)}, r_max, to);
    }
};

double normalized_wronskian(const State& out, const State& in, double scale) {
    const double num = out[0] * in[1] - out[1] * in[0];
    const double n_out = std::hypot(out[0], out[1] * scale);
    const double n_in = std::hypot(in[0], in[1] * scale);
    return num * scale / (n_out * n_in);
}

double matching_radius(const SystemParams& p, double e, double r_max) {
    double r_m = outer_turning_point(p, e);
    if (!(r_m < r_max)) r_m = 0.5 * r_max;
    return std::clamp(r_m, 0.05 * r_max, 0.8 * r_max);
}

double lowest_energy_bound(const SystemParams& p) {
    // b r >= 0 and the centrifugal term only raise levels above the Coulomb ground state.
    return p.a() > 0.0 ? coulomb::coulomb_energy(p, 0) - 1.0 : -1.0;
}

}  // namespace

int shooting_node_count(const SystemParams& p, double e, double r_max) {
    return Shooter{p, e, 1e-10}.outward(r_max).nodes;
}

EnergyBracket shooting_bracket(const SystemParams& p, int n) {
    require_level(n);
    const double r_max = auto_grid(p, n).r_max;
    double lo = lowest_energy_bound(p);
    int count_lo = shooting_node_count(p, lo, r_max);
    if (count_lo > n) {
        throw SolverError(SolverFailure::BracketInvalid,
                          fmt::format("more than {} levels below the lower bound {}", n, lo));
    }
    // Offset so a near-exact estimate never lands on the level itself.
    const double estimate = energy_estimate(p, n);
    double hi = std::max(estimate + 0.01 * (1.0 + std::fabs(estimate)), lo + 1.0);
    double step = std::fabs(hi - lo) + 1.0;
    int count_hi = shooting_node_count(p, hi, r_max);
    for (int i = 0; count_hi <= n; ++i) {
        if (i > 60) {
            throw SolverError(SolverFailure::BracketInvalid,
                              fmt::format("no level {} found below {}", n, hi));
        }
        lo = hi;
        count_lo = count_hi;
        hi += step;
        step *= 2.0;
        count_hi = shooting_node_count(p, hi, r_max);
    }
    // Shrink until exactly level n sits inside (n levels below lo, n+1 below hi).
    for (int i = 0; i < 200; ++i) {
        if (count_lo == n && count_hi == n + 1 && hi - lo < 1e-3 * (1.0 + std::fabs(hi))) {
            break;
        }
        const double mid = 0.5 * (lo + hi);
        const int count = shooting_node_count(p, mid, r_max);
        if (count <= n) {
            lo = mid;
            count_lo = count;
        } else {
            hi = mid;
            count_hi = count;
        }
    }
    return {lo, hi};
}

EigenResult solve_eigenvalue_shooting(const SystemParams& p, int n, EnergyBracket bracket) {
    require_level(n);
    if (!(bracket.lo < bracket.hi)) {
        throw SolverError(SolverFailure::BracketInvalid,
                          fmt::format("energy bracket [{}, {}] is empty", bracket.lo, bracket.hi));
    }
    const double r_max = auto_grid(p, n).r_max;
    const int count_lo = shooting_node_count(p, bracket.lo, r_max);
    const int count_hi = shooting_node_count(p, bracket.hi, r_max);
    if (count_hi - count_lo != 1 || count_lo != n) {
        throw SolverError(SolverFailure::BracketInvalid,
                          fmt::format("node counts {} and {} at [{}, {}] do not isolate level {}",
                                      count_lo, count_hi, bracket.lo, bracket.hi, n));
    }

    const double r_m = matching_radius(p, 0.5 * (bracket.lo + bracket.hi), r_max);
    const double scale = r_m / 10.0;
    const auto mismatch_at = [&](double rel_tol) {
        return [&, rel_tol](double e) {
            const Shooter s{p, e, rel_tol};
            return normalized_wronskian(s.outward(r_m).state, s.inward(r_max, r_m).state, scale);
        };
    };
    // An endpoint within integration error of the level can hide the Wronskian sign change;
    // node counting still splits the bracket reliably, so shrink it until the change shows.
    const auto fine = mismatch_at(1e-12);
    EnergyBracket br = bracket;
    double w_lo = fine(br.lo);
    double w_hi = fine(br.hi);
    for (int i = 0; i < 80 && (w_lo > 0.0) == (w_hi > 0.0); ++i) {
        const double mid = 0.5 * (br.lo + br.hi);
        if (shooting_node_count(p, mid, r_max) <= n) {
            br.lo = mid;
            w_lo = fine(mid);
        } else {
            br.hi = mid;
            w_hi = fine(mid);
        }
    }
    if ((w_lo > 0.0) == (w_hi > 0.0)) {
        throw SolverError(SolverFailure::BracketInvalid,
                          fmt::format("matching Wronskian keeps its sign on [{}, {}]", br.lo, br.hi));
    }
    const double energy =
        detail::solve_bracketed(fine, br.lo, br.hi, w_lo, w_hi, 1e-9, 300, "shooting");

    // Error: integration noise in the mismatch (loose vs tight tolerance) over its slope.
    const double de = 1e-6 * (1.0 + std::fabs(energy));
    const double slope = (fine(energy + de) - fine(energy - de)) / (2.0 * de);
    const double noise = std::fabs(mismatch_at(1e-10)(energy) - fine(energy));
    const double est_error = slope != 0.0 ? noise / std::fabs(slope) : br.hi - br.lo;

    const Shooter final{p, energy, 1e-12};
    const Integration out = final.outward(r_m);
    const Integration in = final.inward(r_max, r_m);
    return {energy, out.nodes + in.nodes, RadialGrid{r_max, out.steps + in.steps},
            est_error, EigenMethod::Shooting};
}

EigenResult solve_eigenvalue_shooting(const SystemParams& p, int n) {
    return solve_eigenvalue_shooting(p, n, shooting_bracket(p, n));
}

}  // namespace cornell::oracle
