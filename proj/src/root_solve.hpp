#ifndef CORNELL_SRC_ROOT_SOLVE_HPP
#define CORNELL_SRC_ROOT_SOLVE_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <string_view>

#include <boost/math/tools/toms748_solve.hpp>
#include <fmt/format.h>

#include "cornell/error.hpp"

namespace cornell::detail {

// Bracketed root of f on [lo, hi] (f(lo), f(hi) of opposite sign) to full double
// precision. Fails with NoConvergence if the bracket is still wider than tol_abs
// after max_iter evaluations.
template <class F>
double solve_bracketed(F&& f, double lo, double hi, double flo, double fhi, double tol_abs,
                       int max_iter, std::string_view what) {
    if (flo == 0.0) {
        return lo;
    }
    if (fhi == 0.0) {
        return hi;
    }
    if ((flo > 0.0) == (fhi > 0.0)) {
        throw SolverError(SolverFailure::NoRoot,
                          fmt::format("{}: no sign change on [{}, {}]", what, lo, hi));
    }
    const auto converged = [](double x, double y) {
        return std::fabs(y - x) <=
               4.0 * std::numeric_limits<double>::epsilon() * std::max(std::fabs(x), std::fabs(y));
    };
    std::uintmax_t iters = static_cast<std::uintmax_t>(max_iter);
    const auto [a, b] =
        boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, converged, iters);
    if (std::fabs(b - a) > tol_abs) {
        throw SolverError(SolverFailure::NoConvergence,
                          fmt::format("{}: bracket [{}, {}] wider than {} after {} iterations",
                                      what, a, b, tol_abs, iters));
    }
    if (a == b) {
        return a;
    }
    return std::fabs(f(a)) <= std::fabs(f(b)) ? a : b;
}

}  // namespace cornell::detail

#endif  // CORNELL_SRC_ROOT_SOLVE_HPP
