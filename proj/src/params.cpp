#include "cornell/params.hpp"

#include <cmath>
#include <string>

#include <fmt/format.h>

#include "cornell/error.hpp"

namespace cornell {

const char* to_string(SolverFailure kind) noexcept {
    switch (kind) {
        case SolverFailure::NoRoot: return "NoRoot";
        case SolverFailure::NoConvergence: return "NoConvergence";
        case SolverFailure::GridTooCoarse: return "GridTooCoarse";
        case SolverFailure::DomainTooSmall: return "DomainTooSmall";
        case SolverFailure::BracketInvalid: return "BracketInvalid";
    }
    return "Unknown";
}

HalfInteger lambda_param(int dimension, int l) {
    if (dimension < 3) {
        throw DomainError(fmt::format("dimension N must be >= 3 (got {})", dimension));
    }
    if (l < 0) {
        throw DomainError(fmt::format("orbital quantum number l must be >= 0 (got {})", l));
    }
    return HalfInteger::from_twice(dimension + 2 * l - 3);
}

SystemParams::SystemParams(double a, double b, double m, int dimension, int l)
    : a_(a), b_(b), m_(m), dimension_(dimension), l_(l) {
    if (!std::isfinite(a) || a < 0.0) {
        throw DomainError(fmt::format("Coulomb strength a must satisfy a >= 0 (got {})", a));
    }
    if (!std::isfinite(b) || b <= 0.0) {
        throw DomainError(fmt::format("linear strength b must satisfy b > 0 (got {})", b));
    }
    if (!std::isfinite(m) || m <= 0.0) {
        throw DomainError(fmt::format("mass m must satisfy m > 0 (got {})", m));
    }
    lambda_param(dimension, l);
}

RadialPoint::RadialPoint(double r) : r_(r) {
    if (!std::isfinite(r) || r <= 0.0) {
        throw DomainError(fmt::format("radius must satisfy r > 0 (got {})", r));
    }
}

double effective_potential(const SystemParams& p, RadialPoint r) {
    const double x = r.value();
    return -p.a() / x + p.lambda().times_successor() / (2.0 * p.m() * x * x) + p.b() * x;
}

}  // namespace cornell
