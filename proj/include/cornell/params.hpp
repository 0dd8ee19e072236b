#ifndef CORNELL_PARAMS_HPP
#define CORNELL_PARAMS_HPP

#include <compare>

namespace cornell {

/// Integer or half-integer, stored as twice its value so that
/// Λ = (N + 2ℓ - 3)/2 stays exact for even dimensions.
class HalfInteger {
public:
    constexpr HalfInteger() = default;
    static constexpr HalfInteger from_twice(int twice) { return HalfInteger(twice); }

    constexpr int twice() const { return twice_; }
    constexpr double value() const { return twice_ / 2.0; }
    /// Λ(Λ+1), exact in binary floating point.
    constexpr double times_successor() const { return twice_ * (twice_ + 2) / 4.0; }

    friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;

private:
    constexpr explicit HalfInteger(int twice) : twice_(twice) {}
    int twice_ = 0;
};

/// Effective angular momentum Λ = (N + 2ℓ - 3)/2. Throws DomainError for N < 3 or ℓ < 0.
HalfInteger lambda_param(int dimension, int l);

/// Physical inputs of the N-dimensional Cornell problem V(r) = -a/r + b r.
/// Lengths in 1/GeV, energies in GeV; the tables use m = 0.5 (2m = 1).
class SystemParams {
public:
    static constexpr double kDefaultMass = 0.5;

    /// Validates a >= 0, b > 0, m > 0, N >= 3, ℓ >= 0 (all finite).
    SystemParams(double a, double b, double m = kDefaultMass, int dimension = 3, int l = 0);

    double a() const { return a_; }
    double b() const { return b_; }
    double m() const { return m_; }
    int dimension() const { return dimension_; }
    int l() const { return l_; }
    HalfInteger lambda() const { return lambda_param(dimension_, l_); }

    SystemParams with_a(double a) const { return {a, b_, m_, dimension_, l_}; }
    SystemParams with_b(double b) const { return {a_, b, m_, dimension_, l_}; }
    SystemParams with_l(int l) const { return {a_, b_, m_, dimension_, l}; }

    friend bool operator==(const SystemParams&, const SystemParams&) = default;

private:
    double a_;
    double b_;
    double m_;
    int dimension_;
    int l_;
};

/// A strictly positive, finite radius (the origin is a coordinate singularity).
class RadialPoint {
public:
    explicit RadialPoint(double r);
    double value() const { return r_; }

private:
    double r_;
};

/// -a/r + Λ(Λ+1)/(2 m r²) + b r
double effective_potential(const SystemParams& p, RadialPoint r);

}  // namespace cornell

#endif  // CORNELL_PARAMS_HPP
