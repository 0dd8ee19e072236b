#ifndef CORNELL_SPECFUN_HPP
#define CORNELL_SPECFUN_HPP

namespace cornell::specfun {

/// Ai(x) together with Ai'(x).
struct AiryValue {
    double ai;
    double ai_prime;
};

/// Regime boundaries of the Airy evaluation:
///   x < kAiryNegativeSeam            oscillatory asymptotic expansion
///   kAiryNegativeSeam <= x <= kAirySeriesSeam   Maclaurin series in extended precision
///   kAirySeriesSeam < x < kAiryAsymptoticSeam   K_{1/3}, K_{2/3} by Steed's continued fraction
///   x >= kAiryAsymptoticSeam         exponentially decaying asymptotic expansion
inline constexpr double kAiryNegativeSeam = -8.0;
inline constexpr double kAirySeriesSeam = 4.5;
inline constexpr double kAiryAsymptoticSeam = 10.0;

/// Ai and Ai' for finite x. Underflows to zero beyond x ~ 105.
/// Throws DomainError for non-finite input.
AiryValue airy(double x);

/// Ai'(x)/Ai(x) for x >= 0, evaluated without forming Ai itself at large x
/// (the quotient is scale-free in every regime, so no underflow).
double airy_log_deriv(double x);

/// Generalized Laguerre polynomial L_n^α(g) by the three-term recurrence.
/// Requires n >= 0, α > -1, g >= 0.
double laguerre(int n, double alpha, double g);

/// Γ(x) for x > 0.
double gamma_fn(double x);

}  // namespace cornell::specfun

#endif  // CORNELL_SPECFUN_HPP
