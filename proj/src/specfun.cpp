#include "cornell/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <fmt/format.h>

#include "cornell/error.hpp"

namespace cornell::specfun {

namespace {

// Ai(0) = 3^{-2/3}/Γ(2/3) and Ai'(0) = -3^{-1/3}/Γ(1/3).
constexpr long double kAi0 = 0.355028053887817239260063186004183176L;
constexpr long double kAiPrime0 = -0.258819403792806798405183560189203963L;

struct Sums {
    long double ai;
    long double ai_prime;
};

// Ai = Ai(0) f(x) + Ai'(0) g(x) with f, g the two Maclaurin solutions of y'' = x y.
Sums maclaurin(long double x) {
    const long double x2 = x * x;
    const long double x3 = x2 * x;
    long double tf = 1.0L;  // a_k x^{3k}
    long double tg = x;     // b_k x^{3k+1}
    long double f = tf, g = tg;
    long double fp = 0.0L, gp = 1.0L;
    constexpr long double eps = std::numeric_limits<long double>::epsilon();
    for (int k = 0; k < 200; ++k) {
        const long double dfp = tf * x2 / (3 * k + 2);
        const long double dgp = tg * x2 / (3 * k + 3);
        tf *= x3 / ((3.0L * k + 2) * (3.0L * k + 3));
        tg *= x3 / ((3.0L * k + 3) * (3.0L * k + 4));
        f += tf;
        g += tg;
        fp += dfp;
        gp += dgp;
        const long double scale = std::fabs(f) + std::fabs(g) + std::fabs(fp) + std::fabs(gp);
        if (std::fabs(tf) + std::fabs(tg) + std::fabs(dfp) + std::fabs(dgp) <= eps * scale) {
            break;
        }
    }
    return {kAi0 * f + kAiPrime0 * g, kAi0 * fp + kAiPrime0 * gp};
}

struct ScaledK {
    double k_mu;       // e^z K_mu(z)
    double k_mu_next;  // e^z K_{mu+1}(z)
};

// Steed's continued fraction (Temme's CF2 form), valid for |mu| <= 1/2 and z >~ 2.
ScaledK bessel_k_cf(double mu, double z) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const double a1 = 0.25 - mu * mu;
    double b = 2.0 * (1.0 + z);
    double d = 1.0 / b;
    double h = d;
    double delh = d;
    double q1 = 0.0;
    double q2 = 1.0;
    double q = a1;
    double c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    int i = 1;
    for (; i < 10000; ++i) {
        a -= 2 * i;
        c = -a * c / (i + 1.0);
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::fabs(dels / s) < eps) {
            break;
        }
    }
    if (i == 10000) {
        throw SolverError(SolverFailure::NoConvergence,
                          fmt::format("Bessel K continued fraction at z = {}", z));
    }
    h *= a1;
    const double k_mu = std::sqrt(std::numbers::pi / (2.0 * z)) / s;
    return {k_mu, k_mu * (mu + z + 0.5 - h) / z};
}

// Ai = sqrt(x/3) K_{1/3}(ζ)/π, Ai' = -x K_{2/3}(ζ)/(π sqrt 3), ζ = (2/3) x^{3/2}.
struct KPair {
    double k13;  // e^ζ K_{1/3}(ζ)
    double k23;  // e^ζ K_{2/3}(ζ)
    double zeta;
};

KPair airy_bessel_k(double x) {
    const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
    const auto [k13, k43] = bessel_k_cf(1.0 / 3.0, zeta);
    return {k13, k43 - 2.0 / (3.0 * zeta) * k13, zeta};
}

struct AsymptoticSums {
    double u;  // Σ (-1)^k u_k ζ^{-k}
    double v;  // Σ (-1)^k v_k ζ^{-k}
};

// u_k = (2k+1)(2k+3)...(6k-1) / (216^k k!), v_k = -(6k+1)/(6k-1) u_k.
AsymptoticSums decaying_sums(double zeta) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    double u = 1.0, v = 1.0;
    double uk = 1.0;
    double inv_pow = 1.0;
    double last = std::numeric_limits<double>::infinity();
    for (int k = 1; k < 100; ++k) {
        uk *= (6.0 * k - 5) * (6.0 * k - 3) * (6.0 * k - 1) / (216.0 * k * (2.0 * k - 1));
        inv_pow /= -zeta;
        const double tu = uk * inv_pow;
        const double tv = -(6.0 * k + 1) / (6.0 * k - 1) * tu;
        if (std::fabs(tv) >= last) {
            break;  // optimal truncation reached
        }
        last = std::fabs(tv);
        u += tu;
        v += tv;
        if (std::fabs(tv) < eps * std::fabs(v) && std::fabs(tu) < eps * std::fabs(u)) {
            break;
        }
    }
    return {u, v};
}

AiryValue oscillatory(double x) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const double y = -x;
    const double zeta = 2.0 / 3.0 * y * std::sqrt(y);
    // Even and odd partial sums of the u_k and v_k series.
    double ue = 1.0, uo = 0.0, ve = 1.0, vo = 0.0;
    double uk = 1.0;
    double pow = 1.0;
    double last = std::numeric_limits<double>::infinity();
    for (int k = 1; k < 100; ++k) {
        uk *= (6.0 * k - 5) * (6.0 * k - 3) * (6.0 * k - 1) / (216.0 * k * (2.0 * k - 1));
        pow /= zeta;
        const double vk = -(6.0 * k + 1) / (6.0 * k - 1) * uk;
        const int j = k / 2;
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        const double tu = sign * uk * pow;
        const double tv = sign * vk * pow;
        if (std::fabs(tv) >= last) {
            break;
        }
        last = std::fabs(tv);
        if (k % 2 == 0) {
            ue += tu;
            ve += tv;
        } else {
            uo += tu;
            vo += tv;
        }
        if (std::fabs(tv) < eps * 1e-3) {
            break;
        }
    }
    const double theta = zeta - std::numbers::pi / 4.0;
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const double q = std::sqrt(std::sqrt(y));
    const double inv_sqrt_pi = std::numbers::inv_sqrtpi;
    return {inv_sqrt_pi / q * (c * ue + s * uo), inv_sqrt_pi * q * (s * ve - c * vo)};
}

}  // namespace

AiryValue airy(double x) {
    if (!std::isfinite(x)) {
        throw DomainError(fmt::format("airy: argument must be finite (got {})", x));
    }
    if (x < kAiryNegativeSeam) {
        return oscillatory(x);
    }
    if (x <= kAirySeriesSeam) {
        const Sums s = maclaurin(x);
        return {static_cast<double>(s.ai), static_cast<double>(s.ai_prime)};
    }
    if (x < kAiryAsymptoticSeam) {
        const KPair k = airy_bessel_k(x);
        const double decay = std::exp(-k.zeta) / std::numbers::pi;
        return {decay * std::sqrt(x / 3.0) * k.k13, -decay * x / std::numbers::sqrt3 * k.k23};
    }
    const double zeta = 2.0 / 3.0 * x * std::sqrt(x);
    const AsymptoticSums sums = decaying_sums(zeta);
    const double q = std::sqrt(std::sqrt(x));
    const double pre = std::exp(-zeta) * 0.5 * std::numbers::inv_sqrtpi;
    return {pre / q * sums.u, -pre * q * sums.v};
}

double airy_log_deriv(double x) {
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw DomainError(fmt::format("airy_log_deriv: requires finite x >= 0 (got {})", x));
    }
    if (x <= kAirySeriesSeam) {
        const Sums s = maclaurin(x);
        return static_cast<double>(s.ai_prime / s.ai);
    }
    if (x < kAiryAsymptoticSeam) {
        const KPair k = airy_bessel_k(x);
        return -std::sqrt(x) * k.k23 / k.k13;
    }
    const AsymptoticSums sums = decaying_sums(2.0 / 3.0 * x * std::sqrt(x));
    return -std::sqrt(x) * sums.v / sums.u;
}

double laguerre(int n, double alpha, double g) {
    if (n < 0) {
        throw DomainError(fmt::format("laguerre: degree must be >= 0 (got {})", n));
    }
    if (!(alpha > -1.0)) {
        throw DomainError(fmt::format("laguerre: order must satisfy alpha > -1 (got {})", alpha));
    }
    if (!(g >= 0.0)) {
        throw DomainError(fmt::format("laguerre: argument must be >= 0 (got {})", g));
    }
    if (n == 0) {
        return 1.0;
    }
    double prev = 1.0;
    double cur = 1.0 + alpha - g;
    for (int k = 1; k < n; ++k) {
        const double next = ((2.0 * k + 1.0 + alpha - g) * cur - (k + alpha) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

double gamma_fn(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw DomainError(fmt::format("gamma_fn: requires finite x > 0 (got {})", x));
    }
    return std::tgamma(x);
}

}  // namespace cornell::specfun
