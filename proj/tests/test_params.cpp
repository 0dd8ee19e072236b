#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "cornell/error.hpp"
#include "cornell/params.hpp"

using namespace cornell;

TEST_CASE("lambda_param reduces N dimensions to an effective angular momentum") {
    CHECK(lambda_param(3, 0).value() == 0.0);
    CHECK(lambda_param(4, 0).value() == 0.5);
    CHECK(lambda_param(4, 0).twice() == 1);
    CHECK(lambda_param(3, 2).value() == 2.0);
    CHECK(lambda_param(6, 3).twice() == 9);

    for (int l = 0; l <= 20; ++l) {
        CHECK(lambda_param(3, l).value() == l);
    }
}

TEST_CASE("lambda_param rejects N < 3 and negative l") {
    CHECK_THROWS_AS(lambda_param(2, 0), DomainError);
    CHECK_THROWS_AS(lambda_param(1, 3), DomainError);
    CHECK_THROWS_AS(lambda_param(3, -1), DomainError);
}

TEST_CASE("HalfInteger products stay exact") {
    const HalfInteger half = lambda_param(4, 0);
    CHECK(half.times_successor() == 0.75);
    CHECK(lambda_param(4, 1).times_successor() == 1.5 * 2.5);
    CHECK(lambda_param(3, 4).times_successor() == 20.0);
    CHECK(lambda_param(5, 0) == lambda_param(3, 1));
    CHECK(lambda_param(4, 0) < lambda_param(3, 1));
}

TEST_CASE("SystemParams validates its invariants") {
    const SystemParams p(1.0, 1.0);
    CHECK(p.m() == 0.5);
    CHECK(p.dimension() == 3);
    CHECK(p.l() == 0);
    CHECK(p.lambda().value() == 0.0);
    CHECK(SystemParams(0.0, 1.0).a() == 0.0);

    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double inf = std::numeric_limits<double>::infinity();
    CHECK_THROWS_AS(SystemParams(1.0, 0.0), DomainError);
    CHECK_THROWS_AS(SystemParams(1.0, -1.0), DomainError);
    CHECK_THROWS_AS(SystemParams(-0.1, 1.0), DomainError);
    CHECK_THROWS_AS(SystemParams(1.0, 1.0, 0.0), DomainError);
    CHECK_THROWS_AS(SystemParams(1.0, 1.0, -2.0), DomainError);
    CHECK_THROWS_AS(SystemParams(nan, 1.0), DomainError);
    CHECK_THROWS_AS(SystemParams(1.0, inf), DomainError);
    CHECK_THROWS_AS(SystemParams(1.0, 1.0, 0.5, 2, 0), DomainError);
    CHECK_THROWS_AS(SystemParams(1.0, 1.0, 0.5, 3, -1), DomainError);
    CHECK_THROWS_AS(p.with_b(0.0), DomainError);

    CHECK(p.with_l(2).lambda().value() == 2.0);
    CHECK(p.with_a(2.0).a() == 2.0);
    CHECK(p.with_b(3.0) == SystemParams(1.0, 3.0));
}

TEST_CASE("the error message names the violated invariant") {
    try {
        SystemParams(1.0, -1.0);
        FAIL("expected DomainError");
    } catch (const DomainError& e) {
        CHECK(std::string(e.what()).find("b > 0") != std::string::npos);
    }
}

TEST_CASE("RadialPoint must be strictly positive and finite") {
    CHECK(RadialPoint(1e-300).value() == 1e-300);
    CHECK_THROWS_AS(RadialPoint(0.0), DomainError);
    CHECK_THROWS_AS(RadialPoint(-1.0), DomainError);
    CHECK_THROWS_AS(RadialPoint(std::numeric_limits<double>::infinity()), DomainError);
    CHECK_THROWS_AS(RadialPoint(std::numeric_limits<double>::quiet_NaN()), DomainError);
}

TEST_CASE("effective_potential") {
    CHECK(effective_potential(SystemParams(1.0, 1.0), RadialPoint(1.0)) == 0.0);
    CHECK(effective_potential(SystemParams(0.0, 1.0), RadialPoint(2.0)) == 2.0);

    // Λ = 1 from (N=3, l=1) and from (N=5, l=0); evaluated by hand: -1 + 2/(2*0.5) + 1.
    const double by_hand = -1.0 / 1.0 + 1.0 * 2.0 / (2.0 * 0.5 * 1.0 * 1.0) + 1.0 * 1.0;
    CHECK(effective_potential(SystemParams(1.0, 1.0, 0.5, 3, 1), RadialPoint(1.0)) ==
          doctest::Approx(by_hand).epsilon(1e-15));
    CHECK(effective_potential(SystemParams(1.0, 1.0, 0.5, 5, 0), RadialPoint(1.0)) ==
          doctest::Approx(2.0).epsilon(1e-15));
    // Half-integer Λ = 1/2: Λ(Λ+1) = 3/4.
    CHECK(effective_potential(SystemParams(1.0, 2.0, 0.5, 4, 0), RadialPoint(0.5)) ==
          doctest::Approx(-2.0 + 0.75 / 0.25 + 1.0).epsilon(1e-15));
}

TEST_CASE("effective_potential is monotone in a and b") {
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> pos(0.01, 10.0);
    std::uniform_int_distribution<int> ell(0, 5);
    for (int i = 0; i < 500; ++i) {
        const double a = pos(rng), b = pos(rng), r = pos(rng);
        const int l = ell(rng);
        const SystemParams p(a, b, 0.5, 3, l);
        const RadialPoint x(r);
        CHECK(effective_potential(p.with_b(b * 1.5), x) > effective_potential(p, x));
        CHECK(effective_potential(p.with_a(a * 1.5), x) < effective_potential(p, x));
    }
}

TEST_CASE("effective_potential near the origin") {
    const SystemParams s_wave(1.0, 1.0);
    const SystemParams p_wave(1.0, 1.0, 0.5, 3, 1);
    const SystemParams half(1.0, 1.0, 0.5, 4, 0);
    double prev_s = 0.0, prev_p = 0.0, prev_h = 0.0;
    for (double r = 1e-2; r > 1e-12; r /= 10.0) {
        const double vs = effective_potential(s_wave, RadialPoint(r));
        const double vp = effective_potential(p_wave, RadialPoint(r));
        const double vh = effective_potential(half, RadialPoint(r));
        CHECK(vs < prev_s);
        CHECK(vp > prev_p);
        CHECK(vh > prev_h);
        prev_s = vs;
        prev_p = vp;
        prev_h = vh;
    }
    CHECK(prev_s < -1e11);
    CHECK(prev_p > 1e23);
}
