// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <boost/math/tools/roots.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include "cornell/analysis.hpp"
#include "cornell/asymptotic.hpp"
#include "cornell/coulomb.hpp"
#include "cornell/error.hpp"
#include "cornell/oracle.hpp"
#include "cornell/specfun.hpp"
#include "cornell/tables.hpp"

using namespace cornell;
namespace an = cornell::analysis;
namespace as = cornell::asymptotic;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Check {
    bool ok = true;
    std::vector<std::string> notes;

    void expect(bool cond, std::string note) {
        if (!cond) {
            ok = false;
            notes.push_back(std::move(note));
        }
    }
};

int failures = 0;

void report(const char* id, const char* title, const Check& c, const std::string& summary) {
    if (!c.ok) ++failures;
    std::string line = fmt::format("{} {} {}: {}", id, c.ok ? "PASS" : "FAIL", title, summary);
    for (const auto& n : c.notes) line += " | " + n;
    std::puts(line.c_str());
}

// strict table tolerances: r0 5e-4, r_dE 1e-3, dE 2e-3
const an::Tolerances kStrict{5e-4, 1e-3, 2e-3};

an::TableReport strict_table(int id, double& elapsed) {
    an::ReproduceOptions opts;
    opts.tolerances = kStrict;
    const auto t0 = Clock::now();
    auto rep = an::reproduce_table(an::table_spec(id), opts);
    elapsed = seconds_since(t0);
    return rep;
}

std::string row_name(const an::RowComparison& row) {
    return fmt::format("(a={}, b={}, l={})", row.row.a, row.row.b, row.row.l);
}

void table_rows(Check& c, const an::TableReport& rep) {
    for (const auto& row : rep.rows) {
        if (row.verdict == an::Verdict::Pass) continue;
        if (!row.result) {
            c.expect(false, fmt::format("{} {}", row_name(row), row.error));
            continue;
        }
        if (row.r0_diff > kStrict.r0)
            c.expect(false, fmt::format("{} r0 {:.7f} vs {} (diff {:.2g})", row_name(row),
                                        row.result->r0_asym, row.row.expected_r0, row.r0_diff));
        if (row.r_delta_e_diff > kStrict.r_delta_e)
            c.expect(false, fmt::format("{} r_dE {:.10f} vs {} (diff {:.2g})", row_name(row),
                                        row.result->r_delta_e, row.row.expected_r_delta_e,
                                        row.r_delta_e_diff));
        if (row.delta_e_diff > kStrict.delta_e)
            c.expect(false, fmt::format("{} dE {:.6f} vs {} (diff {:.2g})", row_name(row),
                                        row.result->delta_e, row.row.expected_delta_e, row.delta_e_diff));
    }
}

void ac1() {
    Check c;
    const auto t0 = Clock::now();
    const double unit = as::asymptotic_peak_radius(as::AsymptoticModel::from(SystemParams(1.0, 1.0))).value();
    const double elapsed = seconds_since(t0);
    c.expect(std::fabs(unit - 0.884) <= 5e-4, fmt::format("r0(b=1) = {}", unit));
    const std::vector<std::pair<double, double>> column = {{0.01, 4.103}, {1.0, 0.884}, {100.0, 0.190}};
    std::string scaled;
    for (const auto& [b, printed] : column) {
        const double r0 = unit / std::cbrt(b);
        scaled += fmt::format(" {:.6f}", r0);
        c.expect(std::fabs(r0 - printed) <= 5e-4, fmt::format("b={}: {:.6f} vs {}", b, r0, printed));
        const double direct = as::asymptotic_peak_radius(as::AsymptoticModel::from(SystemParams(1.0, b))).value();
        c.expect(std::fabs(direct - r0) <= 1e-12 * r0, fmt::format("b={}: direct {} vs scaled {}", b, direct, r0));
    }
    c.expect(elapsed < 1e-3, fmt::format("runtime {:.3g} ms", elapsed * 1e3));
    report("AC-1", "mass convention", c,
           fmt::format("r0(a=1,b=1,2m=1)={:.6f}, b^(-1/3) column{} [{:.3f} ms]", unit, scaled, elapsed * 1e3));
}

void ac2() {
    Check c;
    double elapsed = 0;
    const auto rep = strict_table(1, elapsed);
    c.expect(rep.rows.size() == 18, fmt::format("{} rows", rep.rows.size()));
    table_rows(c, rep);
    c.expect(elapsed < 30.0, fmt::format("runtime {:.1f} s", elapsed));
    report("AC-2", "table 1", c,
           fmt::format("{}/{} rows within (5e-4, 1e-3, 2e-3) [{:.2f} s]", rep.count(an::Verdict::Pass),
                       rep.rows.size(), elapsed));
}

void ac3() {
    Check c;
    double elapsed = 0;
    const auto rep = strict_table(3, elapsed);
    c.expect(rep.rows.size() == 20, fmt::format("{} rows", rep.rows.size()));
    table_rows(c, rep);
    for (std::size_t i = 1; i < rep.rows.size(); ++i) {
        const auto& prev = rep.rows[i - 1].result;
        const auto& cur = rep.rows[i].result;
        if (!prev || !cur) continue;
        c.expect(cur->r_delta_e < prev->r_delta_e, fmt::format("r_dE not decreasing at a={}", rep.rows[i].row.a));
        c.expect(cur->delta_e < prev->delta_e, fmt::format("dE not decreasing at a={}", rep.rows[i].row.a));
    }
    c.expect(elapsed < 30.0, fmt::format("runtime {:.1f} s", elapsed));
    report("AC-3", "table 3", c,
           fmt::format("{}/{} rows within tolerance, monotone check on r_dE and dE [{:.2f} s]",
                       rep.count(an::Verdict::Pass), rep.rows.size(), elapsed));
}

void ac4() {
    Check c;
    double elapsed = 0;
    const auto rep = strict_table(2, elapsed);
    c.expect(rep.rows.size() == 12, fmt::format("{} rows", rep.rows.size()));
    std::vector<std::string> flagged;
    for (const auto& row : rep.rows) {
        if (row.verdict == an::Verdict::Fail) {
            c.expect(false, fmt::format("{} FAIL: {}", row_name(row), row.detail));
        } else if (row.verdict == an::Verdict::ExpectedDiscrepancy) {
            c.expect(row.result.has_value(), fmt::format("{} flagged without computed values", row_name(row)));
            flagged.push_back(fmt::format("l={}@b={}", row.row.l, row.row.b));
        }
    }
    // the misprinted dE entry: flagged, yet its radii agree
    const auto& misprint = rep.rows.front();
    c.expect(misprint.row.b == 0.01 && misprint.row.l == 0 &&
                 misprint.verdict == an::Verdict::ExpectedDiscrepancy,
             "(b=0.01, l=0) not flagged");
    if (misprint.result) {
        c.expect(misprint.r0_diff <= kStrict.r0 && misprint.r_delta_e_diff <= kStrict.r_delta_e,
                 "(b=0.01, l=0) radii outside tolerance");
    }
    report("AC-4", "table 2", c,
           fmt::format("{} PASS, {} EXPECTED-DISCREPANCY ({}), {} FAIL [{:.2f} s]",
                       rep.count(an::Verdict::Pass), flagged.size(), fmt::join(flagged, ", "),
                       rep.count(an::Verdict::Fail), elapsed));
}

void ac5() {
    Check c;
    // first zero of Ai by bisection on the library's own Airy function
    const auto ai = [](double x) { return specfun::airy(x).ai; };
    const auto tol = [](double lo, double hi) { return hi - lo < 1e-14; };
    const auto [lo, hi] = boost::math::tools::bisect(ai, -2.5, -2.0, tol);
    const double zero = -(lo + hi) / 2.0;
    const auto e = oracle::solve_eigenvalue_matrix(SystemParams(0.0, 1.0), 0);
    c.expect(std::fabs(e.energy - zero) <= 1e-5, fmt::format("oracle {} vs -a1 {}", e.energy, zero));
    c.expect(std::fabs(e.energy - 2.338107) <= 1e-5, fmt::format("oracle {} vs 2.338107", e.energy));
    c.expect(std::fabs(e.energy - 2.338) <= 2e-3, "inconsistent with the printed dE = 2.338");
    report("AC-5", "pure-linear benchmark", c,
           fmt::format("E0 = {:.9f}, -a1 = {:.12f}, diff {:.2g}", e.energy, zero, std::fabs(e.energy - zero)));
}

void ac6() {
    Check c;

    // exactly solvable Coulomb sector, pointwise, relative to its largest term
    double coul_worst = 0.0;
    for (double a : {0.3, 1.0, 4.0}) {
        for (const SystemParams& p : {SystemParams(a, 1.0, 0.5, 3, 0), SystemParams(a, 1.0, 0.5, 4, 0),
                                      SystemParams(a, 1.0, 0.5, 3, 1), SystemParams(a, 1.0, 0.5, 3, 2)}) {
            for (int n = 0; n <= 3; ++n) {
                const auto s = coulomb::coulomb_state(p, n);
                for (int i = 0; i < 200; ++i) {
                    const double r = 1e-3 * std::pow(1e6, i / 199.0);
                    const double coul = -p.a() / r;
                    const double cent = p.lambda().times_successor() / (2.0 * p.m() * r * r);
                    const double g = coulomb::g_map(p, n, RadialPoint(r));
                    const double rhs = s.g_slope * s.g_slope / (2.0 * p.m()) * coulomb::big_r_of_g(n, p.lambda(), g);
                    const double scale = std::max({std::fabs(s.energy), std::fabs(coul), cent});
                    coul_worst = std::max(coul_worst, std::fabs(s.energy - coul - cent - rhs) / scale);
                }
            }
        }
    }
    c.expect(coul_worst <= 1e-12, fmt::format("Coulomb identity {:.2g}", coul_worst));

    // moderating function against its ODE by finite differences, relative to b r
    double ode_worst = 0.0;
    for (double b : {0.01, 1.0, 100.0}) {
        for (double m : {0.5, 2.0}) {
            const auto md = as::AsymptoticModel::from(SystemParams(1.0, b, m));
            for (int i = 0; i < 200; ++i) {
                const double x = 0.05 * std::pow(400.0, i / 199.0);  // c r from 0.05 to 20
                const RadialPoint r(x / md.scale);
                ode_worst = std::max(ode_worst, std::fabs(as::airy_ode_residual_fd(md, r)) / (b * r.value()));
            }
        }
    }
    c.expect(ode_worst <= 1e-7, fmt::format("Airy ODE residual {:.2g}", ode_worst));

    // superpotential form against the profile, 1000 random configurations
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ua(0.01, 5.0), logb(-3.0, 2.0), ur(0.01, 3.0), logm(-1.0, 1.0);
    std::uniform_int_distribution<int> ul(0, 5), un(3, 6);
    double susy_worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const SystemParams p(ua(rng), std::pow(10.0, logb(rng)), std::pow(10.0, logm(rng)), un(rng), ul(rng));
        const auto md = as::AsymptoticModel::from(p);
        const double r_c = coulomb::coulomb_peak_radius(p).value();
        const RadialPoint r(ur(rng) * r_c);
        const double k = md.lambda.value() + 1.0;
        // the two terms of the prefactor cancel at r_c; measure against their size
        const double scale = (p.a() / k + k / (p.m() * r.value())) * std::fabs(as::f_log_deriv(md, r));
        susy_worst = std::max(susy_worst,
                              std::fabs(as::susy_delta_e(md, r) - as::delta_e_profile(md, r)) / scale);
    }
    c.expect(susy_worst <= 1e-12, fmt::format("superpotential form {:.2g}", susy_worst));

    // critical radius round trip on every table row
    double trip_worst = 0.0;
    int rows = 0;
    for (int id : an::table_ids()) {
        for (const auto& row : an::reproduce_table(an::table_spec(id)).rows) {
            if (!row.result) {
                c.expect(false, fmt::format("table {} {} {}", id, row_name(row), row.error));
                continue;
            }
            const auto& r = *row.result;
            const auto md = as::AsymptoticModel::from(r.params);
            const double back = as::delta_e_profile(md, RadialPoint(r.r_delta_e)) + r.e_es;
            trip_worst = std::max(trip_worst, std::fabs(back - r.e_exact) / std::fabs(r.delta_e));
            ++rows;
        }
    }
    c.expect(trip_worst <= 1e-12, fmt::format("round trip {:.2g}", trip_worst));

    report("AC-6", "identity suites", c,
           fmt::format("Coulomb {:.2g}, Airy ODE {:.2g}, superpotential {:.2g}, round trip {:.2g} over {} rows",
                       coul_worst, ode_worst, susy_worst, trip_worst, rows));
}

void ac7() {
    Check c;
    double cross_worst = 0.0;
    int configs = 0;
    for (int id : {1, 3}) {
        const auto spec = an::table_spec(id);
        for (const auto& row : spec.rows) {
            const SystemParams p(row.a, row.b, spec.mass, spec.dimension, row.l);
            try {
                const double diff = std::fabs(oracle::solve_eigenvalue_matrix(p, 0).energy -
                                              oracle::solve_eigenvalue_shooting(p, 0).energy);
                cross_worst = std::max(cross_worst, diff);
                c.expect(diff <= 1e-6, fmt::format("(a={}, b={}, l={}) differ by {:.2g}", row.a, row.b, row.l, diff));
            } catch (const Error& e) {
                c.expect(false, fmt::format("(a={}, b={}, l={}) {}", row.a, row.b, row.l, e.what()));
            }
            ++configs;
        }
    }
    c.expect(configs == 38, fmt::format("{} configurations", configs));

    double coulomb_worst = 0.0;
    for (const SystemParams& p : {SystemParams(1.0, 1e-8), SystemParams(1.0, 1e-8, 0.5, 3, 1),
                                  SystemParams(2.0, 1e-8, 0.5, 4, 0)}) {
        for (int n = 0; n <= 2; ++n) {
            coulomb_worst = std::max(coulomb_worst, std::fabs(oracle::solve_eigenvalue_matrix(p, n).energy -
                                                              coulomb::coulomb_energy(p, n)));
        }
    }
    c.expect(coulomb_worst <= 1e-5, fmt::format("Coulomb limit off by {:.2g}", coulomb_worst));

    const double lam = std::fabs(oracle::solve_eigenvalue_matrix(SystemParams(1.0, 1.0, 0.5, 3, 1), 0).energy -
                                 oracle::solve_eigenvalue_matrix(SystemParams(1.0, 1.0, 0.5, 5, 0), 0).energy);
    c.expect(lam <= 1e-6, fmt::format("(N=3,l=1) vs (N=5,l=0) differ by {:.2g}", lam));

    report("AC-7", "oracle cross-validation", c,
           fmt::format("matrix vs shooting max {:.2g} over {} configurations, Coulomb limit {:.2g}, "
                       "Lambda-equivalence {:.2g}",
                       cross_worst, configs, coulomb_worst, lam));
}

void ac8() {
    Check c;
    std::string summary;
    for (const auto& [b, small] : {std::pair{0.01, true}, std::pair{1.0, false}}) {
        const auto r = an::analyze(SystemParams(1.0, b));
        const double pt = *r.pt1_delta_e;
        const double rel = std::fabs(pt - r.delta_e) / std::fabs(r.delta_e);
        summary += fmt::format(" b={}: {:.4g} vs {:.4g} ({:.1f}%)", b, pt, r.delta_e, rel * 100);
        if (small) {
            c.expect(rel <= 0.05, fmt::format("b={} error {:.1f}% > 5%", b, rel * 100));
        } else {
            c.expect(rel >= 0.50, fmt::format("b={} error {:.1f}% < 50%", b, rel * 100));
        }
    }
    report("AC-8", "perturbation failure", c, "first-order vs oracle dE:" + summary);
}

}  // namespace

int main() {
    const std::vector<std::function<void()>> criteria = {ac1, ac2, ac3, ac4, ac5, ac6, ac7, ac8};
    for (const auto& run : criteria) {
        try {
            run();
        } catch (const std::exception& e) {
            ++failures;
            std::printf("AC-? FAIL unexpected exception: %s\n", e.what());
        }
        std::fflush(stdout);
    }
    std::printf("%d of %zu acceptance criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
