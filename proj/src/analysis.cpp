#include "cornell/analysis.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "cornell/asymptotic.hpp"
#include "cornell/coulomb.hpp"
#include "cornell/error.hpp"
#include "cornell/parallel.hpp"

namespace cornell::analysis {

namespace {

template <class Fn>
auto stage(const char* name, Fn&& fn) {
    try {
        return fn();
    } catch (const SolverError& e) {
        throw SolverError(e.kind(), fmt::format("{} stage: {}", name, e.detail()));
    }
}

}  // namespace

const char* to_string(Regime regime) noexcept {
    return regime == Regime::CoulombDominant ? "CoulombDominant" : "LinearDominant";
}

const char* to_string(Verdict verdict) noexcept {
    switch (verdict) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::ExpectedDiscrepancy: return "EXPECTED-DISCREPANCY";
    }
    return "FAIL";
}

Regime classify(double r0_asym, double r_delta_e) {
    return r0_asym > r_delta_e ? Regime::CoulombDominant : Regime::LinearDominant;
}

SpectralResult analyze(const SystemParams& p, const AnalysisOptions& options) {
    const oracle::EigenResult eigen =
        stage("oracle", [&] { return oracle::solve_eigenvalue_matrix(p, 0, options.oracle); });
    const double e_es = coulomb::coulomb_energy(p, 0);
    const auto model = asymptotic::AsymptoticModel::from(p);
    const double r0 =
        stage("asymptotic peak", [&] { return asymptotic::asymptotic_peak_radius(model).value(); });
    const asymptotic::CriticalRadius critical = stage(
        "critical radius", [&] { return asymptotic::solve_r_delta_e(model, eigen.energy); });

    SpectralResult result{p,
                          e_es,
                          eigen.energy,
                          eigen.energy - e_es,
                          r0,
                          std::nullopt,
                          critical.r.value(),
                          (critical.r.value() - r0) / r0,
                          classify(r0, critical.r.value()),
                          critical.multiple_roots,
                          std::nullopt,
                          eigen.est_error};
    if (p.a() > 0.0) {
        result.r0_coulomb = coulomb::coulomb_peak_radius(p).value();
        result.pt1_delta_e = first_order_pt(p);
    }
    return result;
}

double first_order_shift(double a, double b, double m, HalfInteger lambda) {
    if (!(a > 0.0)) {
        throw DomainError(fmt::format("first-order shift needs a Coulomb parent, a > 0 (got {})", a));
    }
    if (!(b >= 0.0) || !(m > 0.0)) {
        throw DomainError(fmt::format("first-order shift needs b >= 0 and m > 0 (got {}, {})", b, m));
    }
    const double k = lambda.value() + 1.0;
    return b * (2.0 * lambda.value() + 3.0) * k / (2.0 * m * a);
}

double first_order_pt(const SystemParams& p) {
    return first_order_shift(p.a(), p.b(), p.m(), p.lambda());
}

bool TableReport::has_failures() const { return count(Verdict::Fail) > 0; }

int TableReport::count(Verdict verdict) const {
    return static_cast<int>(std::count_if(rows.begin(), rows.end(),
                                          [&](const RowComparison& r) { return r.verdict == verdict; }));
}

TableReport reproduce_table(const TableSpec& spec, const ReproduceOptions& options) {
    std::vector<RowComparison> rows;
    rows.reserve(spec.rows.size());
    for (const TableRow& row : spec.rows) {
        RowComparison cmp{.row = row,
                          .params = SystemParams(row.a, row.b, spec.mass, spec.dimension, row.l)};
        rows.push_back(std::move(cmp));
    }

    parallel_for(rows.size(), options.threads, [&](std::size_t i) {
        RowComparison& cmp = rows[i];
        try {
            cmp.result = analyze(cmp.params, options.analysis);
        } catch (const Error& e) {
            cmp.error = e.what();
        }
    });

    const Tolerances& tol = options.tolerances;
    for (RowComparison& cmp : rows) {
        bool within = false;
        if (cmp.result) {
            cmp.r0_diff = std::fabs(cmp.result->r0_asym - cmp.row.expected_r0);
            cmp.r_delta_e_diff = std::fabs(cmp.result->r_delta_e - cmp.row.expected_r_delta_e);
            cmp.delta_e_diff = std::fabs(cmp.result->delta_e - cmp.row.expected_delta_e);
            within = cmp.r0_diff <= tol.r0 && cmp.r_delta_e_diff <= tol.r_delta_e &&
                     cmp.delta_e_diff <= tol.delta_e;
        }
        if (within) {
            cmp.verdict = Verdict::Pass;
            continue;
        }
        std::vector<std::string> reasons;
        if (!cmp.error.empty()) reasons.push_back(cmp.error);
        if (cmp.result) {
            if (cmp.r0_diff > tol.r0) reasons.push_back("r0 outside tolerance");
            if (cmp.r_delta_e_diff > tol.r_delta_e) reasons.push_back("r_dE outside tolerance");
            if (cmp.delta_e_diff > tol.delta_e) reasons.push_back("dE outside tolerance");
        }
        if (!cmp.row.note.empty() && cmp.result) {
            reasons.emplace_back(cmp.row.note);
            cmp.verdict = Verdict::ExpectedDiscrepancy;
        } else if (spec.oracle_adjudicates && cmp.result) {
            reasons.emplace_back("oracle contradicts the printed row");
            cmp.verdict = Verdict::ExpectedDiscrepancy;
        } else {
            cmp.verdict = Verdict::Fail;
        }
        cmp.detail = fmt::format("{}", fmt::join(reasons, "; "));
    }
    return {spec.id, spec.dimension, std::move(rows)};
}

}  // namespace cornell::analysis
