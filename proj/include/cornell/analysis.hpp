#ifndef CORNELL_ANALYSIS_HPP
#define CORNELL_ANALYSIS_HPP

#include <optional>
#include <string>
#include <vector>

#include "cornell/oracle.hpp"
#include "cornell/params.hpp"
#include "cornell/tables.hpp"

namespace cornell::analysis {

enum class Regime { CoulombDominant, LinearDominant };

const char* to_string(Regime regime) noexcept;

/// One analyzed ground-state configuration.
struct SpectralResult {
    SystemParams params;
    double e_es;
    double e_exact;
    double delta_e;  // e_exact - e_es
    double r0_asym;
    std::optional<double> r0_coulomb;  // absent when a = 0
    double r_delta_e;
    double margin;  // (r_delta_e - r0_asym) / r0_asym
    Regime regime;
    bool multiple_roots;
    std::optional<double> pt1_delta_e;  // absent when a = 0
    double oracle_error;
};

struct AnalysisOptions {
    oracle::OracleOptions oracle{};
};

/// r0 > r_dE means the Coulomb term dominates; otherwise the linear term does.
Regime classify(double r0_asym, double r_delta_e);

/// Oracle energy, Coulomb sector, asymptotic radii and dominance for the ground state.
/// Solver failures are rethrown with the failing stage prepended to the message.
SpectralResult analyze(const SystemParams& p, const AnalysisOptions& options = {});

/// First-order shift b <r> over the Coulomb ground state, b (2Λ+3)(Λ+1)/(2 m a).
/// Accepts b >= 0; requires a > 0.
double first_order_shift(double a, double b, double m, HalfInteger lambda);
double first_order_pt(const SystemParams& p);

enum class Verdict { Pass, Fail, ExpectedDiscrepancy };

const char* to_string(Verdict verdict) noexcept;

struct Tolerances {
    double r0 = 5e-3;
    double r_delta_e = 1e-3;
    double delta_e = 2e-3;
};

struct RowComparison {
    TableRow row;
    SystemParams params;
    std::optional<SpectralResult> result{};
    std::string error{};  // set when analyze() failed
    double r0_diff = 0.0;
    double r_delta_e_diff = 0.0;
    double delta_e_diff = 0.0;
    Verdict verdict = Verdict::Fail;
    std::string detail{};
};

struct TableReport {
    int id;
    int dimension;
    std::vector<RowComparison> rows;

    bool has_failures() const;
    int count(Verdict verdict) const;
};

struct ReproduceOptions {
    AnalysisOptions analysis{};
    Tolerances tolerances{};
    unsigned threads = 0;  // 0 = hardware concurrency
};

/// Analyzes every row (concurrently) and compares against the printed values.
/// Rows outside tolerance are FAIL unless they carry a note or the table lets the
/// oracle adjudicate, in which case they are EXPECTED-DISCREPANCY.
TableReport reproduce_table(const TableSpec& spec, const ReproduceOptions& options = {});

}  // namespace cornell::analysis

#endif  // CORNELL_ANALYSIS_HPP
