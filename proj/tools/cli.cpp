#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "cornell/analysis.hpp"
#include "cornell/asymptotic.hpp"
#include "cornell/error.hpp"
#include "cornell/parallel.hpp"
#include "cornell/params.hpp"
#include "cornell/tables.hpp"

namespace cornell::cli {

namespace {

// Bad flag values that CLI11 itself cannot see (ranges, integrality, ...).
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { Text, Csv };

struct Flags {
    // kept as text: sweep reads them as ranges, the other commands as single values
    std::string a, b;
    std::string m = "0.5";
    std::string dimension = "3";
    std::string l = "0";
    std::string format = "text";
    std::string out;
    double r_min = 0.01;
    double r_max = 10.0;
    int steps = 100;
    double tol = 1e-6;
    int table_id = 0;
};

double parse_number(const std::string& text) {
    double value = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    while (first < last && *first == ' ') ++first;
    while (last > first && last[-1] == ' ') --last;
    if (first < last && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last || !std::isfinite(value)) {
        throw std::invalid_argument(fmt::format("'{}' is not a finite number", text));
    }
    return value;
}

using Table = std::vector<std::vector<std::string>>;

std::string sanitize(std::string s) {
    std::replace(s.begin(), s.end(), ',', ';');
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

std::string render(const Table& table, Format format) {
    std::string text;
    if (format == Format::Csv) {
        for (const auto& row : table) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) text += ',';
                text += sanitize(row[i]);
            }
            text += '\n';
        }
        return text;
    }
    std::vector<std::size_t> width;
    for (const auto& row : table) {
        width.resize(std::max(width.size(), row.size()), 0);
        for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
    }
    for (const auto& row : table) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) line += "  ";
            line += row[i];
            if (i + 1 < row.size()) line.append(width[i] - row[i].size(), ' ');
        }
        text += line + '\n';
    }
    return text;
}

// +0.0 so a vanishing prefactor never prints as "-0"
std::string energy(double v) { return fmt::format("{:.9g}", v == 0.0 ? 0.0 : v); }
std::string radius(double v) { return fmt::format("{:.12g}", v); }
std::string critical(double v) { return fmt::format("{:.16g}", v); }
std::string input(double v) { return fmt::format("{}", v); }
std::string optional_value(const std::optional<double>& v, std::string (*fmt_fn)(double)) {
    return v ? fmt_fn(*v) : std::string();
}

const std::vector<std::string> kResultHeader = {
    "a",          "b",    "m",      "N",      "l",              "Lambda",
    "E_ES",       "E_exact", "dE",  "r0_asym", "r0_coulomb",    "r_dE",
    "margin",     "regime", "multiple_roots", "pt1_dE", "oracle_error", "status"};

std::vector<std::string> result_row(const SystemParams& p,
                                    const std::optional<analysis::SpectralResult>& r,
                                    const std::string& status) {
    std::vector<std::string> row = {input(p.a()), input(p.b()), input(p.m()),
                                    std::to_string(p.dimension()), std::to_string(p.l()),
                                    input(p.lambda().value())};
    if (r) {
        row.insert(row.end(),
                   {energy(r->e_es), energy(r->e_exact), energy(r->delta_e), radius(r->r0_asym),
                    optional_value(r->r0_coulomb, radius), critical(r->r_delta_e),
                    fmt::format("{:.9g}", r->margin), analysis::to_string(r->regime),
                    r->multiple_roots ? "yes" : "no", optional_value(r->pt1_delta_e, energy),
                    fmt::format("{:.3g}", r->oracle_error)});
    } else {
        row.resize(kResultHeader.size() - 1);
    }
    row.push_back(status);
    return row;
}

struct Session {
    Flags flags;
    Format format = Format::Text;
    std::ostream& out;
    std::ostream& err;

    unsigned threads() const {
        const char* env = std::getenv("CORNELL_LAB_THREADS");
        if (!env || !*env) return 0;
        unsigned value = 0;
        const std::string text(env);
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc() || ptr != text.data() + text.size()) {
            throw UsageError(fmt::format("CORNELL_LAB_THREADS must be a non-negative integer (got '{}')", text));
        }
        return value;
    }

    analysis::AnalysisOptions analysis_options() const {
        analysis::AnalysisOptions opts;
        opts.oracle.target_error = flags.tol;
        opts.oracle.max_error = 10.0 * flags.tol;
        return opts;
    }

    static std::vector<double> values(const std::string& flag, const std::string& text) {
        if (text.empty()) throw UsageError(fmt::format("--{} is required", flag));
        try {
            return parse_range(text);
        } catch (const std::invalid_argument& e) {
            throw UsageError(fmt::format("--{}: {}", flag, e.what()));
        }
    }

    static double single(const std::string& flag, const std::string& text) {
        const auto v = values(flag, text);
        if (v.size() != 1) throw UsageError(fmt::format("--{} takes a single value here", flag));
        return v.front();
    }

    static int integer(const std::string& flag, double v) {
        if (v != std::floor(v) || std::fabs(v) > 1e6) {
            throw UsageError(fmt::format("--{} must be an integer (got {})", flag, v));
        }
        return static_cast<int>(v);
    }

    SystemParams params() const {
        return SystemParams(single("a", flags.a), single("b", flags.b), single("m", flags.m),
                            integer("N", single("N", flags.dimension)),
                            integer("l", single("l", flags.l)));
    }

    std::string cmd_analyze() const {
        const SystemParams p = params();
        const auto r = analysis::analyze(p, analysis_options());
        if (format == Format::Csv) {
            return render({kResultHeader, result_row(p, r, "ok")}, Format::Csv);
        }
        Table t;
        const auto row = result_row(p, r, "ok");
        for (std::size_t i = 0; i + 1 < row.size(); ++i) {
            if (kResultHeader[i] == "r0_coulomb" && row[i].empty()) {
                t.push_back({kResultHeader[i], "none (a = 0)"});
            } else if (kResultHeader[i] == "pt1_dE" && row[i].empty()) {
                t.push_back({kResultHeader[i], "n/a (a = 0)"});
            } else {
                t.push_back({kResultHeader[i], row[i]});
            }
        }
        return render(t, Format::Text);
    }

    std::string cmd_table(int& code) const {
        analysis::TableSpec spec;
        try {
            spec = analysis::table_spec(flags.table_id);
        } catch (const DomainError& e) {
            throw UsageError(e.what());
        }
        analysis::ReproduceOptions opts;
        opts.analysis = analysis_options();
        opts.threads = threads();
        const auto report = analysis::reproduce_table(spec, opts);

        Table t{{"table", "N", "a", "b", "l", "r0", "r0_expected", "r0_diff", "r_dE",
                 "r_dE_expected", "r_dE_diff", "dE", "dE_expected", "dE_diff", "regime", "verdict",
                 "detail"}};
        for (const auto& row : report.rows) {
            std::vector<std::string> line = {std::to_string(report.id),
                                             std::to_string(report.dimension), input(row.row.a),
                                             input(row.row.b), std::to_string(row.row.l)};
            const auto& r = row.result;
            const auto diff = [](double d) { return fmt::format("{:.3g}", d); };
            line.insert(line.end(),
                        {r ? radius(r->r0_asym) : "", input(row.row.expected_r0),
                         r ? diff(row.r0_diff) : "", r ? critical(r->r_delta_e) : "",
                         critical(row.row.expected_r_delta_e), r ? diff(row.r_delta_e_diff) : "",
                         r ? energy(r->delta_e) : "", input(row.row.expected_delta_e),
                         r ? diff(row.delta_e_diff) : "",
                         r ? analysis::to_string(r->regime) : "", analysis::to_string(row.verdict),
                         row.detail});
            t.push_back(std::move(line));
        }
        code = report.has_failures() ? kTableFail : kOk;
        std::string text = render(t, format);
        if (format == Format::Text) {
            text += fmt::format("table {} (N = {}): {} PASS, {} FAIL, {} EXPECTED-DISCREPANCY\n",
                                report.id, report.dimension, report.count(analysis::Verdict::Pass),
                                report.count(analysis::Verdict::Fail),
                                report.count(analysis::Verdict::ExpectedDiscrepancy));
        }
        return text;
    }

    std::string cmd_profile() const {
        const SystemParams p = params();
        if (!(flags.r_min > 0.0) || !(flags.r_max > flags.r_min) || !std::isfinite(flags.r_max)) {
            throw UsageError(fmt::format("profile needs 0 < --r-min < --r-max (got {}, {})",
                                         flags.r_min, flags.r_max));
        }
        if (flags.steps < 2) {
            throw UsageError(fmt::format("--steps must be >= 2 (got {})", flags.steps));
        }
        const auto model = asymptotic::AsymptoticModel::from(p);
        Table t{{"r", "dE", "f_log_deriv", "V_eff"}};
        for (int i = 0; i < flags.steps; ++i) {
            const double r = i + 1 == flags.steps
                                 ? flags.r_max
                                 : flags.r_min + (flags.r_max - flags.r_min) * i / (flags.steps - 1);
            const RadialPoint x(r);
            t.push_back({radius(r), energy(asymptotic::delta_e_profile(model, x)),
                         energy(asymptotic::f_log_deriv(model, x)),
                         energy(effective_potential(p, x))});
        }
        return render(t, format);
    }

    std::string cmd_sweep(int& code) const {
        const auto as = values("a", flags.a), bs = values("b", flags.b), ms = values("m", flags.m);
        const auto ns = values("N", flags.dimension), ls = values("l", flags.l);
        std::vector<SystemParams> grid;
        for (double a : as)
            for (double b : bs)
                for (double m : ms)
                    for (double n : ns)
                        for (double l : ls)
                            grid.emplace_back(a, b, m, integer("N", n), integer("l", l));
        if (grid.empty()) throw UsageError("sweep ranges are empty");

        std::vector<std::optional<analysis::SpectralResult>> results(grid.size());
        std::vector<std::string> status(grid.size(), "ok");
        const auto opts = analysis_options();
        parallel_for(grid.size(), threads(), [&](std::size_t i) {
            try {
                results[i] = analysis::analyze(grid[i], opts);
            } catch (const SolverError& e) {
                status[i] = e.what();
            }
        });
        Table t{kResultHeader};
        int failed = 0;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            if (!results[i]) ++failed;
            t.push_back(result_row(grid[i], results[i], status[i]));
        }
        code = failed == static_cast<int>(grid.size()) ? kSolver : kOk;
        return render(t, format);
    }
};

}  // namespace

std::vector<double> parse_range(const std::string& text) {
    std::vector<double> out;
    if (text.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(text);
        for (std::string piece; std::getline(ss, piece, ':');) parts.push_back(piece);
        if (parts.size() != 3) {
            throw std::invalid_argument(fmt::format("range '{}' must be start:stop:step", text));
        }
        const double start = parse_number(parts[0]);
        const double stop = parse_number(parts[1]);
        const double step = parse_number(parts[2]);
        if (!(step > 0.0)) throw std::invalid_argument(fmt::format("range '{}' needs step > 0", text));
        // indices, not accumulation, so 0:1.9:0.1 hits 1.9 and nothing drifts
        const double span = (stop - start) / step;
        if (span > 1e6) throw std::invalid_argument(fmt::format("range '{}' is too long", text));
        for (long i = 0; i <= static_cast<long>(std::floor(span + 1e-9)); ++i) {
            // snap away the last-ulp residue of start + i*step (0.1*19 -> 1.9)
            out.push_back(parse_number(fmt::format("{:.15g}", start + i * step)));
        }
        return out;
    }
    std::stringstream ss(text);
    for (std::string piece; std::getline(ss, piece, ',');) out.push_back(parse_number(piece));
    if (out.empty()) throw std::invalid_argument("empty value list");
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Session s{Flags{}, Format::Text, out, err};
    Flags& f = s.flags;

    CLI::App app{"Spectral analysis of the Cornell potential V(r) = -a/r + b r", "cornell_lab"};
    app.fallthrough();
    app.require_subcommand(1);
    app.set_config("--config", "", "Read flags from a flat 'key = value' file (flags win)");
    app.add_option("--a", f.a, "Coulomb strength a >= 0 (sweep: list or start:stop:step)");
    app.add_option("--b", f.b, "Linear strength b > 0 (sweep: list or range)");
    app.add_option("--m", f.m, "Mass m > 0")->capture_default_str();
    app.add_option("--N", f.dimension, "Spatial dimension N >= 3")->capture_default_str();
    app.add_option("--l", f.l, "Orbital quantum number l >= 0")->capture_default_str();
    app.add_option("--format", f.format, "Output format")
        ->check(CLI::IsMember({"text", "csv"}))
        ->capture_default_str();
    app.add_option("--out", f.out, "Write results to this file instead of stdout");
    app.add_option("--tol", f.tol, "Oracle target accuracy in GeV")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--r-min", f.r_min, "profile: first radius")->capture_default_str();
    app.add_option("--r-max", f.r_max, "profile: last radius")->capture_default_str();
    app.add_option("--steps", f.steps, "profile: number of samples")->capture_default_str();

    auto* analyze = app.add_subcommand("analyze", "Analyze one ground-state configuration");
    auto* table = app.add_subcommand("table", "Reproduce a reference table (1, 2 or 3)");
    table->add_option("id", f.table_id, "Table id")->required();
    auto* profile = app.add_subcommand("profile", "Sample the correction profile dE(r)");
    auto* sweep = app.add_subcommand("sweep", "Analyze every point of a parameter grid");

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }
    s.format = f.format == "csv" ? Format::Csv : Format::Text;

    try {
        int code = kOk;
        std::string text;
        if (analyze->parsed()) {
            text = s.cmd_analyze();
        } else if (table->parsed()) {
            text = s.cmd_table(code);
        } else if (profile->parsed()) {
            text = s.cmd_profile();
        } else if (sweep->parsed()) {
            text = s.cmd_sweep(code);
        }
        if (f.out.empty()) {
            out << text;
        } else {
            std::ofstream file(f.out, std::ios::binary);
            file << text;
            if (!file) {
                err << "error: cannot write " << f.out << '\n';
                return kUsage;
            }
        }
        return code;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\nrun 'cornell_lab --help' for usage\n";
        return kUsage;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kDomain;
    } catch (const SolverError& e) {
        err << "solver failure: " << e.what() << '\n';
        return kSolver;
    }
}

}  // namespace cornell::cli
