#ifndef CORNELL_TABLES_HPP
#define CORNELL_TABLES_HPP

#include <string_view>
#include <vector>

namespace cornell::analysis {

/// One reference ground-state row, values exactly as printed.
struct TableRow {
    double a;
    double b;
    int l;
    double expected_r0;
    double expected_r_delta_e;
    double expected_delta_e;
    /// Non-empty when the printed row is a suspected misprint.
    std::string_view note = {};
};

struct TableSpec {
    int id;
    int dimension;
    double mass;
    std::string_view caption;
    /// Rows that disagree with the oracle are reported as expected discrepancies.
    bool oracle_adjudicates;
    std::vector<TableRow> rows;
};

/// Reference tables 1-3 (N = 3 and N = 4 b-scans, N = 3 a-scan). Throws DomainError for other ids.
TableSpec table_spec(int id);

std::vector<int> table_ids();

}  // namespace cornell::analysis

#endif  // CORNELL_TABLES_HPP
