#pragma once

#include <string>
#include <vector>

#include "polyred/integral_spec.hpp"
#include "polyred/zeta_expr.hpp"

namespace polyred {

/// One row of the published evaluation tables. The integrand is stored as
/// printed, with log(1-x) factors; `sign` = (-1)^{number of log(1-x)} maps
/// it onto `spec`, whose integrand uses Li_1(x) = -log(1-x).
struct TableRow {
    int table;
    std::string integrand;
    IntegralSpec spec;
    int sign;
    std::string expected_text;
    /// Corrected value where the printed one is wrong; empty otherwise.
    std::string erratum_text = {};

    ZetaExpr expected() const;
    bool has_erratum() const { return !erratum_text.empty(); }
    ZetaExpr erratum() const;
};

/// Rows of tables 1..9 in printed order.
const std::vector<TableRow>& table_rows();

std::vector<TableRow> table_rows(int table);

enum class RowStatus { Exact, Erratum, Mismatch };

struct TableCheck {
    const TableRow* row;
    ZetaExpr computed;  // sign * reduce(spec)
    RowStatus status;   // Erratum: differs from print, equals the recorded correction

    bool ok() const { return status != RowStatus::Mismatch; }
};

std::vector<TableCheck> check_table(int table);

}  // namespace polyred
