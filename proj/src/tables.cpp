#include "polyred/tables.hpp"

#include "polyred/reducer.hpp"
#include "polyred/render.hpp"

namespace polyred {

ZetaExpr TableRow::expected() const { return parse_expr(expected_text); }

ZetaExpr TableRow::erratum() const { return parse_expr(erratum_text); }

namespace {

TableRow J(int table, int m, int p, int q, std::string integrand, std::string expected) {
    return TableRow{table, std::move(integrand), IntegralSpec::J(m, p, q), 1, std::move(expected)};
}

TableRow K(int table, int r, int p, int q, int sign, std::string integrand, std::string expected) {
    return TableRow{table, std::move(integrand), IntegralSpec::K(r, p, q), sign, std::move(expected)};
}

// The printed value has a sign error; quadrature confirms the correction.
TableRow with_erratum(TableRow row, std::string corrected) {
    row.erratum_text = std::move(corrected);
    return row;
}

std::vector<TableRow> build_rows() {
    return {
        // J(-2,p,q)
        J(1, -2, 2, 2, "Li2^2/x^2", "4*z(2) - 2*z(3) - 5/2*z(4)"),
        J(1, -2, 2, 3, "Li2*Li3/x^2", "6*z(2) - 3*z(3) - 11/4*z(4) - z(2)*z(3)"),
        J(1, -2, 2, 4, "Li2*Li4/x^2", "8*z(2) - 4*z(3) - 3*z(4) - 2*z(5) - 7/4*z(6)"),
        J(1, -2, 3, 3, "Li3^2/x^2", "12*z(2) - 6*z(3) - 11/2*z(4) - 2*z(2)*z(3) - z(3)^2"),
        J(1, -2, 3, 4, "Li3*Li4/x^2",
          "20*z(2) - 10*z(3) - 17/2*z(4) - 2*z(5) - 2*z(2)*z(3) - 7/4*z(6) - z(3)^2 - z(3)*z(4)"),
        J(1, -2, 4, 4, "Li4^2/x^2",
          "40*z(2) - 20*z(3) - 17*z(4) - 4*z(5) - 4*z(2)*z(3) - 7/2*z(6) - 2*z(3)^2 - 2*z(3)*z(4) - 7/6*z(8)"),
        // J(-1,p,q)
        J(2, -1, 2, 2, "Li2^2/x", "2*z(2)*z(3) - 3*z(5)"),
        J(2, -1, 2, 3, "Li2*Li3/x", "1/2*z(3)^2"),
        J(2, -1, 2, 4, "Li2*Li4/x", "2*z(2)*z(5) + z(3)*z(4) - 4*z(7)"),
        J(2, -1, 3, 3, "Li3^2/x", "-2*z(2)*z(5) + 4*z(7)"),
        J(2, -1, 3, 4, "Li3*Li4/x", "7/12*z(8)"),
        J(2, -1, 4, 4, "Li4^2/x", "2*z(4)*z(5) + 2*z(2)*z(7) - 5*z(9)"),
        // J(0,p,q)
        J(3, 0, 2, 2, "Li2^2", "6 - 2*z(2) - 4*z(3) + 5/2*z(4)"),
        J(3, 0, 2, 3, "Li2*Li3", "-10 + 4*z(2) + 5*z(3) - 15/4*z(4) + z(2)*z(3)"),
        J(3, 0, 2, 4, "Li2*Li4", "15 - 7*z(2) - 5*z(3) + 4*z(4) - 3*z(5) + 7/4*z(6)"),
        with_erratum(J(3, 0, 3, 3, "Li3^2", "20 - 8*z(2) - 10*z(3) - 15/2*z(4) - 2*z(2)*z(3) + z(3)^2"),
                     "20 - 8*z(2) - 10*z(3) + 15/2*z(4) - 2*z(2)*z(3) + z(3)^2"),
        J(3, 0, 3, 4, "Li3*Li4",
          "-35 + 15*z(2) + 15*z(3) - 23/2*z(4) + 3*z(5) + 2*z(2)*z(3) - z(3)^2 - 7/4*z(6) + z(3)*z(4)"),
        J(3, 0, 4, 4, "Li4^2",
          "70 - 30*z(2) - 30*z(3) + 23*z(4) - 6*z(5) - 4*z(2)*z(3) + 7/2*z(6) + 2*z(3)^2 - 2*z(3)*z(4) + "
          "7/6*z(8)"),
        // J(1,p,q)
        J(4, 1, 2, 2, "x*Li2^2", "25/16 - 3/4*z(2) - z(3) + 5/4*z(4)"),
        J(4, 1, 2, 3, "x*Li2*Li3", "-47/32 + 7/8*z(2) + 3/8*z(3) - 15/16*z(4) + 1/2*z(2)*z(3)"),
        J(4, 1, 2, 4, "x*Li2*Li4", "173/128 - 31/32*z(2) + 3/16*z(3) + 1/4*z(4) - 3/4*z(5) + 7/8*z(6)"),
        J(4, 1, 3, 3, "x*Li3^2", "47/32 - 7/8*z(2) - 3/8*z(3) + 15/16*z(4) - 1/2*z(2)*z(3) + 1/2*z(3)^2"),
        J(4, 1, 3, 4, "x*Li3*Li4",
          "-361/256 + 59/64*z(2) + 3/32*z(3) - 19/32*z(4) + 1/4*z(2)*z(3) + 3/8*z(5) - 7/16*z(6) - "
          "1/4*z(3)^2 + 1/2*z(3)*z(4)"),
        J(4, 1, 4, 4, "x*Li4^2",
          "361/256 - 59/64*z(2) - 3/32*z(3) + 19/32*z(4) - 1/4*z(2)*z(3) - 3/8*z(5) + 7/16*z(6) + "
          "1/4*z(3)^2 - 1/2*z(3)*z(4) + 7/12*z(8)"),
        // K, weight 3
        K(5, 1, 1, 1, 1, "log(x)*log(1-x)^2/x", "-1/2*z(4)"),
        K(5, 1, 0, 2, 1, "log(x)*Li2/(1-x)", "-3/4*z(4)"),
        K(5, 2, 0, 1, -1, "log(x)^2*log(1-x)/(1-x)", "-1/2*z(4)"),
        // K, weight 4
        K(6, 1, 0, 3, 1, "log(x)*Li3/(1-x)", "2*z(2)*z(3) - 9/2*z(5)"),
        K(6, 1, 1, 2, -1, "log(x)*log(1-x)*Li2/x", "z(2)*z(3) - 9/6*z(5)"),
        K(6, 2, 0, 2, 1, "log(x)^2*Li2/(1-x)", "6*z(2)*z(3) - 11*z(5)"),
        K(6, 2, 1, 1, 1, "log(x)^2*log(1-x)^2/x", "-4*z(2)*z(3) + 8*z(5)"),
        K(6, 3, 0, 1, -1, "log(x)^3*log(1-x)/(1-x)", "-6*z(2)*z(3) + 12*z(5)"),
        // K, weight 5
        K(7, 1, 0, 4, 1, "log(x)*Li4/(1-x)", "-25/12*z(6) + z(3)^2"),
        K(7, 1, 1, 3, -1, "log(x)*log(1-x)*Li3/x", "-1/3*z(6) + 1/2*z(3)^2"),
        K(7, 1, 2, 2, 1, "log(x)*Li2^2/x", "-1/3*z(6)"),
        K(7, 2, 0, 3, 1, "log(x)^2*Li3/(1-x)", "-z(6) + z(3)^2"),
        K(7, 2, 1, 2, -1, "log(x)^2*log(1-x)*Li2/x", "-1/3*z(6)"),
        K(7, 3, 0, 2, 1, "log(x)^3*Li2/(1-x)", "8*z(6) - 6*z(3)^2"),
        K(7, 3, 1, 1, 1, "log(x)^3*log(1-x)^2/x", "-9*z(6) + 6*z(3)^2"),
        K(7, 4, 0, 1, -1, "log(x)^4*log(1-x)/(1-x)", "-18*z(6) + 12*z(3)^2"),
        // K, weight 6
        K(8, 1, 0, 5, 1, "log(x)*Li5/(1-x)", "2*z(3)*z(4) + 4*z(2)*z(5) - 10*z(7)"),
        K(8, 1, 1, 4, -1, "log(x)*log(1-x)*Li4/x", "z(3)*z(4) + 3*z(2)*z(5) - 6*z(7)"),
        K(8, 1, 2, 3, 1, "log(x)*Li2*Li3/x", "z(2)*z(5) - 2*z(7)"),
        K(8, 2, 0, 4, 1, "log(x)^2*Li4/(1-x)", "2*z(3)*z(4) + 20*z(2)*z(5) - 36*z(7)"),
        K(8, 2, 1, 3, -1, "log(x)^2*log(1-x)*Li3/x", "14*z(2)*z(5) - 24*z(7)"),
        K(8, 2, 2, 2, 1, "log(x)^2*Li2^2/x", "12*z(2)*z(5) - 20*z(7)"),
        K(8, 3, 0, 3, 1, "log(x)^3*Li3/(1-x)", "60*z(2)*z(5) - 102*z(7)"),
        with_erratum(K(8, 3, 1, 2, -1, "log(x)^3*log(1-x)*Li2/x", "-18*z(2)*z(5) + 30*z(7)"),
                     "18*z(2)*z(5) - 30*z(7)"),
        K(8, 4, 0, 2, 1, "log(x)^4*Li2/(1-x)", "120*z(2)*z(5) + 48*z(3)*z(4) - 264*z(7)"),
        K(8, 4, 1, 1, 1, "log(x)^4*log(1-x)^2/x", "-48*z(2)*z(5) - 48*z(3)*z(4) + 144*z(7)"),
        K(8, 5, 0, 1, -1, "log(x)^5*log(1-x)/(1-x)", "-120*z(2)*z(5) - 120*z(3)*z(4) + 360*z(7)"),
        // K(r,0,q), r + q = 7
        K(9, 1, 0, 6, 1, "log(x)*Li6/(1-x)", "k(1,6)"),
        K(9, 2, 0, 5, 1, "log(x)^2*Li5/(1-x)", "163/12*z(8) + 5*k(1,6) - 8*z(3)*z(5)"),
        K(9, 3, 0, 4, 1, "log(x)^3*Li4/(1-x)", "-1/2*z(8)"),
        K(9, 4, 0, 3, 1, "log(x)^4*Li3/(1-x)", "-187*z(8) - 60*k(1,6) + 120*z(3)*z(5)"),
        K(9, 5, 0, 2, 1, "log(x)^5*Li2/(1-x)", "-80*z(8) - 120*k(1,6)"),
        K(9, 6, 0, 1, -1, "log(x)^6*log(1-x)/(1-x)", "720*z(3)*z(5) - 900*z(8)"),
    };
}

}  // namespace

const std::vector<TableRow>& table_rows() {
    static const std::vector<TableRow> rows = build_rows();
    return rows;
}

std::vector<TableRow> table_rows(int table) {
    std::vector<TableRow> out;
    for (const auto& row : table_rows()) {
        if (row.table == table) {
            out.push_back(row);
        }
    }
    return out;
}

std::vector<TableCheck> check_table(int table) {
    std::vector<TableCheck> out;
    for (const auto& row : table_rows()) {
        if (row.table != table) {
            continue;
        }
        ZetaExpr computed = default_reducer().value(row.spec) * Rational(row.sign);
        RowStatus status = RowStatus::Mismatch;
        if (computed == row.expected()) {
            status = RowStatus::Exact;
        } else if (row.has_erratum() && computed == row.erratum()) {
            status = RowStatus::Erratum;
        }
        out.push_back(TableCheck{&row, std::move(computed), status});
    }
    return out;
}

}  // namespace polyred
