#include "support.hpp"

#include <cmath>

#include "polyred/numerics.hpp"
#include "polyred/tables.hpp"

using namespace polyred;

TEST_CASE("fixture layout") {
    CHECK(table_rows().size() == 57);
    const int expected_counts[] = {6, 6, 6, 6, 3, 5, 8, 11, 6};
    for (int t = 1; t <= 9; ++t) {
        CHECK(table_rows(t).size() == static_cast<std::size_t>(expected_counts[t - 1]));
    }
    for (const auto& row : table_rows()) {
        const auto count = [&](const std::string& needle) {
            int n = 0;
            for (auto pos = row.integrand.find(needle); pos != std::string::npos;
                 pos = row.integrand.find(needle, pos + 1)) {
                ++n;
            }
            return n;
        };
        // sign = (-1)^{number of log(1-x) factors}
        int logs = count("log(1-x)^2") * 2 + count("log(1-x)") - count("log(1-x)^2");
        CHECK(row.sign == (logs % 2 == 0 ? 1 : -1));
    }
}

TEST_CASE("every row reproduces, with two sign errata") {
    int exact = 0;
    int errata = 0;
    for (int t = 1; t <= 9; ++t) {
        for (const auto& c : check_table(t)) {
            INFO(to_string(c.row->spec) << ": " << render_expr(c.computed, Format::Text));
            CHECK(c.ok());
            exact += c.status == RowStatus::Exact;
            errata += c.status == RowStatus::Erratum;
        }
    }
    CHECK(exact == 55);
    CHECK(errata == 2);
}

TEST_CASE("errata are confirmed by quadrature") {
    for (const auto& row : table_rows()) {
        if (!row.has_erratum()) {
            continue;
        }
        const long double q = numerics::integrate_spec(row.spec).value * row.sign;
        const long double corrected = numerics::eval_expr_num(row.erratum()).value;
        const long double printed = numerics::eval_expr_num(row.expected()).value;
        INFO(to_string(row.spec));
        CHECK(std::fabs(static_cast<double>(q - corrected)) < 1e-10);
        CHECK(std::fabs(static_cast<double>(q - printed)) > 1e-3);
    }
}

TEST_CASE("table values agree with quadrature") {
    for (const auto& row : table_rows()) {
        const auto v = numerics::eval_expr_num(row.has_erratum() ? row.erratum() : row.expected(),
                                               numerics::kappa_env_for(row.expected()));
        const long double q = numerics::integrate_spec(row.spec).value * row.sign;
        INFO(to_string(row.spec));
        CHECK(std::fabs(static_cast<double>(v.value - q)) < 1e-8);
    }
}
