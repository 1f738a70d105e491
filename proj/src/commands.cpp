#include "polyred/commands.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "polyred/euler_sums.hpp"
#include "polyred/numerics.hpp"
#include "polyred/reducer.hpp"
#include "polyred/tables.hpp"

namespace polyred {

using nlohmann::json;

namespace {

struct Symbolic {
    ZetaExpr value;
    std::vector<TraceStep> trace;
};

Symbolic symbolic_value(const Target& target) {
    struct Visitor {
        Symbolic operator()(const IntegralSpec& s) const {
            auto r = reduce(s);
            return {std::move(r.value), std::move(r.trace)};
        }
        Symbolic operator()(const EulerSumSpec& s) const { return {euler_sum(s), {}}; }
        Symbolic operator()(const ResidueTarget& r) const { return {residue_R(r.q), {}}; }
        Symbolic operator()(const KappaTarget& k) const {
            auto r = reduce_K(k.r, 0, k.q);
            return {r.value * (1 / Rational(factorial(static_cast<unsigned>(k.r)))), std::move(r.trace)};
        }
    };
    return std::visit(Visitor{}, target);
}

numerics::NumericValue independent_value(const Target& target) {
    struct Visitor {
        numerics::NumericValue operator()(const IntegralSpec& s) const { return numerics::integrate_spec(s); }
        numerics::NumericValue operator()(const EulerSumSpec& s) const { return numerics::sum_num(s); }
        numerics::NumericValue operator()(const ResidueTarget& r) const {
            throw DomainError("R(" + std::to_string(r.q) + "): no independent numeric oracle");
        }
        numerics::NumericValue operator()(const KappaTarget& k) const { return numerics::kappa_num(k.r, k.q); }
    };
    return std::visit(Visitor{}, target);
}

std::string decimal(long double v, int digits) {
    std::ostringstream s;
    s << std::setprecision(digits) << v;
    return s.str();
}

std::string scientific(long double v) {
    std::ostringstream s;
    s << std::scientific << std::setprecision(2) << v;
    return s.str();
}

const char* status_name(RowStatus s) {
    switch (s) {
        case RowStatus::Exact:
            return "ok";
        case RowStatus::Erratum:
            return "erratum";
        case RowStatus::Mismatch:
            return "MISMATCH";
    }
    return "";
}

}  // namespace

int cmd_reduce(const Query& q, std::ostream& out) {
    const auto sym = symbolic_value(q.target);
    const auto& opt = q.options;
    if (opt.format == Format::Json) {
        json doc = json::parse(render_expr(sym.value, Format::Json));
        if (opt.trace) {
            doc["trace"] = json::array();
            for (const auto& step : sym.trace) {
                doc["trace"].push_back({{"rule", step.rule}, {"spec", to_string(step.spec)}});
            }
        }
        out << doc.dump() << "\n";
        return kExitOk;
    }
    out << render_expr(sym.value, opt.format) << "\n";
    if (opt.trace) {
        for (const auto& step : sym.trace) {
            out << step.rule << " " << to_string(step.spec) << "\n";
        }
    }
    return kExitOk;
}

int cmd_verify(const Query& q, std::ostream& out) {
    const auto sym = symbolic_value(q.target);
    const auto num = numerics::eval_expr_num(sym.value, numerics::kappa_env_for(sym.value));
    const auto oracle = independent_value(q.target);
    const long double diff = std::fabs(num.value - oracle.value);
    const long double allowed = q.options.tolerance + num.error + oracle.error;
    const bool pass = diff <= allowed;
    const int digits = q.options.digits;
    if (q.options.format == Format::Json) {
        json doc{{"target", to_string(q.target)},
                 {"symbolic", json::parse(render_expr(sym.value, Format::Json))},
                 {"numeric", static_cast<double>(num.value)},
                 {"quadrature", static_cast<double>(oracle.value)},
                 {"quadrature_error", static_cast<double>(oracle.error)},
                 {"diff", static_cast<double>(diff)},
                 {"tolerance", q.options.tolerance},
                 {"pass", pass}};
        out << doc.dump() << "\n";
    } else {
        out << "target:     " << to_string(q.target) << "\n"
            << "symbolic:   " << render_expr(sym.value, q.options.format) << "\n"
            << "numeric:    " << decimal(num.value, digits) << "\n"
            << "quadrature: " << decimal(oracle.value, digits) << " +- " << scientific(oracle.error) << "\n"
            << "difference: " << scientific(diff) << "\n"
            << (pass ? "PASS" : "FAIL") << " (tolerance " << scientific(q.options.tolerance) << ")\n";
    }
    return pass ? kExitOk : kExitVerifyFailed;
}

int cmd_tables(const std::vector<int>& tables, Format format, std::ostream& out) {
    int total = 0;
    int exact = 0;
    int errata = 0;
    json rows = json::array();
    for (int t : tables) {
        for (const auto& check : check_table(t)) {
            const auto& row = *check.row;
            ++total;
            exact += check.status == RowStatus::Exact;
            errata += check.status == RowStatus::Erratum;
            if (format == Format::Json) {
                json r{{"table", row.table},
                       {"spec", to_string(row.spec)},
                       {"integrand", row.integrand},
                       {"status", status_name(check.status)},
                       {"computed", json::parse(render_expr(check.computed, Format::Json))}};
                if (check.status != RowStatus::Exact) {
                    r["printed"] = json::parse(render_expr(row.expected(), Format::Json));
                }
                rows.push_back(std::move(r));
                continue;
            }
            out << "T" << row.table << "  " << std::left << std::setw(10) << to_string(row.spec) << std::setw(28)
                << row.integrand << status_name(check.status);
            if (check.status == RowStatus::Exact) {
                out << "  " << render_expr(check.computed, format) << "\n";
            } else {
                out << "\n    printed:  " << render_expr(row.expected(), format)
                    << "\n    computed: " << render_expr(check.computed, format) << "\n";
            }
        }
    }
    const int ok = exact + errata;
    if (format == Format::Json) {
        out << json{{"rows", rows}, {"total", total}, {"exact", exact}, {"errata", errata}}.dump() << "\n";
    } else {
        out << ok << "/" << total << " rows reproduced (" << exact << " as printed, " << errata
            << " printed errata)\n";
    }
    return ok == total ? kExitOk : kExitVerifyFailed;
}

int cmd_kappa(const Query& q, std::ostream& out) {
    const auto* k = std::get_if<KappaTarget>(&q.target);
    if (k == nullptr) {
        throw DomainError("kappa: expected a target kappa(r,q)");
    }
    const auto sym = symbolic_value(q.target);
    const auto num = numerics::kappa_num(k->r, k->q);
    if (q.options.format == Format::Json) {
        out << json{{"target", to_string(q.target)},
                    {"symbolic", json::parse(render_expr(sym.value, Format::Json))},
                    {"quadrature", static_cast<double>(num.value)},
                    {"quadrature_error", static_cast<double>(num.error)}}
                   .dump()
            << "\n";
    } else {
        out << to_string(q.target) << " = " << render_expr(sym.value, q.options.format) << "\n"
            << "quadrature: " << decimal(num.value, q.options.digits) << " +- " << scientific(num.error) << "\n";
    }
    return kExitOk;
}

std::vector<int> parse_table_range(std::string_view text) {
    std::vector<int> out;
    std::size_t pos = 0;
    auto read_int = [&]() {
        const std::size_t start = pos;
        int v = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            v = v * 10 + (text[pos++] - '0');
            if (v > 100) {
                throw ParseError("table number out of range", start);
            }
        }
        if (pos == start) {
            throw ParseError("expected a table number", start);
        }
        if (v < 1 || v > 9) {
            throw ParseError("tables are numbered 1..9", start);
        }
        return v;
    };
    while (true) {
        const int lo = read_int();
        int hi = lo;
        if (text.substr(pos, 2) == "..") {
            pos += 2;
            hi = read_int();
            if (hi < lo) {
                throw ParseError("empty table range", pos);
            }
        }
        for (int t = lo; t <= hi; ++t) {
            out.push_back(t);
        }
        if (pos == text.size()) {
            break;
        }
        if (text[pos] != ',') {
            throw ParseError("expected ',' or '..'", pos);
        }
        ++pos;
    }
    return out;
}

}  // namespace polyred
