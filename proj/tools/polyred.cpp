#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "polyred/commands.hpp"
#include "polyred/numerics.hpp"

using namespace polyred;

int main(int argc, char** argv) {
    CLI::App app{"Exact reduction of polylogarithmic integrals and Euler sums to zeta values"};
    app.require_subcommand(1);

    std::string target;
    std::string format_name = "text";
    double tolerance = 1e-8;
    int digits = 15;
    bool trace = false;
    std::string range = "1..9";
    int kappa_r = 0;
    int kappa_q = 0;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_name, "Output format")->check(CLI::IsMember({"text", "latex", "json"}));
    };

    auto* reduce_cmd = app.add_subcommand("reduce", "Reduce an integral, Euler sum, R(q) or kappa(r,q)");
    reduce_cmd->add_option("target", target, "e.g. \"K(2,0,5)\", \"S(1^2,2)\"")->required();
    reduce_cmd->add_flag("--trace", trace, "Append the rule trace");
    add_format(reduce_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "Compare the reduction with quadrature or summation");
    verify_cmd->add_option("target", target)->required();
    verify_cmd->add_option("--tol", tolerance, "Absolute tolerance")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--digits", digits, "Digits printed")->check(CLI::Range(1, 21));
    add_format(verify_cmd);

    auto* tables_cmd = app.add_subcommand("tables", "Recompute the reference tables");
    tables_cmd->add_option("range", range, "e.g. 1..9, 2, 5,7");
    add_format(tables_cmd);

    auto* kappa_cmd = app.add_subcommand("kappa", "kappa(r,q) = K(r,0,q)/r!, symbolic and numeric");
    kappa_cmd->add_option("r", kappa_r)->required();
    kappa_cmd->add_option("q", kappa_q)->required();
    kappa_cmd->add_option("--digits", digits, "Digits printed")->check(CLI::Range(1, 21));
    add_format(kappa_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        QueryOptions options;
        options.format = parse_format(format_name);
        options.tolerance = tolerance;
        options.digits = digits;
        options.trace = trace;
        if (*reduce_cmd) {
            return cmd_reduce(parse_query(target, QueryKind::Reduce, options), std::cout);
        }
        if (*verify_cmd) {
            return cmd_verify(parse_query(target, QueryKind::Verify, options), std::cout);
        }
        if (*tables_cmd) {
            return cmd_tables(parse_table_range(range), options.format, std::cout);
        }
        if (*kappa_cmd) {
            const auto q = parse_query("kappa(" + std::to_string(kappa_r) + "," + std::to_string(kappa_q) + ")",
                                       QueryKind::Kappa, options);
            return cmd_kappa(q, std::cout);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const numerics::ToleranceNotReached& e) {
        std::cerr << "numeric error: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return kExitBadInput;
}
