#pragma once

#include <ostream>
#include <string_view>
#include <vector>

#include "polyred/query.hpp"

namespace polyred {

/// Exit codes shared by every command.
enum ExitCode : int { kExitOk = 0, kExitVerifyFailed = 1, kExitBadInput = 2 };

/// Prints the reduced value; with options.trace, one "rule spec" line per step.
int cmd_reduce(const Query& q, std::ostream& out);

/// Symbolic value, its numeric evaluation, an independent numeric value
/// (quadrature or summation) and their difference. 0 iff the difference is
/// within tolerance plus both error bounds.
int cmd_verify(const Query& q, std::ostream& out);

/// Recomputes the table fixtures. 0 iff no row mismatches.
int cmd_tables(const std::vector<int>& tables, Format format, std::ostream& out);

/// Symbolic normal form and quadrature value of kappa_{r,q}.
int cmd_kappa(const Query& q, std::ostream& out);

/// "1..9", "3", "1,4,7", "2..4,9"; each table in 1..9.
std::vector<int> parse_table_range(std::string_view text);

}  // namespace polyred
