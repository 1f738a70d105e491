#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "polyred/zeta_expr.hpp"

namespace polyred {

enum class Format { Text, Latex, Json };

Format parse_format(std::string_view name);

/// Terms in display order: descending weight, canonical monomial order within
/// a weight, positive coefficients ahead of negative ones.
std::vector<std::pair<Monomial, Rational>> display_terms(const ZetaExpr& e);

/// Text: "2*z(2)*z(3) - 3*z(5)", kappa as "k(1,6)", repeated factors as "z(3)^2".
/// LaTeX: "2\zeta(2)\zeta(3)-3\zeta(5)".
/// JSON: {"terms":[{"coeff":"-3/4","mono":[["zeta",4]]}]}.
std::string render_expr(const ZetaExpr& e, Format format);

/// Inverse of the text rendering. Also accepts "zeta(n)" / "kappa(r,q)" and
/// rational products such as "3/4*z(2)*z(2)". Throws ParseError.
ZetaExpr parse_expr(std::string_view text);

/// Inverse of the JSON rendering. Throws ParseError.
ZetaExpr parse_expr_json(std::string_view json_text);

}  // namespace polyred
