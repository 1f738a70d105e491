#pragma once

#include <doctest.h>

#include "polyred/render.hpp"

namespace doctest {
template <>
struct StringMaker<polyred::ZetaExpr> {
    static String convert(const polyred::ZetaExpr& e) { return polyred::render_expr(e, polyred::Format::Text).c_str(); }
};
}  // namespace doctest
