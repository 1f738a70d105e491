#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "polyred/errors.hpp"
#include "polyred/integral_spec.hpp"
#include "polyred/render.hpp"

namespace polyred {

/// R(q): the residue appearing in the quadratic-sum formula.
struct ResidueTarget {
    int q;
    bool operator==(const ResidueTarget&) const = default;
};

/// kappa(r,q) = K(r,0,q) / r!.
struct KappaTarget {
    int r;
    int q;
    bool operator==(const KappaTarget&) const = default;
};

using Target = std::variant<IntegralSpec, EulerSumSpec, ResidueTarget, KappaTarget>;

enum class QueryKind { Reduce, Verify, Tables, Kappa, Sum };

struct QueryOptions {
    Format format = Format::Text;
    double tolerance = 1e-8;
    int digits = 15;
    bool trace = false;
};

struct Query {
    QueryKind kind = QueryKind::Reduce;
    Target target;
    QueryOptions options;
};

/// Grammar (whitespace-insensitive, integer arguments):
///   J(m,p,q) | J0(m,q) | K(r,p,q) | L(m,r,p) | S(r,q) | S(1^2,q) | R(q)
///   | kappa(r,q) | multi(p,q)
/// Syntax errors raise ParseError; out-of-domain arguments raise DomainError.
Target parse_target(std::string_view text);

Query parse_query(std::string_view text, QueryKind kind = QueryKind::Reduce, QueryOptions options = {});

std::string to_string(const Target& target);

}  // namespace polyred
