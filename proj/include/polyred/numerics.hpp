#pragma once

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "polyred/integral_spec.hpp"
#include "polyred/zeta_expr.hpp"

// Floating-point oracle, independent of the exact engine. Everything runs in
// long double and is sequential, so results are bitwise reproducible.
namespace polyred::numerics {

struct NumericValue {
    long double value = 0;
    long double error = 0;  // claimed bound on |value - true value|
};

struct QuadratureConfig {
    int max_level = 12;
    long double tolerance = 1e-12L;

    /// Defaults for 1D and iterated 2D quadrature.
    static QuadratureConfig one_dim() { return {12, 1e-12L}; }
    static QuadratureConfig two_dim() { return {9, 1e-8L}; }
};

/// Thrown when quadrature stops at max_level short of the tolerance.
class ToleranceNotReached : public std::runtime_error {
public:
    ToleranceNotReached(const std::string& what, NumericValue best)
        : std::runtime_error(what), best_(best) {}
    NumericValue best() const { return best_; }

private:
    NumericValue best_;
};

/// zeta(s), s >= 2, by Euler-Maclaurin summation.
NumericValue zeta_num(int s);

/// zeta(s) for any integer s != 1, negative arguments through the
/// functional equation. Used by the polylog expansion near x = 1.
long double zeta_any(int s);

/// Li_p(x) for p >= 0 and 0 <= x <= 1 (x = 1 needs p >= 2; p = 0 needs x < 1).
NumericValue polylog_num(int p, long double x);

/// Same, given xc = 1 - x exactly; keeps accuracy next to x = 1.
long double polylog(int p, long double x, long double xc);

namespace detail {
long double polylog_series(int p, long double x);
/// Expansion of Li_p(e^{-t}) in t = -log x; needs p >= 1 and t < 2 pi.
long double polylog_log_expansion(int p, long double t);
}  // namespace detail

/// Integrand on (0,1), given both x and 1 - x.
using Integrand = std::function<long double(long double x, long double xc)>;

/// Tanh-sinh quadrature over (0,1). The error bound is the difference of
/// the last two levels.
NumericValue tanh_sinh(const Integrand& f, QuadratureConfig cfg = QuadratureConfig::one_dim());

/// Iterated tanh-sinh over (0,1)^2; the inner tolerance is 10x tighter.
using Integrand2 =
    std::function<long double(long double x, long double xc, long double y, long double yc)>;
NumericValue tanh_sinh_2d(const Integrand2& f, QuadratureConfig cfg = QuadratureConfig::two_dim());

/// Quadrature of the spec's defining integral. Multi supports p <= 2.
NumericValue integrate_spec(const IntegralSpec& spec);
NumericValue integrate_spec(const IntegralSpec& spec, QuadratureConfig cfg);

/// Direct summation to 1e5 terms plus an Euler-Maclaurin tail.
NumericValue sum_num(const EulerSumSpec& spec);

using KappaEnv = std::map<std::pair<int, int>, NumericValue>;

/// Throws DomainError "unbound kappa: ..." if e uses a kappa not in env.
NumericValue eval_expr_num(const ZetaExpr& e, const KappaEnv& env = {});

/// K(r,0,q)/r! by quadrature.
NumericValue kappa_num(int r, int q);

/// Every kappa appearing in e, evaluated by kappa_num.
KappaEnv kappa_env_for(const ZetaExpr& e);

struct Maint3Check {
    NumericValue lhs;    // |kappa_{r,q} - (-1)^r zeta(q) (zeta(r+1) - 1)|
    NumericValue bound;  // (zeta(q-1) - zeta(q)) / 2^{r+1}
    bool holds;
    long double slack;   // bound - lhs
};

/// Numeric check of the kappa estimate, r >= 1, q >= 3.
Maint3Check maint3_check(int r, int q);

}  // namespace polyred::numerics
