#pragma once

#include <optional>

#include "polyred/integral_spec.hpp"
#include "polyred/zeta_expr.hpp"

namespace polyred {

/// Euler's evaluation of S_{1,q}, q >= 2:
/// (1 + q/2) zeta(q+1) - 1/2 sum_{j=1}^{q-2} zeta(j+1) zeta(q-j).
ZetaExpr euler_s1(int q);

/// Linear sum S_{r,q}. For r >= 2 it goes through K(r-1,0,q), so an even
/// r + q may leave kappa generators in the result.
ZetaExpr linear_sum(int r, int q);

/// Quadratic sum S_{1^2,s}, s >= 2:
/// S_{2,s} + s S_{1,s+1} - s(s+1)/6 zeta(s+2) + zeta(2) zeta(s) - R(s-2)/3.
ZetaExpr quadratic_sum(int s);

/// R(q) = Res_{z=0} (psi(-z) + gamma)^3 / z^{q+2}, q >= 0. Weight q + 4.
ZetaExpr residue_R(int q);

/// Dispatches on the spec's shape.
ZetaExpr euler_sum(const EulerSumSpec& spec);

/// S_{r,q} = zeta(r) zeta(q) + coeff * K(r-1,0,q) for r, q >= 2, usable in
/// both directions.
struct SumIntegralBridge {
    EulerSumSpec sum;
    IntegralSpec integral;
    Rational integral_coeff;
    ZetaExpr offset;

    ZetaExpr sum_from_integral(const ZetaExpr& integral_value) const;
    ZetaExpr integral_from_sum(const ZetaExpr& sum_value) const;
};

SumIntegralBridge sum_to_integral(int r, int q);

/// S_{1^p,q} = (-1)^p int_{(0,1)^p} Li_{q-p}(x_1...x_p) prod_j log(1-x_j) / (x_1...x_p) dx.
struct MultiIntegralIdentity {
    int p;
    int q;
    int sign;            // (-1)^p
    int polylog_index;   // q - p; 0 means x/(1-x)
    IntegralSpec integral;

    bool symbolic_supported() const { return p <= 2; }
    std::optional<EulerSumSpec> sum() const;
    /// Throws DomainError when p > 2.
    ZetaExpr value() const;
};

MultiIntegralIdentity multi_integral_identity(int p, int q);

}  // namespace polyred
