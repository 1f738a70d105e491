#pragma once

#include <span>
#include <vector>

#include "polyred/zeta_expr.hpp"

namespace polyred {

/// Truncated formal Laurent series sum_{k=lowest}^{truncation} c_k z^k with
/// ZetaExpr coefficients. Coefficients past the truncation order are unknown.
class LaurentSeries {
public:
    LaurentSeries(int lowest_exponent, std::vector<ZetaExpr> coefficients);

    int lowest_exponent() const { return lowest_; }
    int truncation_order() const { return lowest_ + static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<ZetaExpr>& coefficients() const { return coeffs_; }

    /// Throws DomainError when k is beyond the truncation order.
    ZetaExpr coeff(int k) const;

    /// Convolution. The product is known through
    /// min(t1 + l2, t2 + l1) for truncation orders t and lowest exponents l.
    LaurentSeries operator*(const LaurentSeries& other) const;

private:
    int lowest_;
    std::vector<ZetaExpr> coeffs_;
};

/// psi(-z) + gamma = 1/z - sum_{k>=2} zeta(k) z^{k-1}, truncated at z^order.
LaurentSeries psi_series(int order);

/// Coefficient of z^{-1} in (prod series) / z^pole_shift.
ZetaExpr laurent_mul_residue(std::span<const LaurentSeries> series, int pole_shift);

}  // namespace polyred
