#include "polyred/euler_sums.hpp"

#include <array>
#include <string>

#include "polyred/laurent.hpp"
#include "polyred/reducer.hpp"

namespace polyred {

ZetaExpr euler_s1(int q) {
    if (q < 2) {
        throw DomainError("S(1," + std::to_string(q) + "): divergent, q >= 2 required");
    }
    ZetaExpr out = ZetaExpr::zeta(q + 1) * make_rational(q + 2, 2);
    for (int j = 1; j <= q - 2; ++j) {
        out -= ZetaExpr::zeta(j + 1) * ZetaExpr::zeta(q - j) * make_rational(1, 2);
    }
    return out;
}

ZetaExpr linear_sum(int r, int q) {
    EulerSumSpec::linear(r, q);
    if (r == 1) {
        return euler_s1(q);
    }
    const auto bridge = sum_to_integral(r, q);
    return bridge.sum_from_integral(default_reducer().value(bridge.integral));
}

ZetaExpr residue_R(int q) {
    if (q < 0) {
        throw DomainError("R(" + std::to_string(q) + "): q >= 0 required");
    }
    // The product of three series with lowest exponent -1 and truncation t is
    // known through t - 2; the residue needs the coefficient of z^{q+1}.
    const auto psi = psi_series(q + 3);
    const std::array<LaurentSeries, 3> cube{psi, psi, psi};
    return laurent_mul_residue(cube, q + 2);
}

ZetaExpr quadratic_sum(int s) {
    if (s < 2) {
        throw DomainError("S(1^2," + std::to_string(s) + "): divergent, s >= 2 required");
    }
    ZetaExpr out = linear_sum(2, s);
    out += euler_s1(s + 1) * Rational(s);
    out -= ZetaExpr::zeta(s + 2) * make_rational(s * (s + 1), 6);
    out += ZetaExpr::zeta(2) * ZetaExpr::zeta(s);
    out -= residue_R(s - 2) * make_rational(1, 3);
    return out;
}

ZetaExpr euler_sum(const EulerSumSpec& spec) {
    if (spec.multiplicity() == 1) {
        return linear_sum(spec.base_exponent(), spec.outer_exponent());
    }
    return quadratic_sum(spec.outer_exponent());
}

ZetaExpr SumIntegralBridge::sum_from_integral(const ZetaExpr& integral_value) const {
    return offset + integral_value * integral_coeff;
}

ZetaExpr SumIntegralBridge::integral_from_sum(const ZetaExpr& sum_value) const {
    return (sum_value - offset) * (1 / integral_coeff);
}

SumIntegralBridge sum_to_integral(int r, int q) {
    if (r < 2 || q < 2) {
        throw DomainError("sum_to_integral(" + std::to_string(r) + "," + std::to_string(q) +
                          "): r, q >= 2 required");
    }
    // S_{r,q} = zeta(r) zeta(q) - (-1)^{r-1}/(r-1)! K(r-1,0,q)
    const Rational coeff = Rational(-sign_pow(r - 1)) / Rational(factorial(static_cast<unsigned>(r - 1)));
    return SumIntegralBridge{EulerSumSpec::linear(r, q), IntegralSpec::K(r - 1, 0, q), coeff,
                             ZetaExpr::zeta(r) * ZetaExpr::zeta(q)};
}

std::optional<EulerSumSpec> MultiIntegralIdentity::sum() const {
    if (p == 1) {
        return EulerSumSpec::linear(1, q);
    }
    if (p == 2) {
        return EulerSumSpec::quadratic(q);
    }
    return std::nullopt;
}

ZetaExpr MultiIntegralIdentity::value() const {
    const auto s = sum();
    if (!s) {
        throw DomainError("multi(" + std::to_string(p) + "," + std::to_string(q) +
                          "): symbolic evaluation only for p <= 2");
    }
    return euler_sum(*s);
}

MultiIntegralIdentity multi_integral_identity(int p, int q) {
    const auto spec = IntegralSpec::Multi(p, q);
    return MultiIntegralIdentity{p, q, sign_pow(p), q - p, spec};
}

}  // namespace polyred
