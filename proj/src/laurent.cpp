#include "polyred/laurent.hpp"

#include <algorithm>
#include <string>

namespace polyred {

LaurentSeries::LaurentSeries(int lowest_exponent, std::vector<ZetaExpr> coefficients)
    : lowest_(lowest_exponent), coeffs_(std::move(coefficients)) {
    if (coeffs_.empty()) {
        throw DomainError("LaurentSeries: at least one coefficient required");
    }
}

ZetaExpr LaurentSeries::coeff(int k) const {
    if (k > truncation_order()) {
        throw DomainError("insufficient truncation: coefficient of z^" + std::to_string(k) +
                          " requested, series known through z^" + std::to_string(truncation_order()));
    }
    if (k < lowest_) {
        return {};
    }
    return coeffs_[static_cast<std::size_t>(k - lowest_)];
}

LaurentSeries LaurentSeries::operator*(const LaurentSeries& other) const {
    const int lowest = lowest_ + other.lowest_;
    const int trunc = std::min(truncation_order() + other.lowest_, other.truncation_order() + lowest_);
    std::vector<ZetaExpr> out(static_cast<std::size_t>(trunc - lowest + 1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
            const std::size_t k = i + j;
            if (k < out.size()) {
                out[k] += coeffs_[i] * other.coeffs_[j];
            }
        }
    }
    return LaurentSeries(lowest, std::move(out));
}

LaurentSeries psi_series(int order) {
    if (order < 0) {
        throw DomainError("psi_series: order >= 0 required");
    }
    std::vector<ZetaExpr> coeffs;
    coeffs.emplace_back(1);  // z^{-1}
    coeffs.emplace_back();   // z^0
    for (int k = 1; k <= order; ++k) {
        coeffs.push_back(-ZetaExpr::zeta(k + 1));
    }
    return LaurentSeries(-1, std::move(coeffs));
}

ZetaExpr laurent_mul_residue(std::span<const LaurentSeries> series, int pole_shift) {
    if (series.empty()) {
        throw DomainError("laurent_mul_residue: empty product");
    }
    LaurentSeries product = series.front();
    for (std::size_t i = 1; i < series.size(); ++i) {
        product = product * series[i];
    }
    return product.coeff(pole_shift - 1);
}

}  // namespace polyred
