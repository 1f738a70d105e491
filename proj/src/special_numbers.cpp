#include "polyred/special_numbers.hpp"

#include <mutex>
#include <vector>

namespace polyred {

namespace {

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_table{Rational(1)};

}  // namespace

Rational bernoulli(int n) {
    if (n < 0) {
        throw DomainError("bernoulli: n >= 0 required");
    }
    std::lock_guard lock(bernoulli_mutex);
    // sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1
    for (int m = static_cast<int>(bernoulli_table.size()); m <= n; ++m) {
        Rational acc = 0;
        for (int k = 0; k < m; ++k) {
            acc += Rational(binomial(m + 1, k)) * bernoulli_table[static_cast<std::size_t>(k)];
        }
        bernoulli_table.push_back(make_rational(-1, m + 1) * acc);
    }
    return bernoulli_table[static_cast<std::size_t>(n)];
}

Rational even_zeta_pi_ratio(int n) {
    if (n < 1) {
        throw DomainError("even_zeta_pi_ratio: n >= 1 required");
    }
    Integer pow2 = 1;
    pow2 <<= static_cast<unsigned>(2 * n - 1);
    Rational r = bernoulli(2 * n) * Rational(pow2) / Rational(factorial(static_cast<unsigned>(2 * n)));
    return sign_pow(n + 1) * r;
}

Rational harmonic(int n, int r) {
    if (n < 0) {
        throw DomainError("harmonic: n >= 0 required");
    }
    if (r < 1) {
        throw DomainError("harmonic: r >= 1 required");
    }
    Rational acc = 0;
    for (int k = 1; k <= n; ++k) {
        Integer pk;
        mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(r));
        acc += Rational(1, pk);
    }
    acc.canonicalize();
    return acc;
}

}  // namespace polyred
