#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "polyred/rational.hpp"

namespace polyred {

/// A transcendental generator: zeta(n) for n >= 2, or the constant
/// kappa_{r,q} = K(r,0,q)/r! for odd weight r + q.
class Generator {
public:
    enum class Kind : std::uint8_t { Zeta = 0, Kappa = 1 };

    static Generator zeta(int n);
    static Generator kappa(int r, int q);

    Kind kind() const { return kind_; }
    bool is_zeta() const { return kind_ == Kind::Zeta; }
    bool is_kappa() const { return kind_ == Kind::Kappa; }

    /// zeta argument, or kappa's first index.
    int first() const { return first_; }
    /// kappa's second index; 0 for zeta.
    int second() const { return second_; }

    /// n for zeta(n); r + q + 1 for kappa_{r,q}.
    int weight() const { return kind_ == Kind::Zeta ? first_ : first_ + second_ + 1; }

    std::strong_ordering operator<=>(const Generator& other) const;
    bool operator==(const Generator& other) const = default;

private:
    Generator(Kind kind, int first, int second) : kind_(kind), first_(first), second_(second) {}

    Kind kind_;
    int first_;
    int second_;
};

/// Commutative product of generators, kept sorted. The empty monomial is 1.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(Generator g) : factors_{g} {}
    explicit Monomial(std::vector<Generator> factors);

    const std::vector<Generator>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }
    int weight() const;
    bool has_kappa() const;

    /// Plain product, no normalization.
    Monomial operator*(const Monomial& other) const;

    /// Ordered by weight, then factor count, then factors lexicographically.
    std::strong_ordering operator<=>(const Monomial& other) const;
    bool operator==(const Monomial& other) const = default;

private:
    std::vector<Generator> factors_;
};

/// Collapses the even-argument zeta factors of a monomial into a single
/// zeta(2k) using zeta(2n) = (-1)^{n+1} B_{2n} (2 pi)^{2n} / (2 (2n)!).
/// Returns the rational factor and the collapsed monomial; a monomial with at
/// most one even zeta factor comes back unchanged with factor 1.
std::pair<Rational, Monomial> normalize_even_zeta(const Monomial& m);

/// Finite rational combination of monomials. No zero coefficient is ever
/// stored and every monomial is even-zeta normalized, so two expressions are
/// equal iff their term maps are equal.
class ZetaExpr {
public:
    using TermMap = std::map<Monomial, Rational>;

    ZetaExpr() = default;
    ZetaExpr(const Rational& constant);  // NOLINT: implicit by design of the algebra
    ZetaExpr(long constant) : ZetaExpr(Rational(constant)) {}  // NOLINT

    static ZetaExpr zeta(int n);
    static ZetaExpr kappa(int r, int q);
    static ZetaExpr monomial(const Monomial& m, const Rational& coeff = 1);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool has_kappa() const;

    /// Coefficient of the given monomial (0 if absent).
    Rational coeff(const Monomial& m) const;
    /// Coefficient of the empty monomial.
    Rational constant() const { return coeff(Monomial{}); }

    /// Weights of all monomials, ascending and unique.
    std::vector<int> weights() const;

    ZetaExpr& operator+=(const ZetaExpr& other);
    ZetaExpr& operator-=(const ZetaExpr& other);
    ZetaExpr& operator*=(const Rational& scale);

    friend ZetaExpr operator+(ZetaExpr a, const ZetaExpr& b) { return a += b; }
    friend ZetaExpr operator-(ZetaExpr a, const ZetaExpr& b) { return a -= b; }
    friend ZetaExpr operator*(ZetaExpr a, const Rational& s) { return a *= s; }
    friend ZetaExpr operator*(const Rational& s, ZetaExpr a) { return a *= s; }
    friend ZetaExpr operator*(const ZetaExpr& a, const ZetaExpr& b);
    ZetaExpr operator-() const;

    bool operator==(const ZetaExpr& other) const = default;

    /// Adds coeff * m after normalizing m.
    void add_term(const Monomial& m, const Rational& coeff);

private:
    void add_normalized(const Monomial& m, const Rational& coeff);

    TermMap terms_;
};

}  // namespace polyred
