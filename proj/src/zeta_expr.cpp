#include "polyred/zeta_expr.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "polyred/special_numbers.hpp"

namespace polyred {

Generator Generator::zeta(int n) {
    if (n < 2) {
        throw DomainError("zeta(" + std::to_string(n) + "): argument >= 2 required");
    }
    return Generator(Kind::Zeta, n, 0);
}

Generator Generator::kappa(int r, int q) {
    if (r < 1 || q < 2 || (r + q) % 2 == 0) {
        throw DomainError("kappa(" + std::to_string(r) + "," + std::to_string(q) +
                          "): r >= 1, q >= 2 and odd r + q required");
    }
    return Generator(Kind::Kappa, r, q);
}

std::strong_ordering Generator::operator<=>(const Generator& other) const {
    if (auto c = weight() <=> other.weight(); c != 0) {
        return c;
    }
    if (auto c = kind_ <=> other.kind_; c != 0) {
        return c;
    }
    if (auto c = first_ <=> other.first_; c != 0) {
        return c;
    }
    return second_ <=> other.second_;
}

Monomial::Monomial(std::vector<Generator> factors) : factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end());
}

int Monomial::weight() const {
    int w = 0;
    for (const auto& g : factors_) {
        w += g.weight();
    }
    return w;
}

bool Monomial::has_kappa() const {
    return std::any_of(factors_.begin(), factors_.end(), [](const Generator& g) { return g.is_kappa(); });
}

Monomial Monomial::operator*(const Monomial& other) const {
    std::vector<Generator> merged;
    merged.reserve(factors_.size() + other.factors_.size());
    std::merge(factors_.begin(), factors_.end(), other.factors_.begin(), other.factors_.end(),
               std::back_inserter(merged));
    Monomial out;
    out.factors_ = std::move(merged);
    return out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& other) const {
    if (auto c = weight() <=> other.weight(); c != 0) {
        return c;
    }
    if (auto c = factors_.size() <=> other.factors_.size(); c != 0) {
        return c;
    }
    return std::lexicographical_compare_three_way(factors_.begin(), factors_.end(), other.factors_.begin(),
                                                  other.factors_.end());
}

std::pair<Rational, Monomial> normalize_even_zeta(const Monomial& m) {
    std::vector<Generator> rest;
    int even_weight = 0;
    int even_count = 0;
    Rational ratio = 1;
    for (const auto& g : m.factors()) {
        if (g.is_zeta() && g.first() % 2 == 0) {
            ++even_count;
            even_weight += g.first();
            ratio *= even_zeta_pi_ratio(g.first() / 2);
        } else {
            rest.push_back(g);
        }
    }
    if (even_count < 2) {
        return {Rational(1), m};
    }
    ratio /= even_zeta_pi_ratio(even_weight / 2);
    rest.push_back(Generator::zeta(even_weight));
    return {ratio, Monomial(std::move(rest))};
}

ZetaExpr::ZetaExpr(const Rational& constant) {
    if (constant != 0) {
        terms_.emplace(Monomial{}, constant);
    }
}

ZetaExpr ZetaExpr::zeta(int n) { return monomial(Monomial(Generator::zeta(n))); }

ZetaExpr ZetaExpr::kappa(int r, int q) { return monomial(Monomial(Generator::kappa(r, q))); }

ZetaExpr ZetaExpr::monomial(const Monomial& m, const Rational& coeff) {
    ZetaExpr e;
    e.add_term(m, coeff);
    return e;
}

bool ZetaExpr::has_kappa() const {
    return std::any_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first.has_kappa(); });
}

Rational ZetaExpr::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<int> ZetaExpr::weights() const {
    std::set<int> ws;
    for (const auto& [m, c] : terms_) {
        ws.insert(m.weight());
    }
    return {ws.begin(), ws.end()};
}

void ZetaExpr::add_normalized(const Monomial& m, const Rational& coeff) {
    if (coeff == 0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) {
            terms_.erase(it);
        }
    }
}

void ZetaExpr::add_term(const Monomial& m, const Rational& coeff) {
    auto [ratio, normal] = normalize_even_zeta(m);
    add_normalized(normal, coeff * ratio);
}

ZetaExpr& ZetaExpr::operator+=(const ZetaExpr& other) {
    for (const auto& [m, c] : other.terms_) {
        add_normalized(m, c);
    }
    return *this;
}

ZetaExpr& ZetaExpr::operator-=(const ZetaExpr& other) {
    for (const auto& [m, c] : other.terms_) {
        add_normalized(m, -c);
    }
    return *this;
}

ZetaExpr& ZetaExpr::operator*=(const Rational& scale) {
    if (scale == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) {
        c *= scale;
    }
    return *this;
}

ZetaExpr operator*(const ZetaExpr& a, const ZetaExpr& b) {
    ZetaExpr out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            out.add_term(ma * mb, ca * cb);
        }
    }
    return out;
}

ZetaExpr ZetaExpr::operator-() const {
    ZetaExpr out = *this;
    for (auto& [m, c] : out.terms_) {
        c = -c;
    }
    return out;
}

}  // namespace polyred
