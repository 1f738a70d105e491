#include "polyred/reducer.hpp"

#include <mutex>
#include <set>
#include <stdexcept>

#include "polyred/euler_sums.hpp"
#include "polyred/special_numbers.hpp"

namespace polyred {

namespace {

Rational fact(int n) { return Rational(factorial(static_cast<unsigned>(n))); }

/// zeta(n), with zeta(1) read as 0.
ZetaExpr zeta_or_zero(int n) { return n == 1 ? ZetaExpr{} : ZetaExpr::zeta(n); }

RuleApplication closed(std::string rule, const IntegralSpec& target, ZetaExpr value) {
    return RuleApplication{std::move(rule), target, std::move(value), {}};
}

}  // namespace

Rational reduce_J_m11(int m) {
    if (m < 0) {
        throw DomainError("J(" + std::to_string(m) + ",1,1): m >= 0 required");
    }
    Rational acc = harmonic(m + 1, 2);
    for (int k = 1; k <= m; ++k) {
        acc += harmonic(k, 1) / Rational(k + 1);
    }
    return acc * make_rational(2, m + 1);
}

ZetaExpr j_minus1(int p, int q) {
    if (p < 1 || q < 1) {
        throw DomainError("J(-1,p,q): p, q >= 1 required");
    }
    if (p < q) {
        std::swap(p, q);
    }
    const int sq = sign_pow(q);
    ZetaExpr out = ZetaExpr::zeta(p + q + 1) * make_rational(-sq * (p + q + 2), 2);
    for (int j = 1; j <= q / 2; ++j) {
        out += ZetaExpr::zeta(2 * j) * ZetaExpr::zeta(p + q - 2 * j + 1) * Rational(2 * sq);
    }
    for (int j = 1; j <= p - q; ++j) {
        out += ZetaExpr::zeta(j + q) * ZetaExpr::zeta(p - j + 1) * make_rational(sq, 2);
    }
    return out;
}

ZetaExpr theorem_r0q(int r, int q) {
    if (r < 1 || q < 1) {
        throw DomainError("theorem_r0q: r, q >= 1 required");
    }
    if ((r + q) % 2 != 0) {
        throw DomainError("theorem_r0q(" + std::to_string(r) + "," + std::to_string(q) +
                          "): even weight r + q required");
    }
    const int w = r + q;
    const int s = sign_pow(r + 1);
    const Rational bracket =
        make_rational(1, 2) - Rational(s) / 2 * Rational(binomial(w, r + 1)) - Rational(s) / 2 * Rational(binomial(w, q));
    ZetaExpr inner = ZetaExpr::zeta(w + 1) * (Rational(s) * bracket);
    inner += zeta_or_zero(r + 1) * zeta_or_zero(q) * make_rational(sign_pow(r) - 1, 2);
    for (int k = 1; k <= (r + 1) / 2; ++k) {
        inner += ZetaExpr::zeta(2 * k) * zeta_or_zero(w - 2 * k + 1) * Rational(binomial(w - 2 * k, q - 1));
    }
    for (int k = 1; k <= q / 2; ++k) {
        inner += ZetaExpr::zeta(2 * k) * zeta_or_zero(w - 2 * k + 1) * Rational(binomial(w - 2 * k, r));
    }
    return inner * fact(r);
}

ZetaExpr k_r01(int r) {
    if (r < 1) {
        throw DomainError("K(" + std::to_string(r) + ",0,1): r >= 1 required");
    }
    return (euler_s1(r + 1) - ZetaExpr::zeta(r + 2)) * (Rational(sign_pow(r)) * fact(r));
}

SymmetryRewrite symmrec(int r, int q) {
    if (r < 1 || q < 2) {
        throw DomainError("symmrec(" + std::to_string(r) + "," + std::to_string(q) + "): r >= 1, q >= 2 required");
    }
    SymmetryRewrite out{IntegralSpec::K(r, 0, q),
                        IntegralSpec::K(q - 1, 0, r + 1),
                        Rational(sign_pow(r + q)) * fact(r) / fact(q - 1),
                        (ZetaExpr::zeta(r + 1) * ZetaExpr::zeta(q) - ZetaExpr::zeta(r + q + 1)) *
                            (Rational(sign_pow(r)) * fact(r)),
                        q == r + 1,
                        {}};
    if (out.self_paired) {
        // K = -K + offset
        out.closed_form = out.offset * make_rational(1, 2);
    }
    return out;
}

Rational log_moment(int k, int r) {
    if (k < 1 || r < 1) {
        throw DomainError("log_moment: k, r >= 1 required");
    }
    Integer kr;
    mpz_ui_pow_ui(kr.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(r));
    return Rational(sign_pow(r - 1)) * fact(r - 1) / Rational(kr);
}

ZetaExpr log_over_one_minus_x(int r) {
    if (r < 2) {
        throw DomainError("int log^{r-1}(x)/(1-x): divergent, r >= 2 required");
    }
    return ZetaExpr::zeta(r) * (Rational(sign_pow(r - 1)) * fact(r - 1));
}

ZetaExpr double_integral_value(int q) {
    if (q < 0) {
        throw DomainError("double_integral_value: q >= 0 required");
    }
    return quadratic_sum(q + 2);
}

Reducer::Reducer(ReducerOptions options) : options_(options) {}

Reducer::Reducer(ReducerOptions options, std::map<int, KappaEliminations> fixed_eliminations)
    : options_(options), fixed_eliminations_(true), eliminations_(std::move(fixed_eliminations)) {}

KappaEliminations Reducer::kappa_eliminations(int s) const {
    std::lock_guard lock(elimination_mutex_);
    if (auto it = eliminations_.find(s); it != eliminations_.end()) {
        return it->second;
    }
    if (fixed_eliminations_ || !options_.derive_kappa_relations) {
        return {};
    }
    return eliminations_.emplace(s, derive_kappa_eliminations(s, options_)).first->second;
}

ZetaExpr substitute_kappa(const ZetaExpr& e, const KappaEliminations& eliminations) {
    ZetaExpr out;
    for (const auto& [m, c] : e.terms()) {
        ZetaExpr term = ZetaExpr::monomial(Monomial{}, c);
        std::vector<Generator> rest;
        for (const auto& g : m.factors()) {
            auto it = g.is_kappa() ? eliminations.find({g.first(), g.second()}) : eliminations.end();
            if (it != eliminations.end()) {
                term = term * it->second;
            } else {
                rest.push_back(g);
            }
        }
        out += term * ZetaExpr::monomial(Monomial(std::move(rest)));
    }
    return out;
}

namespace {

// First nonzero difference between two derivations of one K value.
ZetaExpr first_discrepancy(Reducer& red, int s) {
    for (int r = 1; r + 2 <= s; ++r) {
        for (int p = 1; 2 * p <= s - r; ++p) {
            const int q = s - r - p;
            // K(r,p,q) = -1/(r+1) [K(r+1,p-1,q) + K(r+1,p,q-1)]
            ZetaExpr d = red.value(IntegralSpec::K(r, p, q)) +
                         (red.value(IntegralSpec::K(r + 1, p - 1, q)) + red.value(IntegralSpec::K(r + 1, p, q - 1))) *
                             make_rational(1, r + 1);
            if (!d.is_zero()) {
                return d;
            }
        }
    }
    for (int r = 1; s - r >= 2; ++r) {
        const auto rw = symmrec(r, s - r);
        ZetaExpr d = red.value(rw.source) - red.value(rw.target) * rw.factor - rw.offset;
        if (!d.is_zero()) {
            return d;
        }
    }
    return {};
}

}  // namespace

KappaEliminations derive_kappa_eliminations(int s, ReducerOptions options) {
    KappaEliminations elims;
    if (s < 3 || s % 2 == 0) {
        return elims;
    }
    options.derive_kappa_relations = false;
    while (true) {
        Reducer red(options, {{s, elims}});
        const ZetaExpr d = first_discrepancy(red, s);
        if (d.is_zero()) {
            return elims;
        }
        // Eliminate the kappa with the largest first index.
        const Generator* pick = nullptr;
        Rational c;
        for (const auto& [m, coeff] : d.terms()) {
            if (!m.has_kappa()) {
                continue;
            }
            if (m.factors().size() != 1) {
                throw std::logic_error("non-linear kappa term in a derived relation");
            }
            const auto& g = m.factors().front();
            if (pick == nullptr || g.first() > pick->first()) {
                pick = &g;
                c = coeff;
            }
        }
        if (pick == nullptr) {
            throw std::logic_error("inconsistent reduction at index sum " + std::to_string(s));
        }
        const std::pair<int, int> key{pick->first(), pick->second()};
        const ZetaExpr replacement = (ZetaExpr::kappa(key.first, key.second) * c - d) * (1 / c);
        const KappaEliminations single{{key, replacement}};
        for (auto& [k, v] : elims) {
            v = substitute_kappa(v, single);
        }
        elims.emplace(key, replacement);
    }
}

RuleApplication Reducer::rule_for(const IntegralSpec& spec) const {
    switch (spec.family()) {
        case Family::J:
            return rule_J(spec.arg(0), spec.arg(1), spec.arg(2));
        case Family::J0:
            return rule_J0(spec.arg(0), spec.arg(1));
        case Family::K:
            return rule_K(spec.arg(0), spec.arg(1), spec.arg(2));
        case Family::L:
            return rule_L(spec.arg(0), spec.arg(1), spec.arg(2));
        case Family::Multi:
            return rule_multi(spec.arg(0), spec.arg(1));
    }
    throw DomainError("unknown integral family");
}

// J(m,p,q) with p >= q.
RuleApplication Reducer::rule_J(int m, int p, int q) const {
    const auto self = IntegralSpec::J(m, p, q);
    if (m == -1) {
        return closed("jm1pq", self, j_minus1(p, q));
    }
    if (q >= 2) {
        // Integration by parts against x^m; also valid at m = -2.
        const Rational inv = make_rational(1, m + 1);
        return RuleApplication{"reclem-i",
                               self,
                               ZetaExpr::zeta(p) * ZetaExpr::zeta(q) * inv,
                               {{-inv, IntegralSpec::J(m, p - 1, q)}, {-inv, IntegralSpec::J(m, p, q - 1)}}};
    }
    // q == 1
    if (m == -2) {
        if (p == 1) {
            return closed("reclem2-base", self, ZetaExpr::zeta(2) * Rational(2));
        }
        return RuleApplication{"reclem2",
                               self,
                               ZetaExpr::zeta(p + 1),
                               {{Rational(1), IntegralSpec::J(-2, p - 1, 1)}, {Rational(-1), IntegralSpec::J(-1, p - 1, 1)}}};
    }
    if (p == 1) {
        return closed("J_m11", self, ZetaExpr(reduce_J_m11(m)));
    }
    if (m == 0) {
        // J(0,1,p) = zeta(p) + sum_{k=2}^{p-1} (-1)^{p+k} zeta(k) - (-1)^p - J(0,1,p-1) + J(-1,1,p-1)
        ZetaExpr offset = ZetaExpr::zeta(p) - ZetaExpr(sign_pow(p));
        for (int k = 2; k <= p - 1; ++k) {
            offset += ZetaExpr::zeta(k) * Rational(sign_pow(p + k));
        }
        return RuleApplication{"reclem-ii-m0",
                               self,
                               offset,
                               {{Rational(-1), IntegralSpec::J(0, p - 1, 1)}, {Rational(1), IntegralSpec::J(-1, p - 1, 1)}}};
    }
    const Rational inv = make_rational(1, m + 1);
    const Rational m_inv = make_rational(m, m + 1);
    return RuleApplication{"reclem-ii",
                           self,
                           ZetaExpr::zeta(p) * inv,
                           {{-m_inv, IntegralSpec::J0(m, p)},
                            {-inv, IntegralSpec::J0(m, p - 1)},
                            {m_inv, IntegralSpec::J(m - 1, p, 1)},
                            {inv, IntegralSpec::J(m - 1, p - 1, 1)},
                            {-inv, IntegralSpec::J(m, p - 1, 1)}}};
}

RuleApplication Reducer::rule_J0(int m, int q) const {
    const auto self = IntegralSpec::J0(m, q);
    if (q == 1) {
        return closed("J0-base", self, ZetaExpr(harmonic(m + 1, 1) / Rational(m + 1)));
    }
    const Rational inv = make_rational(1, m + 1);
    return RuleApplication{"reclem-iii", self, ZetaExpr::zeta(q) * inv, {{-inv, IntegralSpec::J0(m, q - 1)}}};
}

// K(r,p,q) with p <= q.
RuleApplication Reducer::rule_K(int r, int p, int q) const {
    const auto self = IntegralSpec::K(r, p, q);
    const int w = r + p + q;
    const bool odd_weight = (w % 2) != 0;

    if (options_.use_special_values && p == 0) {
        if (r == 1 && q == 2) {
            return closed("special-value", self, ZetaExpr::zeta(4) * make_rational(-3, 4));
        }
        if (r == 2 && q == 3) {
            return closed("special-value", self, ZetaExpr::zeta(3) * ZetaExpr::zeta(3) - ZetaExpr::zeta(6));
        }
        if (r == 1 && q == 4) {
            return closed("special-value", self,
                          ZetaExpr::zeta(3) * ZetaExpr::zeta(3) - ZetaExpr::zeta(6) * make_rational(25, 12));
        }
        if (r == 2 && q == 5) {
            // K(2,0,5) - 5 K(1,0,6) = 163/12 zeta(8) - 8 zeta(3) zeta(5)
            return RuleApplication{"weight8-relation",
                                   self,
                                   ZetaExpr::zeta(8) * make_rational(163, 12) -
                                       ZetaExpr::zeta(3) * ZetaExpr::zeta(5) * Rational(8),
                                   {{Rational(5), IntegralSpec::K(1, 0, 6)}}};
        }
    }

    if (p == 0) {
        if (q == 1) {
            return closed("k_r01", self, k_r01(r));
        }
        if (!odd_weight) {
            return closed("theorem_r0q", self, theorem_r0q(r, q));
        }
        if (q == r + 1) {
            return closed("symmrec-diagonal", self, symmrec(r, q).closed_form);
        }
        if (r % 2 != 0) {
            if (r < q - 1) {
                const auto elims = kappa_eliminations(w);
                if (auto it = elims.find({r, q}); it != elims.end()) {
                    return closed("kappa-relation", self, it->second * fact(r));
                }
                return closed("kappa-basis", self, ZetaExpr::kappa(r, q) * fact(r));
            }
            const auto rw = symmrec(r, q);
            return RuleApplication{"symmrec", self, rw.offset, {{rw.factor, rw.target}}};
        }
    }

    if (odd_weight && r % 2 == 0) {
        // Even log power at odd weight: walk the polylog indices toward the
        // middle, where K(r,p,p+1) = -(r/2) K(r-1,p+1,p+1).
        if (q == p + 1) {
            return RuleApplication{"krecur-middle",
                                   self,
                                   {},
                                   {{make_rational(-r, 2), IntegralSpec::K(r - 1, p + 1, p + 1)}}};
        }
        return RuleApplication{"krecur-toward-middle",
                               self,
                               {},
                               {{Rational(-1), IntegralSpec::K(r, p + 1, q - 1)},
                                {Rational(-r), IntegralSpec::K(r - 1, p + 1, q)}}};
    }

    // K(r,p,q) = -r K(r-1,p,q+1) - K(r,p-1,q+1), with K(0,p,q) = J(-1,p,q)
    const auto lower = r == 1 ? IntegralSpec::J(-1, p, q + 1) : IntegralSpec::K(r - 1, p, q + 1);
    return RuleApplication{"krecur-descend",
                           self,
                           {},
                           {{Rational(-r), lower}, {Rational(-1), IntegralSpec::K(r, p - 1, q + 1)}}};
}

RuleApplication Reducer::rule_L(int m, int r, int p) const {
    const auto self = IntegralSpec::L(m, r, p);
    if (m == -1) {
        return closed("L-log-moment", self, ZetaExpr::zeta(p + r + 1) * (Rational(sign_pow(r)) * fact(r)));
    }
    if (r == 0) {
        return RuleApplication{"L-to-J0", self, {}, {{Rational(1), IntegralSpec::J0(m, p)}}};
    }
    if (p == 1) {
        // sum_k 1/(k (k+a)^s) = H_a/a^s - sum_{j=2}^{s} (zeta(j) - H_a^{(j)}) / a^{s-j+1}
        const int a = m + 1;
        const int s = r + 1;
        auto apow = [a](int e) {
            Integer out;
            mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(e));
            return Rational(out);
        };
        ZetaExpr sum = ZetaExpr(harmonic(a, 1) / apow(s));
        for (int j = 2; j <= s; ++j) {
            sum -= (ZetaExpr::zeta(j) - ZetaExpr(harmonic(a, j))) * (1 / apow(s - j + 1));
        }
        return closed("L-partial-fractions", self, sum * (Rational(sign_pow(r)) * fact(r)));
    }
    const Rational inv = make_rational(1, m + 1);
    return RuleApplication{"L-by-parts",
                           self,
                           {},
                           {{-inv * r, IntegralSpec::L(m, r - 1, p)}, {-inv, IntegralSpec::L(m, r, p - 1)}}};
}

RuleApplication Reducer::rule_multi(int p, int q) const {
    const auto self = IntegralSpec::Multi(p, q);
    const auto identity = multi_integral_identity(p, q);
    return closed(p == 1 ? "transf1-linear" : "transf1-quadratic", self, identity.value());
}

ZetaExpr Reducer::value(const IntegralSpec& spec) {
    {
        std::shared_lock lock(mutex_);
        if (auto it = memo_.find(spec); it != memo_.end()) {
            return it->second;
        }
    }
    const auto rule = rule_for(spec);
    ZetaExpr out = rule.offset;
    for (const auto& [coeff, dep] : rule.terms) {
        out += value(dep) * coeff;
    }
    std::unique_lock lock(mutex_);
    return memo_.try_emplace(spec, std::move(out)).first->second;
}

ReductionResult Reducer::reduce(const IntegralSpec& spec) {
    ReductionResult result{value(spec), {}};
    std::set<IntegralSpec> visited;
    // Iterative post-order walk of the dependency graph.
    struct Frame {
        IntegralSpec spec;
        RuleApplication rule;
        std::size_t next;
    };
    std::vector<Frame> stack;
    visited.insert(spec);
    stack.push_back(Frame{spec, rule_for(spec), 0});
    while (!stack.empty()) {
        auto& top = stack.back();
        if (top.next < top.rule.terms.size()) {
            const auto dep = top.rule.terms[top.next++].second;
            if (visited.insert(dep).second) {
                stack.push_back(Frame{dep, rule_for(dep), 0});
            }
            continue;
        }
        result.trace.push_back(TraceStep{top.rule.rule, top.spec});
        stack.pop_back();
    }
    return result;
}

ZetaExpr Reducer::replay(const std::vector<TraceStep>& trace) const {
    if (trace.empty()) {
        throw DomainError("replay: empty trace");
    }
    std::map<IntegralSpec, ZetaExpr> values;
    for (const auto& step : trace) {
        const auto rule = rule_for(step.spec);
        if (rule.rule != step.rule) {
            throw DomainError("replay: " + to_string(step.spec) + " expects rule " + rule.rule + ", trace has " +
                              step.rule);
        }
        ZetaExpr v = rule.offset;
        for (const auto& [coeff, dep] : rule.terms) {
            auto it = values.find(dep);
            if (it == values.end()) {
                throw DomainError("replay: " + to_string(step.spec) + " uses " + to_string(dep) +
                                  " before it is derived");
            }
            v += it->second * coeff;
        }
        values[step.spec] = std::move(v);
    }
    return values.at(trace.back().spec);
}

Reducer& default_reducer() {
    static Reducer instance;
    return instance;
}

ReductionResult reduce(const IntegralSpec& spec) { return default_reducer().reduce(spec); }
ReductionResult reduce_J(int m, int p, int q) { return reduce(IntegralSpec::J(m, p, q)); }
ReductionResult reduce_J0(int m, int q) { return reduce(IntegralSpec::J0(m, q)); }
ReductionResult reduce_K(int r, int p, int q) { return reduce(IntegralSpec::K(r, p, q)); }
ReductionResult reduce_L(int m, int r, int p) { return reduce(IntegralSpec::L(m, r, p)); }

}  // namespace polyred
