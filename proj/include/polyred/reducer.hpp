#pragma once

#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "polyred/integral_spec.hpp"
#include "polyred/zeta_expr.hpp"

namespace polyred {

/// One rewrite: value(target) = offset + sum_i coeff_i * value(dep_i).
/// Closed forms have no dependencies.
struct RuleApplication {
    std::string rule;
    IntegralSpec target;
    ZetaExpr offset;
    std::vector<std::pair<Rational, IntegralSpec>> terms;
};

struct TraceStep {
    std::string rule;
    IntegralSpec spec;

    bool operator==(const TraceStep&) const = default;
};

/// Value plus the rules that produced it, dependencies before dependents;
/// the last step is the requested spec.
struct ReductionResult {
    ZetaExpr value;
    std::vector<TraceStep> trace;
};

struct ReducerOptions {
    /// Use the embedded evaluations of K(1,0,2), K(2,0,3), K(1,0,4) and the
    /// weight-8 relation for K(2,0,5). Without them the kappa basis is kept.
    bool use_special_values = true;
    /// Close each odd weight under every instance of the integration-by-parts
    /// recurrence and the symmetry rewrite. Whenever two derivations of the
    /// same integral disagree, the difference is a linear relation among kappa
    /// constants and the one with the larger first index is eliminated.
    bool derive_kappa_relations = true;
};

/// kappa_{r,q} -> replacement, for the constants eliminated at one weight.
using KappaEliminations = std::map<std::pair<int, int>, ZetaExpr>;

/// Replaces every eliminated kappa generator in e.
ZetaExpr substitute_kappa(const ZetaExpr& e, const KappaEliminations& eliminations);

/// Recurrence engine for the J, J0, K, L and Multi families. Results are
/// memoized per canonical spec; all methods may be called concurrently.
class Reducer {
public:
    explicit Reducer(ReducerOptions options = {});
    /// Uses a fixed elimination table instead of deriving one.
    Reducer(ReducerOptions options, std::map<int, KappaEliminations> fixed_eliminations);

    const ReducerOptions& options() const { return options_; }

    /// The rule chosen for a spec. Pure.
    RuleApplication rule_for(const IntegralSpec& spec) const;

    ZetaExpr value(const IntegralSpec& spec);
    ReductionResult reduce(const IntegralSpec& spec);

    /// Re-evaluates a trace step by step; throws DomainError if a step uses
    /// a different rule than rule_for picks or refers to a spec not yet seen.
    ZetaExpr replay(const std::vector<TraceStep>& trace) const;

    /// Kappa constants eliminated among K(r,p,q) with r + p + q = s
    /// (derived on first use).
    KappaEliminations kappa_eliminations(int s) const;

private:
    RuleApplication rule_J(int m, int p, int q) const;
    RuleApplication rule_J0(int m, int q) const;
    RuleApplication rule_K(int r, int p, int q) const;
    RuleApplication rule_L(int m, int r, int p) const;
    RuleApplication rule_multi(int p, int q) const;

    ReducerOptions options_;
    bool fixed_eliminations_ = false;
    mutable std::shared_mutex mutex_;
    std::map<IntegralSpec, ZetaExpr> memo_;
    mutable std::mutex elimination_mutex_;
    mutable std::map<int, KappaEliminations> eliminations_;
};

/// Derives the kappa eliminations for index sum s = r + p + q (odd, >= 3)
/// from the recurrence and symmetry identities alone. Throws std::logic_error
/// if two derivations differ by something free of kappa.
KappaEliminations derive_kappa_eliminations(int s, ReducerOptions options);

/// Process-wide reducer with default options.
Reducer& default_reducer();

ReductionResult reduce(const IntegralSpec& spec);
ReductionResult reduce_J(int m, int p, int q);
ReductionResult reduce_J0(int m, int q);
ReductionResult reduce_K(int r, int p, int q);
ReductionResult reduce_L(int m, int r, int p);

/// int_0^1 x^m log^2(1-x) dx = 2/(m+1) [H_{m+1}^{(2)} + sum_{k=1}^{m} H_k/(k+1)], m >= 0.
Rational reduce_J_m11(int m);

/// J(-1,p,q) closed form, any p, q >= 1.
ZetaExpr j_minus1(int p, int q);

/// Closed form of K(r,0,q) for even r + q, q >= 1; zeta(1) terms drop out.
ZetaExpr theorem_r0q(int r, int q);

/// K(r,0,1) = (-1)^r r! (S_{1,r+1} - zeta(r+2)), r >= 1.
ZetaExpr k_r01(int r);

/// K(r,0,q) = factor * K(q-1,0,r+1) + offset, r >= 1, q >= 2. When
/// q = r + 1 the rule is self-paired and `closed_form` holds the value.
struct SymmetryRewrite {
    IntegralSpec source;
    IntegralSpec target;
    Rational factor;
    ZetaExpr offset;
    bool self_paired;
    ZetaExpr closed_form;
};

SymmetryRewrite symmrec(int r, int q);

/// int_0^1 x^{k-1} log^{r-1}(x) dx = (-1)^{r-1} (r-1)! / k^r, k, r >= 1.
Rational log_moment(int k, int r);

/// int_0^1 log^{r-1}(x) / (1-x) dx = (-1)^{r-1} (r-1)! zeta(r), r >= 2.
ZetaExpr log_over_one_minus_x(int r);

/// int int_{(0,1)^2} Li_q(xy) log(1-x) log(1-y) / (xy) dx dy, q >= 0.
ZetaExpr double_integral_value(int q);

}  // namespace polyred
