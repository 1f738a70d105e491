#include "polyred/numerics.hpp"

#include <array>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <vector>

#include "polyred/errors.hpp"

namespace polyred::numerics {

namespace {

constexpr long double kPi = 3.141592653589793238462643383279502884L;
constexpr long double kEulerGamma = 0.577215664901532860606512090082402431L;
constexpr long double kEps = 1.0842021724855044340e-19L;  // 2^-63

// B_2, B_4, ..., B_20
constexpr std::array<long double, 10> kBernoulliEven = {
    1.0L / 6,       -1.0L / 30,       1.0L / 42,        -1.0L / 30,    5.0L / 66,
    -691.0L / 2730, 7.0L / 6,         -3617.0L / 510,   43867.0L / 798, -174611.0L / 330,
};

long double zeta_euler_maclaurin(int s) {
    constexpr int n_cut = 16;
    long double sum = 0;
    for (int n = n_cut - 1; n >= 1; --n) {
        sum += std::pow(static_cast<long double>(n), -static_cast<long double>(s));
    }
    const long double nn = n_cut;
    const long double ns = std::pow(nn, -static_cast<long double>(s));
    sum += nn * ns / (s - 1) + ns / 2;
    // sum_k B_2k/(2k)! s(s+1)...(s+2k-2) N^{-s-2k+1}
    long double rising = s;         // s(s+1)...(s+2k-2)
    long double fact = 2;           // (2k)!
    long double power = ns / nn;    // N^{-s-2k+1}
    for (std::size_t k = 1; k <= kBernoulliEven.size(); ++k) {
        sum += kBernoulliEven[k - 1] / fact * rising * power;
        const long double a = static_cast<long double>(s) + 2 * k - 1;
        rising *= a * (a + 1);
        fact *= (2.0L * k + 1) * (2.0L * k + 2);
        power /= nn * nn;
    }
    return sum;
}

const std::vector<long double>& zeta_table() {
    static const std::vector<long double> table = [] {
        std::vector<long double> t(129, 0);
        for (int s = 2; s <= 128; ++s) {
            t[static_cast<std::size_t>(s)] = zeta_euler_maclaurin(s);
        }
        return t;
    }();
    return table;
}

long double log_of(long double x, long double xc) { return x <= 0.5L ? std::log(x) : std::log1p(-xc); }

long double to_long_double(const Rational& q) {
    const auto num = q.get_num().get_str();
    const auto den = q.get_den().get_str();
    return std::strtold(num.c_str(), nullptr) / std::strtold(den.c_str(), nullptr);
}

NumericValue product(NumericValue a, NumericValue b) {
    return {a.value * b.value, std::fabs(a.value) * b.error + std::fabs(b.value) * a.error + a.error * b.error};
}

constexpr long double kTMax = 4.0L;

struct Node {
    long double x, xc, weight;
};

// Abscissae/weights for t = j h, j odd (or all j at level 0), |t| <= kTMax.
std::vector<Node> level_nodes(int level) {
    std::vector<Node> nodes;
    const long double h = std::ldexp(1.0L, -level);
    const int step = level == 0 ? 1 : 2;
    const int start = level == 0 ? 0 : 1;
    for (int j = start;; j += step) {
        const long double t = j * h;
        if (t > kTMax) {
            break;
        }
        const long double u = kPi / 2 * std::sinh(t);
        const long double e = std::exp(-2 * u);
        const long double small = e / (1 + e);  // 1/(1+e^{2u})
        const long double w = kPi / 2 * std::cosh(t) * 2 * e / ((1 + e) * (1 + e));
        if (j == 0) {
            nodes.push_back({0.5L, 0.5L, w});
            continue;
        }
        nodes.push_back({1 - small, small, w});
        nodes.push_back({small, 1 - small, w});
    }
    return nodes;
}

const std::vector<Node>& cached_level(int level) {
    static const std::vector<std::vector<Node>> levels = [] {
        std::vector<std::vector<Node>> out;
        for (int k = 0; k <= 14; ++k) {
            out.push_back(level_nodes(k));
        }
        return out;
    }();
    return levels.at(static_cast<std::size_t>(level));
}

struct QuadResult {
    NumericValue result;
    bool converged;
};

template <class F>
QuadResult tanh_sinh_impl(const F& f, const QuadratureConfig& cfg) {
    if (cfg.max_level < 1 || cfg.max_level > 14 || !(cfg.tolerance > 0)) {
        throw DomainError("quadrature: need 1 <= max_level <= 14 and tolerance > 0");
    }
    long double sum = 0;
    long double abs_sum = 0;
    long double extra_error = 0;  // weighted errors reported by f itself
    auto accumulate = [&](int level) {
        for (const auto& n : cached_level(level)) {
            const NumericValue v = f(n.x, n.xc);
            sum += n.weight * v.value;
            abs_sum += n.weight * std::fabs(v.value);
            extra_error += n.weight * v.error;
        }
    };
    accumulate(0);
    long double previous = sum;
    NumericValue best{sum, std::numeric_limits<long double>::infinity()};
    for (int level = 1; level <= cfg.max_level; ++level) {
        accumulate(level);
        const long double h = std::ldexp(1.0L, -level);
        const long double current = sum * h;
        const long double error =
            std::fabs(current - previous) + 64 * kEps * abs_sum * h + extra_error * h;
        best = {current, error};
        if (level >= 3 && error <= cfg.tolerance) {
            return {best, true};
        }
        previous = current;
    }
    return {best, false};
}

NumericValue require(const QuadResult& r, const std::string& what) {
    if (!r.converged) {
        throw ToleranceNotReached(what + ": tolerance not reached (value " + std::to_string(static_cast<double>(r.result.value)) +
                                      ", bound " + std::to_string(static_cast<double>(r.result.error)) + ")",
                                  r.result);
    }
    return r.result;
}

}  // namespace

NumericValue zeta_num(int s) {
    if (s <= 1) {
        throw DomainError("zeta(" + std::to_string(s) + "): divergent, s >= 2 required");
    }
    const auto& table = zeta_table();
    if (static_cast<std::size_t>(s) < table.size()) {
        return {table[static_cast<std::size_t>(s)], 1e-18L};
    }
    return {1 + std::pow(2.0L, -static_cast<long double>(s)) + std::pow(3.0L, -static_cast<long double>(s)), 1e-18L};
}

long double zeta_any(int s) {
    if (s == 1) {
        throw DomainError("zeta(1): divergent");
    }
    if (s >= 2) {
        return zeta_num(s).value;
    }
    if (s == 0) {
        return -0.5L;
    }
    const int n = -s;
    if (n % 2 == 0) {
        return 0;
    }
    // zeta(1-2j) = (-1)^j 2 (2j-1)! zeta(2j) / (2 pi)^{2j}
    const int j = (n + 1) / 2;
    long double c = 2;
    for (int i = 1; i <= 2 * j; ++i) {
        c /= 2 * kPi;
        if (i < 2 * j) {
            c *= i;
        }
    }
    return (j % 2 == 0 ? c : -c) * zeta_num(2 * j).value;
}

namespace detail {

long double polylog_series(int p, long double x) {
    long double sum = 0;
    long double xk = x;
    for (int k = 1; k < 10000; ++k) {
        const long double term = xk / std::pow(static_cast<long double>(k), static_cast<long double>(p));
        sum += term;
        if (term <= kEps * sum * 0.01L) {
            break;
        }
        xk *= x;
    }
    return sum;
}

long double polylog_log_expansion(int p, long double t) {
    // Li_p(e^{-t}) = sum_{k != p-1} zeta(p-k) (-t)^k / k!
    //              + (-t)^{p-1}/(p-1)! [H_{p-1} - log t]
    long double sum = 0;
    long double term = 1;  // (-t)^k / k!
    long double harmonic = 0;
    for (int k = 0; k < p + 60; ++k) {
        if (k > 0) {
            term *= -t / k;
        }
        if (k == p - 1) {
            sum += term * (harmonic - std::log(t));
        } else {
            sum += term * zeta_any(p - k);
        }
        if (k < p - 1) {
            harmonic += 1.0L / (k + 1);
        }
        if (k > p + 2 && std::fabs(term) < kEps * 1e-3L) {
            break;
        }
    }
    return sum;
}

}  // namespace detail

long double polylog(int p, long double x, long double xc) {
    if (p == 0) {
        return x / xc;
    }
    if (x == 0) {
        return 0;
    }
    if (p == 1) {
        return x <= 0.5L ? -std::log1p(-x) : -std::log(xc);
    }
    if (xc == 0) {
        return zeta_num(p).value;
    }
    if (x <= 0.5L) {
        return detail::polylog_series(p, x);
    }
    const long double t = xc <= 0.5L ? -std::log1p(-xc) : -std::log(x);
    return detail::polylog_log_expansion(p, t);
}

NumericValue polylog_num(int p, long double x) {
    if (p < 0) {
        throw DomainError("Li_p: p >= 0 required");
    }
    if (!(x >= 0) || x > 1) {
        throw DomainError("Li_p(x): 0 <= x <= 1 required");
    }
    if (x == 1 && p <= 1) {
        throw DomainError("Li_" + std::to_string(p) + "(1): divergent");
    }
    const long double v = polylog(p, x, 1 - x);
    return {v, 1e-16L * (1 + std::fabs(v))};
}

NumericValue tanh_sinh(const Integrand& f, QuadratureConfig cfg) {
    auto g = [&](long double x, long double xc) { return NumericValue{f(x, xc), 0}; };
    return require(tanh_sinh_impl(g, cfg), "quadrature");
}

NumericValue tanh_sinh_2d(const Integrand2& f, QuadratureConfig cfg) {
    QuadratureConfig inner = cfg;
    inner.tolerance = cfg.tolerance / 10;
    auto outer = [&](long double x, long double xc) {
        auto g = [&](long double y, long double yc) { return NumericValue{f(x, xc, y, yc), 0}; };
        // Inner failures near the corners are folded into the outer bound.
        return tanh_sinh_impl(g, inner).result;
    };
    return require(tanh_sinh_impl(outer, cfg), "2D quadrature");
}

NumericValue integrate_spec(const IntegralSpec& spec) {
    return integrate_spec(spec, spec.dimension() == 1 ? QuadratureConfig::one_dim() : QuadratureConfig::two_dim());
}

NumericValue integrate_spec(const IntegralSpec& spec, QuadratureConfig cfg) {
    const int a = spec.arg(0);
    const int b = spec.arg(1);
    const int c = spec.arg(2);
    const std::string name = to_string(spec);
    auto run = [&](auto&& f) -> NumericValue {
        try {
            return tanh_sinh(f, cfg);
        } catch (const ToleranceNotReached& e) {
            throw ToleranceNotReached(name + ": " + e.what(), e.best());
        }
    };
    switch (spec.family()) {
        case Family::J:  // x^m Li_p Li_q
            return run([=](long double x, long double xc) {
                return std::pow(x, static_cast<long double>(a)) * polylog(b, x, xc) * polylog(c, x, xc);
            });
        case Family::J0:  // x^m Li_q
            return run([=](long double x, long double xc) {
                return std::pow(x, static_cast<long double>(a)) * polylog(b, x, xc);
            });
        case Family::K:  // log^r(x) Li_p Li_q / x
            return run([=](long double x, long double xc) {
                const long double first = b == 0 ? 1 / xc : polylog(b, x, xc) / x;
                return std::pow(log_of(x, xc), static_cast<long double>(a)) * first * polylog(c, x, xc);
            });
        case Family::L:  // x^m log^r(x) Li_p
            return run([=](long double x, long double xc) {
                return std::pow(x, static_cast<long double>(a)) * std::pow(log_of(x, xc), static_cast<long double>(b)) *
                       polylog(c, x, xc);
            });
        case Family::Multi: {
            if (a == 1) {  // -int Li_{q-1}(x) log(1-x) / x
                return run([=](long double x, long double xc) {
                    const long double l = x <= 0.5L ? std::log1p(-x) : std::log(xc);
                    return -polylog(b - 1, x, xc) * l / x;
                });
            }
            if (a == 2) {  // int int Li_{q-2}(xy) log(1-x) log(1-y) / (xy)
                auto f = [=](long double x, long double xc, long double y, long double yc) {
                    const long double z = x * y;
                    const long double zc = xc + x * yc;
                    const long double lx = x <= 0.5L ? std::log1p(-x) : std::log(xc);
                    const long double ly = y <= 0.5L ? std::log1p(-y) : std::log(yc);
                    const long double li = b == 2 ? 1 / zc : polylog(b - 2, z, zc) / z;
                    return li * lx * ly;
                };
                try {
                    return tanh_sinh_2d(f, cfg);
                } catch (const ToleranceNotReached& e) {
                    throw ToleranceNotReached(name + ": " + e.what(), e.best());
                }
            }
            throw DomainError(name + ": numeric quadrature supports multi(p,q) with p <= 2 only");
        }
    }
    throw DomainError("unknown integral family");
}

namespace {

// Asymptotic H_x^{(r)} for large real x.
long double harmonic_asymptotic(int r, long double x) {
    if (r == 1) {
        const long double x2 = x * x;
        return std::log(x) + kEulerGamma + 1 / (2 * x) - 1 / (12 * x2) + 1 / (120 * x2 * x2);
    }
    const long double xr = std::pow(x, -static_cast<long double>(r));
    return zeta_num(r).value - x * xr / (r - 1) + xr / 2 - r * xr / (12 * x);
}

}  // namespace

NumericValue sum_num(const EulerSumSpec& spec) {
    const int r = spec.base_exponent();
    const int p = spec.multiplicity();
    const int q = spec.outer_exponent();
    if (q < 2) {
        throw DomainError(to_string(spec) + ": divergent, q >= 2 required");
    }
    constexpr int n_max = 100000;
    long double harmonic = 0;
    long double sum = 0;
    long double compensation = 0;
    for (int n = 1; n <= n_max; ++n) {
        const long double nn = n;
        harmonic += std::pow(nn, -static_cast<long double>(r));
        const long double term = std::pow(harmonic, static_cast<long double>(p)) * std::pow(nn, -static_cast<long double>(q));
        const long double y = term - compensation;
        const long double t = sum + y;
        compensation = (t - sum) - y;
        sum = t;
    }
    // sum_{n>N} f(n) = int_N^inf f - f(N)/2 - f'(N)/12 + ...
    auto f = [&](long double x) {
        return std::pow(harmonic_asymptotic(r, x), static_cast<long double>(p)) * std::pow(x, -static_cast<long double>(q));
    };
    const long double big_n = n_max;
    const auto integral = tanh_sinh(
        [&](long double u, long double) { return f(big_n / u) * big_n / (u * u); }, {10, 1e-16L});
    const long double derivative = (f(big_n + 1) - f(big_n - 1)) / 2;
    const long double tail = integral.value - f(big_n) / 2 - derivative / 12;
    return {sum + tail, 1e-12L + integral.error};
}

NumericValue eval_expr_num(const ZetaExpr& e, const KappaEnv& env) {
    std::string missing;
    NumericValue total{0, 0};
    for (const auto& [m, c] : e.terms()) {
        NumericValue term{to_long_double(c), 0};
        for (const auto& g : m.factors()) {
            if (g.is_zeta()) {
                term = product(term, zeta_num(g.first()));
                continue;
            }
            auto it = env.find({g.first(), g.second()});
            if (it == env.end()) {
                const std::string name = "k(" + std::to_string(g.first()) + "," + std::to_string(g.second()) + ")";
                if (missing.find(name) == std::string::npos) {
                    missing += (missing.empty() ? "" : ", ") + name;
                }
                continue;
            }
            term = product(term, it->second);
        }
        total.value += term.value;
        total.error += term.error + std::fabs(term.value) * 4 * kEps;
    }
    if (!missing.empty()) {
        throw DomainError("unbound kappa: " + missing);
    }
    return total;
}

NumericValue kappa_num(int r, int q) {
    if (r < 1 || q < 2) {
        throw DomainError("kappa(r,q): r >= 1 and q >= 2 required");
    }
    const auto k = integrate_spec(IntegralSpec::K(r, 0, q));
    long double fact = 1;
    for (int i = 2; i <= r; ++i) {
        fact *= i;
    }
    return {k.value / fact, k.error / fact};
}

KappaEnv kappa_env_for(const ZetaExpr& e) {
    KappaEnv env;
    for (const auto& [m, c] : e.terms()) {
        for (const auto& g : m.factors()) {
            if (g.is_kappa() && !env.contains({g.first(), g.second()})) {
                env[{g.first(), g.second()}] = kappa_num(g.first(), g.second());
            }
        }
    }
    return env;
}

Maint3Check maint3_check(int r, int q) {
    if (r < 1 || q < 3) {
        throw DomainError("maint3_check(r,q): r >= 1 and q >= 3 required");
    }
    const auto kappa = kappa_num(r, q);
    const auto zq = zeta_num(q);
    const auto zr = zeta_num(r + 1);
    const auto zq1 = zeta_num(q - 1);
    const long double center = (r % 2 == 0 ? 1 : -1) * zq.value * (zr.value - 1);
    const NumericValue lhs{std::fabs(kappa.value - center), kappa.error + 4 * (zq.error + zr.error)};
    const long double scale = std::ldexp(1.0L, -(r + 1));
    const NumericValue bound{(zq1.value - zq.value) * scale, (zq1.error + zq.error) * scale};
    const bool holds = lhs.value <= bound.value + lhs.error + bound.error;
    return {lhs, bound, holds, bound.value - lhs.value};
}

}  // namespace polyred::numerics
