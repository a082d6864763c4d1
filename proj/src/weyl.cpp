#include "hk/weyl.hpp"

#include <cfloat>
#include <cmath>
#include <numbers>

#include "hk/specfun.hpp"

namespace hk {

namespace {

constexpr double kEps = DBL_EPSILON;

Value pi_value() { return Value::constant(std::numbers::pi); }

double factorial(int n) {
    double f = 1.0;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

const char* to_string(CnMethod m) {
    switch (m) {
        case CnMethod::DirectSeries: return "direct_series";
        case CnMethod::HurwitzReduction: return "hurwitz_reduction";
        case CnMethod::ClosedFormTable: return "closed_form_table";
    }
    return "?";
}

Value cn_series(int n, double tol, kernels::Exec exec) {
    if (n < 1 || n > 13) throw Error(ErrorKind::Domain, "cn_series defined for 1 <= n <= 13");
    if (!(tol >= 1e-8 && tol <= 1e-3)) throw Error(ErrorKind::Domain, "cn_series tolerance must lie in [1e-8, 1e-3]");
    double fact = factorial(n - 1);
    // For m >= n, C(m+n-1, n-1) <= (2m)^{n-1}/(n-1)!, so each term is at most
    // 1/(4 (n-1)! m^2) and the tail from M on is at most 1/(4 (n-1)! (M-1)).
    double needed = std::ceil(1.0 / (4.0 * fact * tol)) + 1.0;
    if (needed > 1e8) throw Error(ErrorKind::Budget, "cn_series needs more than 1e8 terms");
    std::uint64_t M = std::max<std::uint64_t>({static_cast<std::uint64_t>(n),
                                               static_cast<std::uint64_t>(needed), kernels::kBlock});
    auto term = [n](std::uint64_t m) {
        double md = static_cast<double>(m);
        double b = 1.0;
        for (int i = 1; i < n; ++i) b *= (md + i) / i;
        return b / std::pow(2.0 * md + n, n + 1);
    };
    kernels::SeriesSum s = kernels::sum_series(term, M, exec);
    double tail = 1.0 / (4.0 * fact * (static_cast<double>(M) - 1.0));
    double rounding = (2.0 * n + 8.0) * kEps * s.abs_sum;
    return Value(s.sum, tail + rounding, Method::Series);
}

std::vector<__int128> cn_polynomial(int n) {
    if (n < 1) throw Error(ErrorKind::Domain, "cn_polynomial needs n >= 1");
    std::vector<__int128> c{1};
    for (int i = 1; i < n; ++i) {
        __int128 shift = 2 * i - n;
        std::vector<__int128> next(c.size() + 1, 0);
        for (std::size_t j = 0; j < c.size(); ++j) {
            __int128 prod;
            if (__builtin_mul_overflow(c[j], shift, &prod) ||
                __builtin_add_overflow(next[j], prod, &next[j]) ||
                __builtin_add_overflow(next[j + 1], c[j], &next[j + 1]))
                throw Error(ErrorKind::Overflow, "cn polynomial coefficients exceed 128 bits for n = " +
                                                     std::to_string(n));
        }
        c = std::move(next);
    }
    return c;
}

Value cn_hurwitz(int n) {
    if (n < 1) throw Error(ErrorKind::Domain, "cn_hurwitz needs n >= 1");
    if (n > kCnHurwitzMaxN)
        throw Error(ErrorKind::Overflow, "cn_hurwitz supports n <= " + std::to_string(kCnHurwitzMaxN));
    // With u = 2m+n: C(m+n-1, n-1) = P(u) / (2^{n-1} (n-1)!), and
    // Σ_m u^{-s} = 2^{-s} ζ(s, n/2).
    std::vector<__int128> a = cn_polynomial(n);
    Value sum = Value::exact(0.0);
    for (int j = static_cast<int>(a.size()) - 1; j >= 0; --j) {
        if (a[j] == 0) continue;
        int s = n + 1 - j;
        double coef = static_cast<double>(a[j]);
        Value c(coef, std::fabs(coef) * kEps);
        Value z = hurwitz_zeta(s, 0.5 * n);
        sum = sum + c * std::ldexp(1.0, -s) * z;
    }
    Value denom = Value::constant(std::ldexp(factorial(n - 1), n - 1));
    return (sum / denom).with_method(Method::Series);
}

Value cn_closed_form(int n) {
    if (n < 1) throw Error(ErrorKind::Domain, "cn_closed_form needs n >= 1");
    if (n > 10) throw Error(ErrorKind::Unsupported, "closed forms are tabulated only for n <= 10");
    // c_n = π² P(π²) / D, coefficients of P in increasing powers of π².
    struct Row {
        std::vector<double> p;
        double d;
    };
    static const Row rows[10] = {
        {{1}, 8},
        {{1}, 48},
        {{12, -1}, 768},
        {{15, -1}, 17280},
        {{120, -100, 9}, 368640},
        {{315, -105, 8}, 29030400},
        {{6720, -19600, 14504, -1275}, 2477260800.0},
        {{1575, -1470, 490, -36}, 24385536000.0},
        {{40320, -282240, 663264, -439144, 37975}, 3329438515200.0},
        {{3465, -6930, 6006, -1804, 128}, 15450675609600.0},
    };
    const Row& row = rows[n - 1];
    Value pi2 = pi_value() * pi_value();
    Value poly = Value::exact(0.0);
    Value power = Value::exact(1.0);
    for (double coef : row.p) {
        poly = poly + coef * power;
        power = power * pi2;
    }
    return pi2 * poly / row.d;
}

CnResult cn(int n, CnMethod method) {
    switch (method) {
        case CnMethod::DirectSeries: return {n, cn_series(n, 1e-7), method};
        case CnMethod::HurwitzReduction: return {n, cn_hurwitz(n), method};
        case CnMethod::ClosedFormTable: return {n, cn_closed_form(n), method};
    }
    throw Error(ErrorKind::Domain, "unknown cn method");
}

Value weyl_heisenberg(int n) {
    if (n < 1 || n > 13) throw Error(ErrorKind::Domain, "weyl_heisenberg defined for 1 <= n <= 13");
    Value two_pi = 2.0 * pi_value();
    return cn_hurwitz(n) / (Value::exact(2.0 * (n + 1)) * pow(two_pi, n + 1.0));
}

Value weyl_euclidean(int k) {
    if (k < 1 || k > 300) throw Error(ErrorKind::Domain, "weyl_euclidean defined for 1 <= k <= 300");
    Value four_pi = 4.0 * pi_value();
    return exp(Value::exact(-0.5 * k) * log(four_pi) - ln_gamma(0.5 * k + 1.0));
}

Value weyl_hn_rk(const GroupSpec& g) {
    if (g.n() < 1) throw Error(ErrorKind::Domain, "weyl_hn_rk needs n >= 1");
    if (g.k() > 300) throw Error(ErrorKind::Domain, "weyl_hn_rk defined for k <= 300");
    Value wh = weyl_heisenberg(g.n());
    if (g.k() == 0) return wh;
    Value four_pi = 4.0 * pi_value();
    Value factor = exp(Value::exact(-0.5 * g.k()) * log(four_pi) + ln_gamma(g.n() + 2.0) -
                       ln_gamma(0.5 * (2 * g.n() + g.k() + 4)));
    return wh * factor;
}

Value weyl_product(const Value& w1, double q1, const Value& w2, double q2) {
    if (!(q1 >= 1.0) || !(q2 >= 0.0)) throw Error(ErrorKind::Domain, "weyl_product needs q1 >= 1, q2 >= 0");
    if (w1.estimate() <= 0.0 || w2.estimate() <= 0.0)
        throw Error(ErrorKind::Domain, "weyl_product needs positive Weyl constants");
    double q = q1 + q2;
    Value g = exp(ln_gamma(0.5 * q1 + 1.0) + ln_gamma(0.5 * q2 + 1.0) - ln_gamma(0.5 * q + 1.0));
    return w1 * w2 * g;
}

Value cn_ratio_floor(int n, int m_max) {
    if (n < 2) throw Error(ErrorKind::Domain, "cn_ratio_floor needs n >= 2");
    double best = INFINITY;
    for (int m = 0; m <= m_max; ++m) {
        double u = 2.0 * m + n;
        double th = (m + n - 1.0) / u * std::pow(1.0 - 1.0 / u, n);
        best = std::min(best, th);
    }
    double r = best / (n - 1.0);
    return Value(r, (n + 8.0) * kEps * r);
}

}  // namespace hk
