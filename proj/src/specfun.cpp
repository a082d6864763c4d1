#include "hk/specfun.hpp"

#include <array>
#include <cfloat>
#include <cmath>
#include <numbers>
#include <vector>

#include "hk/kernels.hpp"

namespace hk {

namespace {

constexpr double kEps = DBL_EPSILON;
constexpr double kPi = std::numbers::pi;

// B_{2j} for j = 1..16 as exact numerator/denominator pairs.
constexpr std::array<std::array<double, 2>, 16> kBernoulli{{
    {1.0, 6.0},
    {-1.0, 30.0},
    {1.0, 42.0},
    {-1.0, 30.0},
    {5.0, 66.0},
    {-691.0, 2730.0},
    {7.0, 6.0},
    {-3617.0, 510.0},
    {43867.0, 798.0},
    {-174611.0, 330.0},
    {854513.0, 138.0},
    {-236364091.0, 2730.0},
    {8553103.0, 6.0},
    {-23749461029.0, 870.0},
    {8615841276005.0, 14322.0},
    {-7709321041217.0, 510.0},
}};

constexpr std::array<double, 9> kLanczos{
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7,
};
constexpr double kLanczosG = 7.0;

// Taylor coefficients of ln Γ(2+z): (1-γ) z + Σ_{k>=2} (-1)^k (ζ(k)-1) z^k / k.
constexpr int kTaylorTerms = 44;

const std::array<double, kTaylorTerms + 1>& zeta_minus_one() {
    static const auto table = [] {
        std::array<double, kTaylorTerms + 1> t{};
        for (int k = 2; k <= kTaylorTerms; ++k) t[k] = hurwitz_zeta(k, 2.0).estimate();
        return t;
    }();
    return table;
}

// ln Γ(2+z) for |z| <= 1/2, with a bound on its absolute error.
std::pair<double, double> ln_gamma_near_two(double z) {
    constexpr double euler = 0.57721566490153286061;
    const auto& zm1 = zeta_minus_one();
    // Sum from the small end.
    double s = 0.0, mag = 0.0;
    for (int k = kTaylorTerms; k >= 2; --k) {
        double t = zm1[k] * std::pow(-z, k) / k;
        s += t;
        mag += std::fabs(t);
    }
    double lead = (1.0 - euler) * z;
    double r = lead + s;
    // Truncation: |tail| < 2^{-k} |z|^k / k summed, with |z| <= 1/2.
    double trunc = 2.0 * std::pow(0.5 * std::fabs(z), kTaylorTerms + 1);
    double err = 4.0 * kEps * (std::fabs(lead) + mag) + trunc;
    return {r, err};
}

double digamma_bound(double x) { return std::fabs(std::log(x)) + 1.0 / x + 1.0; }

}  // namespace

Value ln_gamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) throw Error(ErrorKind::Domain, "ln_gamma needs x > 0");
    if (x < 0.5) {
        // Reflection; 1 - x lies in (1/2, 1].
        Value rest = ln_gamma(1.0 - x);
        double head = std::log(kPi / std::sin(kPi * x));
        double r = head - rest.estimate();
        double err = rest.err() + 4.0 * kEps * (std::fabs(head) + std::fabs(r)) + kEps * digamma_bound(1.0 - x);
        return Value(r, err);
    }
    if (x < 10.0) {
        if (x < 1.5) {
            // ln Γ(x) = ln Γ(x+1) - ln x, with x+1 = 2 + (x-1) and x-1 exact.
            auto [t, terr] = ln_gamma_near_two(x - 1.0);
            double lx = std::log(x);
            double r = t - lx;
            return Value(r, terr + 2.0 * kEps * (std::fabs(lx) + std::fabs(r)));
        }
        // x = 2 + z + shift with |z| <= 1/2, then climb with the recurrence.
        double shift = std::floor(x - 1.5);
        double z = x - (2.0 + shift);
        auto [t, terr] = ln_gamma_near_two(z);
        double prod = 1.0;
        for (int i = 1; i <= static_cast<int>(shift); ++i) prod *= x - i;
        double lp = std::log(prod);
        double r = t + lp;
        return Value(r, terr + 2.0 * kEps * (shift + 2.0) * std::fabs(lp) + 2.0 * kEps * std::fabs(r));
    }
    double xm = x - 1.0;
    double a = kLanczos[0];
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (xm + i);
    double t = xm + kLanczosG + 0.5;
    double lt = std::log(t);
    double r = 0.5 * std::log(2.0 * kPi) + (xm + 0.5) * lt - t + std::log(a);
    double err = 2e-15 + 4.0 * kEps * (std::fabs((xm + 0.5) * lt) + t + std::fabs(r));
    return Value(r, err);
}

Value ln_gamma(const Value& x) {
    if (x.lo() <= 0.0) throw Error(ErrorKind::Domain, "ln_gamma needs x > 0");
    Value v = ln_gamma(x.estimate());
    if (x.err() == 0.0) return v.with_method(x.method());
    double psi = std::max(digamma_bound(x.lo()), digamma_bound(x.hi()));
    return Value(v.estimate(), v.err() + psi * x.err(), x.method());
}

namespace {

void check_bessel_domain(double nu, double x) {
    if (!(nu >= 0.0 && nu <= 300.0) || !(x >= 0.0 && x <= 400.0))
        throw Error(ErrorKind::Range, "bessel_j defined for 0 <= nu <= 300, 0 <= x <= 400");
}

// Ascending series; used where x^2/4 <= nu + 1 so the terms decrease from the start.
double bessel_series(double nu, double x, double& err) {
    double q = -0.25 * x * x;
    double sum = 1.0, term = 1.0, mag = 1.0;
    for (int m = 1; m < 500; ++m) {
        term *= q / (m * (nu + m));
        sum += term;
        mag += std::fabs(term);
        if (std::fabs(term) < 1e-18 * std::fabs(sum)) break;
    }
    Value lg = ln_gamma(nu + 1.0);
    double arg = nu * std::log(0.5 * x) - lg.estimate();
    double pre = std::exp(arg);
    double r = pre * sum;
    double rel = lg.err() + 4.0 * kEps * (std::fabs(arg) + 1.0) + 8.0 * kEps * mag / std::fabs(sum);
    err = std::fabs(r) * rel + DBL_MIN;
    return r;
}

struct MillerResult {
    double j0;
    double j1;
    double err;
};

// Backward recurrence over orders nu0 + i, i = 0..top, normalised at the
// fractional order nu0 = nu - floor(nu) through
//   Σ_k (nu0+2k) Γ(nu0+k)/k! J_{nu0+2k}(x) = (x/2)^{nu0}.
// Normalising at a small order keeps the weights tame; at large orders they
// grow like k^nu and the sum cancels badly.
MillerResult miller(double nu, double x, int top) {
    double nu0 = nu - std::floor(nu);
    int inu = static_cast<int>(std::floor(nu));
    std::vector<double> v(static_cast<std::size_t>(top) + 2, 0.0);
    v[top] = 1e-280;
    for (int i = top; i >= 1; --i) {
        v[i - 1] = 2.0 * (nu0 + i) / x * v[i] - v[i + 1];
        if (std::fabs(v[i - 1]) > 1e250) {
            for (int t = i - 1; t <= top + 1; ++t) v[t] *= 1e-250;
        }
    }
    double big = 0.0;
    for (double t : v) big = std::max(big, std::fabs(t));
    for (double& t : v) t /= big;

    kernels::Compensated s;
    double mag = 0.0;
    double r = 1.0;
    for (int k = 0; 2 * k <= top; ++k) {
        if (k == 1)
            r = nu0 + 2.0;
        else if (k > 1)
            r *= (nu0 + 2.0 * k) / (nu0 + 2.0 * k - 2.0) * (nu0 + k - 1.0) / k;
        double t = r * v[2 * k];
        s += t;
        mag += std::fabs(t);
    }
    double S = s.value();
    Value lg = ln_gamma(nu0 + 1.0);
    double arg = nu0 * std::log(0.5 * x) - lg.estimate();
    double scale = std::exp(arg) / S;
    double j0 = v[inu] * scale, j1 = v[inu + 1] * scale;
    double rel = lg.err() + 4.0 * kEps * (std::fabs(arg) + 1.0) + kEps * (top + 10.0) * mag / std::fabs(S);
    double peak = std::fabs(scale);  // the largest |J| over the recurrence
    double err = kEps * (top + 10.0) * peak + std::max(std::fabs(j0), std::fabs(j1)) * rel;
    return {j0, j1, err};
}

int miller_start(double nu, double x) {
    return static_cast<int>(std::ceil(std::max(nu, x)) + 60.0 + std::ceil(8.0 * std::cbrt(x + nu + 1.0)));
}

}  // namespace

BesselPair bessel_j_pair(double nu, double x) {
    check_bessel_domain(nu, x);
    if (x == 0.0) {
        return {Value(nu == 0.0 ? 1.0 : 0.0, 0.0, Method::Series), Value(0.0, 0.0, Method::Series)};
    }
    if (0.25 * x * x <= nu + 1.0) {
        double e0 = 0.0, e1 = 0.0;
        double j0 = bessel_series(nu, x, e0);
        double j1 = bessel_series(nu + 1.0, x, e1);
        return {Value(j0, e0, Method::Series), Value(j1, e1, Method::Series)};
    }
    int top = miller_start(nu, x);
    MillerResult a = miller(nu, x, top);
    MillerResult b = miller(nu, x, top + 30);
    double e0 = std::fabs(a.j0 - b.j0) + b.err;
    double e1 = std::fabs(a.j1 - b.j1) + b.err;
    return {Value(b.j0, e0, Method::Series), Value(b.j1, e1, Method::Series)};
}

Value bessel_j(double nu, double x) { return bessel_j_pair(nu, x).j; }

BesselZeroBracket bessel_zero_bracket(double nu) {
    return {nu, std::sqrt((nu + 1.0) * (nu + 5.0)), std::sqrt(nu + 1.0) * (std::sqrt(nu + 2.0) + 1.0)};
}

Value bessel_first_zero(double nu) {
    if (!(nu >= 0.0 && nu <= 200.0))
        throw Error(ErrorKind::Range, "bessel_first_zero defined for 0 <= nu <= 200");
    BesselZeroBracket br = bessel_zero_bracket(nu);
    auto f = [nu](double x) { return bessel_j(nu, x).estimate(); };
    double lo = br.lower, hi = br.upper;
    double flo = f(lo), fhi = f(hi);
    if (flo * fhi >= 0.0) throw Error(ErrorKind::Convergence, "no sign change on the zero bracket");

    for (int it = 0; hi - lo > 1e-6; ++it) {
        if (it > 200) throw Error(ErrorKind::Convergence, "bisection did not shrink the bracket");
        double mid = 0.5 * (lo + hi);
        double fm = f(mid);
        if (fm == 0.0) {
            lo = hi = mid;
            break;
        }
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }

    double root = 0.5 * (lo + hi);
    for (int it = 0;; ++it) {
        if (it > 50) throw Error(ErrorKind::Convergence, "Newton iteration did not settle");
        BesselPair p = bessel_j_pair(nu, root);
        double d = nu / root * p.j.estimate() - p.j_next.estimate();
        if (d == 0.0) break;
        double step = p.j.estimate() / d;
        root -= step;
        if (root <= lo - 1e-6 || root >= hi + 1e-6)
            throw Error(ErrorKind::Convergence, "Newton step left the bracket");
        if (std::fabs(step) <= 1e-10) break;
    }

    // Certify the root by a sign change of J at root ± delta.
    for (double delta : {2.5e-10, 5e-10, 1e-9}) {
        Value a = bessel_j(nu, root - delta);
        Value b = bessel_j(nu, root + delta);
        bool certain = std::fabs(a.estimate()) > a.err() && std::fabs(b.estimate()) > b.err();
        if (certain && (a.estimate() < 0.0) != (b.estimate() < 0.0)) {
            if (!(root - delta > br.lower && root + delta < br.upper))
                throw Error(ErrorKind::Convergence, "zero not strictly inside its bracket");
            return Value(root, delta, Method::RootFind);
        }
    }
    throw Error(ErrorKind::Convergence, "could not certify the zero to 1e-9");
}

Value hurwitz_zeta(int s, double a) {
    if (s < 2 || s > 64 || !(a > 0.0 && a <= 1000.0))
        throw Error(ErrorKind::Range, "hurwitz_zeta defined for 2 <= s <= 64, 0 < a <= 1000");
    constexpr int N = 25;
    kernels::Compensated sum;
    for (int m = N - 1; m >= 0; --m) sum += std::pow(m + a, -s);
    double w = N + a;
    double ws = std::pow(w, -s);
    double tail = w * ws / (s - 1) + 0.5 * ws;
    // Euler-Maclaurin corrections B_{2j}/(2j)! (s)_{2j-1} w^{-s-2j+1}, j = 1..15.
    double rising = s;                 // (s)_{2j-1}
    double power = ws / w;             // w^{-s-2j+1}
    double fact = 2.0;                 // (2j)!
    double corr = 0.0, omitted = 0.0;
    for (int j = 1; j <= 16; ++j) {
        double term = kBernoulli[j - 1][0] / kBernoulli[j - 1][1] / fact * rising * power;
        if (j == 16)
            omitted = term;
        else
            corr += term;
        rising *= (s + 2.0 * j - 1.0) * (s + 2.0 * j);
        power /= w * w;
        fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
    }
    double r = sum.value() + tail + corr;
    double err = 2.0 * std::fabs(omitted) + kEps * (N + 8.0) * std::fabs(r);
    return Value(r, err, Method::Series);
}

Value sphere_area(int d) {
    if (d < 1 || d > 300) throw Error(ErrorKind::Range, "sphere_area defined for 1 <= d <= 300");
    Value half = Value::exact(0.5 * d);
    return Value::exact(2.0) * exp(half * log(Value::constant(kPi)) - ln_gamma(half));
}

Value ball_volume(int d) {
    if (d < 1 || d > 300) throw Error(ErrorKind::Range, "ball_volume defined for 1 <= d <= 300");
    Value half = Value::exact(0.5 * d);
    return exp(half * log(Value::constant(kPi)) - ln_gamma(0.5 * d + 1.0));
}

}  // namespace hk
