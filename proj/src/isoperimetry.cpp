#include "hk/isoperimetry.hpp"

#include <cfloat>
#include <cmath>
#include <numbers>

#include "hk/specfun.hpp"

namespace hk {

namespace {

constexpr double kPi = std::numbers::pi;

Value ex(double x) { return Value::exact(x); }
Value ln_pi() { return log(Value::constant(kPi)); }
Value ln_of(double x) { return log(Value::exact(x)); }

void check_n(int n, const char* what) {
    if (n < 1 || n > 50) throw Error(ErrorKind::Domain, std::string(what) + " defined for 1 <= n <= 50");
}

}  // namespace

Value rep_constant(int n) {
    check_n(n, "rep_constant");
    Value l = ex(n - 3.0) * ln_of(2.0) + ln_of(n) + ex(2.0) * ln_gamma(0.5 * n) - ex(n + 1.0) * ln_pi();
    return exp(l);
}

Value bathtub_constant(int n) {
    check_n(n, "bathtub_constant");
    double Q = 2.0 * n + 2.0;
    Value qv = ex(Q), q1 = ex(Q - 1.0);
    Value a = (ex(2.0) * qv - ex(1.0)) / (ex(2.0) * q1);
    Value b = ex(0.5 * n) + qv / (ex(4.0) * q1);
    Value c = qv / (ex(2.0) * q1);
    Value inner = ex(n) * ln_pi() + ln_gamma(a) - ln_gamma(a + ex(0.5)) + ln_gamma(b) - ln_gamma(b + ex(0.5)) +
                  ln_gamma(ex(1.0) + c) - ln_gamma(ex(n) + c);
    return exp(ln_of(Q) / qv + q1 / qv * inner);
}

Value bathtub_constant_n1() {
    return exp(ex(9.0 / 8.0) * ln_of(3.0) + ex(0.75) * ln_pi() - ln_of(2.0));
}

IsoValue iso_lower_heisenberg(int n) {
    Value v = ex(1.0) / (rep_constant(n) * bathtub_constant(n));
    return {GroupSpec(n, 0), Bound(Quantity::IsoConst, Direction::Lower, v, Hypothesis::Unconditional,
                                   {"rep_constant", "bathtub_constant", "iso_lower_heisenberg"})};
}

IsoValue pansu_isoperimetric(int n) {
    check_n(n, "pansu_isoperimetric");
    double Q = 2.0 * n + 2.0;
    Value l = ln_of(2.0 * n) - ln_of(2.0 * n + 1.0) + ex((Q - 1.0) / Q) * ln_of(Q) +
              ln_gamma(0.5 * (2 * n + 3)) / ex(Q) + ex((Q - 1.0) / (2.0 * Q)) * ln_pi() +
              (ln_of(2.0) - ln_gamma(n + 1.0)) / ex(n + 1.0);
    return {GroupSpec(n, 0), Bound(Quantity::IsoConst, Direction::Exact, exp(l), Hypothesis::PansuConjecture,
                                   {"pansu_isoperimetric"})};
}

Value iso_euclidean(int d) {
    if (d < 1 || d > 300) throw Error(ErrorKind::Domain, "iso_euclidean defined for 1 <= d <= 300");
    if (d == 1) return Value::exact(2.0);
    return exp(ex((d - 1.0) / d) * ln_of(d) + log(sphere_area(d)) / ex(d));
}

IsoValue iso_lift(const GroupSpec& g, const IsoValue& iso_hn) {
    if (g.n() < 1) throw Error(ErrorKind::Domain, "iso_lift needs n >= 1");
    if (iso_hn.bound.quantity != Quantity::IsoConst)
        throw Error(ErrorKind::Mismatch, "iso_lift needs an isoperimetric bound");
    if (!(iso_hn.group == GroupSpec(g.n(), 0)))
        throw Error(ErrorKind::Mismatch, "iso_lift input is not a bound for H_" + std::to_string(g.n()));
    if (iso_hn.bound.direction == Direction::Upper)
        throw Error(ErrorKind::Direction, "iso_lift needs a lower or exact bound");
    if (g.k() == 0) return iso_hn;
    int q = 2 * g.n() + 2;
    int d = q + g.k();
    Value ratio = iso_hn.bound.value / iso_euclidean(q);
    Value v = iso_euclidean(d) * pow(ratio, static_cast<double>(q) / d);
    std::vector<std::string> eu{"iso_euclidean"};
    return {g, Bound(Quantity::IsoConst, Direction::Lower, v, iso_hn.bound.hypothesis,
                     extend_route({&iso_hn.bound.route, &eu}, "iso_lift"))};
}

namespace {

// ∫_0^{π/2} f(sin x, cos x) with x = (π/2) u^3 near the endpoint where f is
// singular. `at_zero` selects which endpoint.
template <class F>
double quarter_integral(const F& f, bool at_zero, std::int64_t panels, kernels::Exec exec) {
    constexpr double h = kPi / 2;
    auto g = [&](double u) {
        double t = h * u * u * u;
        double x = at_zero ? t : h - t;
        return f(std::sin(x), std::cos(x)) * 3.0 * h * u * u;
    };
    return kernels::integrate(g, 0.0, 1.0, panels, exec);
}

struct Refined {
    double coarse, mid, fine;
};

template <class F>
Refined refine(const F& integral, std::int64_t grid) {
    return {integral(grid), integral(2 * grid), integral(4 * grid)};
}

Value quadrature_value(const Refined& r, const char* what) {
    double err = std::fabs(r.fine - r.mid);
    double prev = std::fabs(r.mid - r.coarse);
    double floor = 64.0 * DBL_EPSILON * std::fabs(r.fine);
    if (err > 10.0 * prev + floor)
        throw Error(ErrorKind::Convergence, std::string(what) + ": quadrature refinements do not converge");
    return Value(r.fine, err + floor, Method::Quadrature);
}

}  // namespace

double sin_power_integral(double alpha, std::int64_t panels, kernels::Exec exec) {
    if (!(alpha >= 0.0)) throw Error(ErrorKind::Domain, "sin_power_integral needs alpha >= 0");
    if (panels < 1) throw Error(ErrorKind::Domain, "sin_power_integral needs at least one panel");
    return 2.0 * quarter_integral([alpha](double s, double) { return std::pow(s, alpha); }, true, panels, exec);
}

Value bathtub_oracle(int n, int grid, kernels::Exec exec) {
    if (n != 1 && n != 2) throw Error(ErrorKind::Domain, "bathtub_oracle supports n = 1 and n = 2");
    if (grid < 256) throw Error(ErrorKind::Domain, "bathtub_oracle needs grid >= 256");
    double Q = 2.0 * n + 2.0;
    double p = Q / (Q - 1.0);
    Value phi = quadrature_value(refine([&](std::int64_t g) { return sin_power_integral(p, g, exec); }, grid),
                                 "bathtub_oracle");
    Value theta = quadrature_value(
        refine([&](std::int64_t g) { return sin_power_integral(n - 1.0 + 0.5 * p, g, exec); }, grid),
        "bathtub_oracle");
    Value sigma = Value::exact(1.0);
    if (n == 2) {
        // dμ(ω) = sin θ cos θ dθ on the quarter circle, integrand ω_2^{p} = cos^p θ
        auto f = [p](double s, double c) { return s * std::pow(c, 1.0 + p); };
        sigma = quadrature_value(refine([&](std::int64_t g) { return quarter_integral(f, false, g, exec); }, grid),
                                 "bathtub_oracle");
    }
    Value total = pow(Value::constant(2.0 * kPi), n - 1.0) * phi * theta * sigma;
    Value c = exp(ln_of(Q) / ex(Q) + ex((Q - 1.0) / Q) * log(total));
    return c.with_method(Method::Quadrature);
}

}  // namespace hk
