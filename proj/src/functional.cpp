#include "hk/functional.hpp"

#include <cmath>
#include <numbers>

#include "hk/specfun.hpp"

namespace hk {

namespace {

Value ex(double x) { return Value::exact(x); }
Value ln_pi() { return log(Value::constant(std::numbers::pi)); }
Value ln_of(double x) { return log(Value::exact(x)); }

}  // namespace

GNParams GNParams::make(int k, double q) {
    if (k < 1 || !(q > 2.0)) throw Error(ErrorKind::Domain, "GN parameters need k >= 1 and q > 2");
    if (k >= 3 && q > 2.0 * k / (k - 2.0)) throw Error(ErrorKind::Domain, "GN exponent above the Sobolev exponent");
    return {k, q, k * (0.5 - 1.0 / q)};
}

Value sobolev_heisenberg(int n) {
    if (n < 1 || n > 100) throw Error(ErrorKind::Domain, "sobolev_heisenberg defined for 1 <= n <= 100");
    Value lead = ex(4.0 * n * n) * Value::constant(std::numbers::pi);
    Value l = (ex(2.0 * n) * ln_of(2.0) + ln_gamma(n + 1.0)) / ex(n + 1.0);
    return lead * exp(-l);
}

Value sobolev_euclidean(int k) {
    if (k < 3 || k > 300) throw Error(ErrorKind::Domain, "sobolev_euclidean defined for 3 <= k <= 300");
    Value kk = ex(k);
    Value l = ex(2.0) / kk * ln_of(2.0) + (ex(1.0) + ex(1.0) / kk) * ln_pi() -
              ex(2.0) / kk * ln_gamma(0.5 * (k + 1));
    return ex(k * (k - 2.0) / 4.0) * exp(l);
}

Value gn_nagy(double q) {
    if (!(q > 2.0) || q > 1e3) throw Error(ErrorKind::Domain, "gn_nagy defined for 2 < q <= 1000");
    Value qv = ex(q);
    Value qp = ex(q + 2.0), qm = ex(q - 2.0);
    Value a = (qp * log(qp) - qm * log(qm) - ex(2.0) * qp * ln_of(2.0)) / (ex(2.0) * qv);
    Value p = qv / qm;
    Value b = qm / qv * (ex(0.5) * ln_pi() + ln_gamma(p) - ln_gamma(p + ex(0.5)));
    return exp(a + b);
}

Value gn_nagy_Q(double Q) {
    if (!(Q > 1.0)) throw Error(ErrorKind::Domain, "gn_nagy_Q needs Q > 1");
    Value qv = ex(Q), q1 = ex(Q + 1.0), qm = ex(Q - 1.0);
    Value a = (qv * log(qv) - ln_of(4.0) - qm * log(qm)) / q1;
    Value b = ex(2.0) / q1 * (ex(0.5) * ln_pi() + ln_gamma(0.5 * (Q + 1.0)) - ln_gamma(0.5 * (Q + 2.0)));
    return exp(a + b);
}

double gn_from_sobolev_exponent(int k, double q) { return k * (q - 2.0) / (2.0 * q); }

Value gn_from_sobolev(int k, double q) {
    if (k < 3) throw Error(ErrorKind::Domain, "gn_from_sobolev needs k >= 3");
    if (!(q >= 2.0) || q > 2.0 * k / (k - 2.0))
        throw Error(ErrorKind::Domain, "gn_from_sobolev needs 2 <= q <= 2k/(k-2)");
    return pow(sobolev_euclidean(k), gn_from_sobolev_exponent(k, q));
}

double lifting_exponent(int n, int k) {
    double Q = 2.0 * n + 2.0;
    return 2.0 * (Q + k) / (Q + k - 2.0);
}

Bound lifting_gn_constant(const GroupSpec& g) {
    if (g.n() < 1 || g.k() < 1) throw Error(ErrorKind::Domain, "lifting needs n >= 1 and k >= 1");
    if (g.k() == 2) throw Error(ErrorKind::RouteUnavailable, "no explicit Gagliardo-Nirenberg constant on R^2");
    double Q = 2.0 * g.n() + 2.0;
    if (g.k() == 1)
        return Bound(Quantity::GNConst, Direction::Exact, gn_nagy_Q(Q), Hypothesis::Unconditional, {"gn_nagy_Q"});
    return Bound(Quantity::GNConst, Direction::Lower, gn_from_sobolev(g.k(), lifting_exponent(g.n(), g.k())),
                 Hypothesis::Unconditional, {"sobolev_euclidean", "gn_from_sobolev"});
}

namespace {

// (Q+k) / (Q^{Q/(Q+k)} k^{k/(Q+k)})
Value lifting_weight(double Q, int k) {
    double t = Q + k;
    return ex(t) * exp(-(ex(Q / t) * ln_of(Q) + ex(k / t) * ln_of(k)));
}

}  // namespace

Bound sobolev_lift(const GroupSpec& g) {
    Bound gn = lifting_gn_constant(g);
    double Q = 2.0 * g.n() + 2.0;
    double t = Q + g.k();
    Value v = gn.value * pow(sobolev_heisenberg(g.n()), Q / t) * lifting_weight(Q, g.k());
    std::vector<std::string> heis{"sobolev_heisenberg"};
    return Bound(Quantity::SobolevConst, Direction::Lower, v, Hypothesis::Unconditional,
                 extend_route({&gn.route, &heis}, "sobolev_lift"));
}

Bound sobolev_lift_symmetric(const GroupSpec& g) {
    if (g.n() < 1) throw Error(ErrorKind::Domain, "sobolev_lift_symmetric needs n >= 1");
    if (g.k() < 3) throw Error(ErrorKind::Domain, "sobolev_lift_symmetric needs k >= 3");
    double Q = 2.0 * g.n() + 2.0;
    double t = Q + g.k();
    Value v = pow(sobolev_euclidean(g.k()), g.k() / t) * pow(sobolev_heisenberg(g.n()), Q / t) *
              lifting_weight(Q, g.k());
    return Bound(Quantity::SobolevConst, Direction::Lower, v, Hypothesis::Unconditional,
                 {"sobolev_euclidean", "sobolev_heisenberg", "sobolev_lift_symmetric"});
}

Bound sobolev_lift_best(const GroupSpec& g) {
    Bound a = sobolev_lift(g);
    if (g.k() < 3) return a;
    Bound b = sobolev_lift_symmetric(g);
    return b.value.estimate() > a.value.estimate() ? b : a;
}

Value product_sobolev(const Value& c1, double q1, const Value& c2, double q2) {
    if (!(q1 >= 3.0) || !(q2 >= 3.0)) throw Error(ErrorKind::Domain, "product_sobolev needs both dimensions >= 3");
    double Q = q1 + q2;
    Value l = ex(q1 / Q) * log(c1) + ex(q2 / Q) * log(c2) + ln_of(Q) - ex(q1 / Q) * ln_of(q1) -
              ex(q2 / Q) * ln_of(q2);
    return exp(l);
}

Value wangzhang_limit(int k) {
    if (k < 1 || k > 300) throw Error(ErrorKind::Domain, "wangzhang_limit defined for 1 <= k <= 300");
    Value l = ex(0.5 * k) * (ln_of(2.0) - ln_pi() - ex(1.0) - ln_of(k));
    return exp(l);
}

}  // namespace hk
