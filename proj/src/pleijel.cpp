#include "hk/pleijel.hpp"

#include <cfloat>
#include <cmath>
#include <numbers>

#include "hk/functional.hpp"
#include "hk/isoperimetry.hpp"
#include "hk/specfun.hpp"
#include "hk/weyl.hpp"

namespace hk {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

Value ex(double x) { return Value::exact(x); }
Value ln_pi() { return log(Value::constant(kPi)); }
Value ln_of(double x) { return log(Value::exact(x)); }

}  // namespace

Bound gamma_from(const Bound& fk, const Value& w, double Q) {
    if (fk.quantity != Quantity::FKConst) throw Error(ErrorKind::Mismatch, "gamma_from needs a Faber-Krahn bound");
    if (fk.direction == Direction::Upper)
        throw Error(ErrorKind::Direction, "an upper Faber-Krahn bound gives no upper bound on gamma");
    if (!(w.estimate() > 0.0)) throw Error(ErrorKind::Domain, "gamma_from needs a positive Weyl constant");
    if (!(Q > 0.0)) throw Error(ErrorKind::Domain, "gamma_from needs Q > 0");
    Value g = exp(ex(-0.5 * Q) * log(fk.value)) / w;
    std::vector<std::string> none;
    return Bound(Quantity::PleijelConst, Direction::Upper, g, fk.hypothesis,
                 extend_route({&fk.route, &none}, "gamma_from"));
}

Value gamma_tilde(int n) {
    if (n < 1 || n > 13) throw Error(ErrorKind::Domain, "gamma_tilde defined for 1 <= n <= 13");
    Value l = ex(n) * ln_of(2.0) + ln_gamma(n + 2.0) - ex(2.0 * (n + 1)) * ln_of(n) - log(cn_hurwitz(n));
    return exp(l);
}

Value gamma_euclidean(int d) {
    if (d < 2 || d > 200) throw Error(ErrorKind::Domain, "gamma_euclidean defined for 2 <= d <= 200");
    Value j = bessel_first_zero(0.5 * d - 1.0);
    return exp(ex(d) * (ln_of(2.0) - log(j)) + ex(2.0) * ln_gamma(0.5 * d + 1.0));
}

Bound pleijel_lifting_bound(const GroupSpec& g) {
    if (g.n() < 1 || g.n() > 13) throw Error(ErrorKind::Domain, "pleijel_lifting_bound needs 1 <= n <= 13");
    if (g.k() < 1) throw Error(ErrorKind::Domain, "pleijel_lifting_bound needs k >= 1");
    Bound gn = lifting_gn_constant(g);
    double Q = 2.0 * g.n() + 2.0;
    double k = g.k();
    double t = Q + k;
    Value l = ex(-0.5 * t) * log(gn.value) + ex(0.5 * Q) * ln_of(Q) + ex(0.5 * k) * ln_of(k) -
              ex(0.5 * t) * ln_of(t) + ex(0.5 * k) * log(Value::constant(4.0 * kPi)) +
              ln_gamma(0.5 * (t + 2.0)) - ln_gamma(0.5 * (Q + 2.0));
    Value v = exp(l) * gamma_tilde(g.n());
    std::vector<std::string> gt{"cn_hurwitz", "gamma_tilde"};
    return Bound(Quantity::PleijelConst, Direction::Upper, v, Hypothesis::Unconditional,
                 extend_route({&gn.route, &gt}, "pleijel_lifting_bound"));
}

Value pleijel_lifting_k1_simplified(int n) {
    double Q = 2.0 * n + 2.0;
    Value f = exp(ex(0.5 * (Q - 1.0)) * (ln_of(Q - 1.0) - ln_of(Q + 1.0)));
    return ex(2.0) * f * gamma_tilde(n);
}

Bound pleijel_iso_bound(const GroupSpec& g, Hypothesis hypothesis) {
    int n = g.n();
    if (n < 1 || n > 13) throw Error(ErrorKind::Domain, "pleijel_iso_bound needs 1 <= n <= 13");
    int q = 2 * n + 2;
    int d = q + g.k();
    if (d > 200) throw Error(ErrorKind::Domain, "pleijel_iso_bound needs 2n+2+k <= 200");
    IsoValue iso = hypothesis == Hypothesis::PansuConjecture ? pansu_isoperimetric(n) : iso_lower_heisenberg(n);
    Value ratio = iso_euclidean(q) / iso.bound.value;
    Value l = log(gamma_euclidean(d)) + ex(q) * log(ratio) - log(weyl_heisenberg(n)) -
              ex(n + 1.0) * log(Value::constant(4.0 * kPi)) - ln_gamma(n + 2.0);
    std::vector<std::string> rest{"iso_euclidean", "gamma_euclidean", "weyl_heisenberg"};
    return Bound(Quantity::PleijelConst, Direction::Upper, exp(l), iso.bound.hypothesis,
                 extend_route({&iso.bound.route, &rest}, "pleijel_iso_bound"));
}

Bound pleijel_pansu(int n) {
    if (n < 1 || n > 13) throw Error(ErrorKind::Domain, "pleijel_pansu defined for 1 <= n <= 13");
    double Q = 2.0 * n + 2.0;
    Value j = bessel_first_zero(0.5 * (Q - 2.0));
    Value l = ln_of(Q) + ex(Q) * ln_of(Q - 1.0) + ex(2.0) * ln_gamma(0.5 * Q) - ex(Q) * ln_of(Q - 2.0) -
              ln_gamma(0.5 * (Q + 1.0)) - ex(0.5 * (Q - 1.0)) * ln_pi() - ln_of(4.0) - ex(Q) * log(j) -
              log(weyl_heisenberg(n));
    return Bound(Quantity::PleijelConst, Direction::Upper, exp(l), Hypothesis::PansuConjecture,
                 {"bessel_first_zero", "weyl_heisenberg", "pleijel_pansu"});
}

Value alpha_quotient(int m) {
    if (m < 2) throw Error(ErrorKind::Domain, "alpha_quotient needs m >= 2");
    double md = m;
    // 2m log1p(1/(m - 1/2)); the argument 1/(m-1/2) carries one rounding
    double u = 1.0 / (md - 0.5);
    Value lp(std::log1p(u), 2.0 * DBL_EPSILON * std::log1p(u));
    Value l = ex(2.0 * md) * lp + ln_of(md + 0.5) - ln_of(md + 1.0) - ln_of(4.0);
    return exp(l);
}

Value alpha_m(int m) {
    if (m < 1) throw Error(ErrorKind::Domain, "alpha_m needs m >= 1");
    double md = m;
    Value l = ex(0.5) * log(Value::constant(4.0 * kPi)) + ex(2.0 * md + 2.0) * (ln_of(2.0 * md + 1.0) - ln_of(4.0)) -
              ln_gamma(md + 2.0) - ln_gamma(md + 1.5);
    return exp(l);
}

Value gamma_rd_quotient(int m) {
    if (m < 1 || m > 199) throw Error(ErrorKind::Domain, "gamma_rd_quotient defined for 1 <= m <= 199");
    Value jm = bessel_first_zero(m);
    Value jp = bessel_first_zero(m - 1.0);
    Value l = ln_of(4.0) + ex(2.0) * ln_of(m + 1.0) - ex(2.0) * log(jm) + ex(2.0 * m) * (log(jp) - log(jm));
    return exp(l);
}

Value quotient_denominator(int m) {
    if (m < 2) throw Error(ErrorKind::Domain, "quotient_denominator needs m >= 2");
    return exp(ex(-1.0 / (2.0 * (m - 1.0)))) - Value::constant(kE) / ex(m);
}

namespace {

Value positive_denominator(int m) {
    Value den = quotient_denominator(m);
    if (!(den.lo() > 0.0))
        throw Error(ErrorKind::Singularity,
                    "e^{-1/(2(m-1))} - e/m is not positive for m = " + std::to_string(m));
    return den;
}

}  // namespace

Value gamma_tilde_quotient_upper(int m) {
    Value den = positive_denominator(m);
    return ex(2.0) / Value::constant(kE) / den;
}

Value combined_quotient_upper(int m) {
    Value den = positive_denominator(m);
    double md = m;
    Value s = sqrt(ex(1.0) + ex(1.0) / ex(md)) + ex(1.0) / sqrt(ex(md));
    Value f = exp(ex(2.0) * (ex(1.0) - ex(1.0) / s));
    return ex(2.0) / Value::constant(kE) * (ex(md + 1.0) / ex(md + 5.0)) * f / den;
}

Value gamma_tilde_quotient(int m) {
    if (m < 2 || m > 13) throw Error(ErrorKind::Domain, "gamma_tilde_quotient defined for 2 <= m <= 13");
    return gamma_tilde(m) / gamma_tilde(m - 1);
}

QuotientSuiteRow pansu_quotient_suite(int m) {
    if (m < 2 || m > 199) throw Error(ErrorKind::Domain, "pansu_quotient_suite defined for 2 <= m <= 199");
    QuotientSuiteRow row{m, alpha_quotient(m), gamma_rd_quotient(m), std::nullopt, std::nullopt, std::nullopt};
    if (quotient_denominator(m).lo() > 0.0) {
        row.gamma_tilde_quotient_upper = gamma_tilde_quotient_upper(m);
        row.combined_upper = combined_quotient_upper(m);
    }
    if (m <= 13) row.gamma_tilde_quotient = gamma_tilde_quotient(m);
    return row;
}

BesselZeroLemma bessel_zero_lemma(int m) {
    if (m < 1 || m > 200) throw Error(ErrorKind::Domain, "bessel_zero_lemma defined for 1 <= m <= 200");
    Value ratio = bessel_first_zero(m - 1.0) / bessel_first_zero(m);
    Value sm = sqrt(ex(m));
    Value bound = exp(-(ex(1.0) / (sm * (sqrt(ex(m + 1.0)) + ex(1.0)))));
    return {ratio, bound};
}

const char* to_string(PleijelRoute r) {
    switch (r) {
        case PleijelRoute::GammaTilde: return "GammaTilde";
        case PleijelRoute::SobolevLift: return "SobolevLift";
        case PleijelRoute::FromIsoUnconditional: return "FromIsoUnconditional";
        case PleijelRoute::FromIsoPansu: return "FromIsoPansu";
    }
    return "?";
}

PleijelBound best_gamma_bound(const GroupSpec& g, Hypothesis hypothesis) {
    if (g.n() < 1) throw Error(ErrorKind::Domain, "best_gamma_bound needs n >= 1; use gamma_euclidean for n = 0");
    std::vector<PleijelCandidate> cands;
    if (g.k() == 0)
        cands.push_back({PleijelRoute::GammaTilde,
                         Bound(Quantity::PleijelConst, Direction::Upper, gamma_tilde(g.n()),
                               Hypothesis::Unconditional, {"cn_hurwitz", "gamma_tilde"})});
    else if (g.k() != 2)
        cands.push_back({PleijelRoute::SobolevLift, pleijel_lifting_bound(g)});
    cands.push_back({PleijelRoute::FromIsoUnconditional, pleijel_iso_bound(g, Hypothesis::Unconditional)});
    if (hypothesis == Hypothesis::PansuConjecture)
        cands.push_back({PleijelRoute::FromIsoPansu, pleijel_iso_bound(g, Hypothesis::PansuConjecture)});

    std::size_t best = 0;
    for (std::size_t i = 1; i < cands.size(); ++i)
        if (cands[i].bound.value.estimate() < cands[best].bound.value.estimate()) best = i;
    std::vector<std::string> all;
    for (const auto& c : cands)
        for (const auto& s : c.bound.route)
            if (std::find(all.begin(), all.end(), s) == all.end()) all.push_back(s);
    return {g, cands[best].bound, cands[best].name, cands, extend_route({&all}, "best_gamma_bound")};
}

CriterionResult example_criterion(double inf_curl, double mean_inv_curl, double fkw_product) {
    for (double a : {inf_curl, mean_inv_curl, fkw_product})
        if (!(a > 0.0) || !std::isfinite(a))
            throw Error(ErrorKind::Domain, "example_criterion needs positive finite arguments");
    double margin = fkw_product * inf_curl * mean_inv_curl - 1.0;
    return {margin > 0.0, margin};
}

double stirling_remainder(double x) {
    if (!(x > 0.0)) throw Error(ErrorKind::Domain, "stirling_remainder needs x > 0");
    return -0.5 * (x + 1.0) * std::log(x) + ln_gamma(0.5 * x + 1.0).estimate() + 0.5 * x * (std::log(2.0) + 1.0) -
           0.5 * std::log(kPi);
}

bool is_open_case(const GroupSpec& g) {
    return (g.k() == 0 && g.n() >= 1 && g.n() <= 3) || (g.n() == 1 && g.k() == 1);
}

bool covered_below_one(const GroupSpec& g) {
    int n = g.n(), k = g.k();
    return (k == 0 && n >= 4) || (k == 1 && n >= 3) || (n == 1 && k >= 2) || (n == 2 && k >= 1);
}

std::vector<VerificationRecord> large_dimension_scan(int max_total_dim) {
    if (max_total_dim < 6 || max_total_dim > 80)
        throw Error(ErrorKind::Domain, "large_dimension_scan needs 6 <= max_total_dim <= 80");
    std::vector<VerificationRecord> out;
    const Value one = Value::exact(1.0);
    // c_n, hence W(H_n) and γ̃_n, is only tabulated up to n = 13
    for (int n = 1; n <= 13 && 2 * n + 2 <= max_total_dim; ++n) {
        for (int k = 0; 2 * n + 2 + k <= max_total_dim; ++k) {
            GroupSpec g(n, k);
            std::string id = "lifting.largedim.n" + std::to_string(n) + "k" + std::to_string(k);
            try {
                PleijelBound b = best_gamma_bound(g, Hypothesis::Unconditional);
                std::string route = to_string(b.winner);
                if (is_open_case(g))
                    out.push_back(check_relation(id, "open case: best unconditional bound stays >= 1 (" + route + ")",
                                                 b.bound.value, Relation::GreaterEqual, one));
                else if (covered_below_one(g))
                    out.push_back(check_relation(id, "best unconditional bound below 1 (" + route + ")",
                                                 b.bound.value, Relation::Less, one));
                else if (b.bound.value.hi() < 1.0)
                    out.push_back(check_relation(id, "not covered by the main theorem; observed below 1 (" + route +
                                                         ")", b.bound.value, Relation::Less, one));
                else
                    out.push_back(check_relation(id, "not covered by the main theorem; observed >= 1 (" + route +
                                                         ")", b.bound.value, Relation::GreaterEqual, one));
            } catch (const Error& e) {
                out.push_back(failed_record(id, "large dimension scan", e.what()));
            }
        }
    }
    auto rem = [](double x) {
        double r = stirling_remainder(x);
        return Value(r, 64.0 * DBL_EPSILON * x * std::log(x) + 1e-15);
    };
    Value r100 = rem(100.0);
    out.push_back(check_relation("lifting.stirling.x100", "Stirling remainder at x = 100 below 1e-2",
                                 Value(std::fabs(r100.estimate()), r100.err()), Relation::LessEqual,
                                 Value::exact(1e-2)));
    double c_fit = 0.0, c_err = 0.0;
    for (int x = 10; x <= 200; ++x) {
        Value r = rem(x);
        double c = x * std::fabs(r.estimate());
        if (c > c_fit) {
            c_fit = c;
            c_err = x * r.err();
        }
    }
    out.push_back(check_close("lifting.stirling.fit", "fitted C = max x|r(x)| on x = 10..200 is close to 1/6",
                              Value(c_fit, c_err), Value::exact(1.0 / 6.0), 1e-2));
    return out;
}

}  // namespace hk
