#include "hk/harness.hpp"

#include <algorithm>
#include <cfloat>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numbers>
#include <ostream>
#include <set>
#include <stdexcept>

#include "json.hpp"

#include "hk/faberkrahn.hpp"
#include "hk/functional.hpp"
#include "hk/isoperimetry.hpp"
#include "hk/pleijel.hpp"
#include "hk/specfun.hpp"
#include "hk/weyl.hpp"

namespace hk {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kE = std::numbers::e;

struct Claim {
    std::string id;
    std::string description;
    std::function<VerificationRecord(const std::string&, const std::string&)> eval;
};

using Claims = std::vector<Claim>;

std::string str(int i) { return std::to_string(i); }

Value pi_v() { return Value::constant(kPi); }
Value e_v() { return Value::constant(kE); }

// The worse of lo <= x and x <= hi.
VerificationRecord check_within(const std::string& id, const std::string& desc, const Value& x, const Value& lo,
                                const Value& hi) {
    VerificationRecord a = check_relation(id, desc, lo, Relation::LessEqual, x);
    VerificationRecord b = check_relation(id, desc, x, Relation::LessEqual, hi);
    return a.margin <= b.margin ? a : b;
}

void close_claim(Claims& c, std::string id, std::string desc, std::function<Value()> computed,
                 std::function<Value()> expected, double tol, bool absolute = false) {
    c.push_back({std::move(id), std::move(desc),
                 [=](const std::string& i, const std::string& d) {
                     return check_close(i, d, computed(), expected(), tol, absolute);
                 }});
}

void relation_claim(Claims& c, std::string id, std::string desc, std::function<Value()> lhs, Relation rel,
                    std::function<Value()> rhs) {
    c.push_back({std::move(id), std::move(desc), [=](const std::string& i, const std::string& d) {
                     return check_relation(i, d, lhs(), rel, rhs());
                 }});
}

std::function<Value()> printed(std::string text) {
    return [text] { return printed_value(text); };
}

std::function<Value()> exact(double x) {
    return [x] { return Value::exact(x); };
}

// ---- tables: c_n and γ̃ tables, printed quotients

const char* kCnTable[] = {"2.7378e-2", "2.9303e-3", "2.6027e-4", "1.9706e-5", "1.2988e-6", "7.5736e-8",
                          "3.9589e-9", "1.8749e-10", "8.1149e-12", "3.23369e-13", "1.1938e-14"};  // n = 3..13

const char* kGammaTilde[] = {"3.2423", "1.8238", "1.069", "6.251e-1", "3.628e-1", "2.088e-1", "1.195e-1",
                             "6.808e-2", "3.86e-2", "2.1801e-2", "1.227e-2", "6.891e-3", "3.859e-3"};  // n = 1..13

const char* kQuotients[] = {"0.58475", "0.5804", "0.5757", "0.5721", "0.5697",
                            "0.5670",  "0.5648", "0.56298", "0.561398", "0.560069"};  // m = 4..13

Claims tables_claims(double tm) {
    Claims c;
    for (int n = 3; n <= 13; ++n) {
        std::string d = n <= 10 ? "c_n against the printed table" : "c_n against the quotient-derived value";
        close_claim(c, "tables.cn.n" + str(n), d, [n] { return cn_hurwitz(n); }, printed(kCnTable[n - 3]),
                    5e-4 * tm);
    }
    for (int n = 1; n <= 13; ++n)
        close_claim(c, "tables.gamma_tilde.n" + str(n), "gamma_tilde against the printed value",
                    [n] { return gamma_tilde(n); }, printed(kGammaTilde[n - 1]), 5e-4 * tm);
    close_claim(c, "tables.gamma_tilde_remark.n3", "gamma_tilde(3) against the four-digit value 1.0689",
                [] { return gamma_tilde(3); }, printed("1.0689"), 5e-4 * tm);
    for (int m = 4; m <= 13; ++m)
        close_claim(c, "tables.quotient.m" + str(m), "gamma_tilde(m)/gamma_tilde(m-1) against the printed quotient",
                    [m] { return gamma_tilde_quotient(m); }, printed(kQuotients[m - 4]), 5e-4 * tm);
    return c;
}

// ---- series: dual-method c_n, Weyl constants, quotient floors

Claims series_claims(double tm) {
    Claims c;
    for (int n = 1; n <= 13; ++n)
        close_claim(c, "series.dual.n" + str(n), "direct series agrees with the Hurwitz reduction within errors",
                    [n] { return cn_series(n, 1e-7); }, [n] { return cn_hurwitz(n); }, 0.0);
    close_claim(c, "series.exact.n1", "c_1 = pi^2/8", [] { return cn_hurwitz(1); },
                [] { return pi_v() * pi_v() / 8.0; }, 1e-12 * tm);
    close_claim(c, "series.exact.n2", "c_2 = pi^2/48", [] { return cn_hurwitz(2); },
                [] { return pi_v() * pi_v() / 48.0; }, 1e-12 * tm);
    for (int n = 1; n <= 10; ++n)
        close_claim(c, "series.closed.n" + str(n), "closed form agrees with the Hurwitz reduction",
                    [n] { return cn_closed_form(n); }, [n] { return cn_hurwitz(n); }, 1e-10 * tm);
    close_claim(c, "series.weyl.h1", "W(H_1) = 1/128", [] { return weyl_heisenberg(1); }, exact(1.0 / 128.0),
                1e-12 * tm);
    close_claim(c, "series.weyl.h2", "W(H_2) = 1/(2304 pi)", [] { return weyl_heisenberg(2); },
                [] { return Value::exact(1.0) / (2304.0 * pi_v()); }, 1e-12 * tm);
    for (int n = 1; n <= 5; ++n)
        for (int k = 1; k <= 10; ++k)
            close_claim(c, "series.weylprod.n" + str(n) + "k" + str(k),
                        "weyl_hn_rk agrees with the product formula",
                        [n, k] { return weyl_hn_rk(GroupSpec(n, k)); },
                        [n, k] { return weyl_product(weyl_heisenberg(n), 2.0 * n + 2, weyl_euclidean(k), k); },
                        1e-12 * tm);
    for (int n = 2; n <= 13; ++n)
        relation_claim(c, "series.ratiofloor.n" + str(n), "c_n/c_{n-1} >= (n-1)^{-1} min_{m<=1e5} theta_n(m)",
                       [n] { return cn_hurwitz(n) / cn_hurwitz(n - 1); }, Relation::GreaterEqual,
                       [n] { return cn_ratio_floor(n, 100000); });
    for (int m = 2; m <= 13; ++m) {
        std::string d = "(gamma_tilde_m/gamma_tilde_{m-1}) (e^{-1/(2(m-1))} - e/m) <= 2/e";
        if (m <= 3) d += "; the denominator is negative, so the bound is vacuous";
        relation_claim(c, "series.gtquotient.m" + str(m), d,
                       [m] { return gamma_tilde_quotient(m) * quotient_denominator(m); }, Relation::LessEqual,
                       [] { return Value::exact(2.0) / e_v(); });
    }
    return c;
}

// ---- bessel: printed zeros, residuals, lemma, brackets

Claims bessel_claims(double tm) {
    Claims c;
    struct Z {
        const char* id;
        double nu;
        const char* text;
    };
    const Z zeros[] = {{"bessel.zero4.nu1", 1.0, "3.8317"},   {"bessel.zero4.nu2", 2.0, "5.1356"},
                       {"bessel.zero4.nu3", 3.0, "6.3802"},   {"bessel.zero5.nu2p5", 2.5, "5.76346"},
                       {"bessel.zero5.nu2", 2.0, "5.13562"}};
    for (const Z& z : zeros) {
        double nu = z.nu;
        close_claim(c, z.id, "first Bessel zero against its printed decimals",
                    [nu] { return bessel_first_zero(nu); }, printed(z.text), 0.0);
    }
    for (double nu : {1.0, 2.0, 2.5, 3.0}) {
        std::string tag = nu == 2.5 ? "2p5" : str(static_cast<int>(nu));
        relation_claim(c, "bessel.residual.nu" + tag, "|J_nu(j_nu)| <= 1e-9",
                       [nu] {
                           Value j = bessel_j(nu, bessel_first_zero(nu).estimate());
                           return Value(std::fabs(j.estimate()), j.err());
                       },
                       Relation::LessEqual, exact(1e-9 * tm));
    }
    close_claim(c, "bessel.half", "j_{1/2,1} = pi", [] { return bessel_first_zero(0.5); }, [] { return pi_v(); },
                1e-9 * tm, true);
    for (int m = 1; m <= 100; ++m)
        c.push_back({"bessel.lemma.m" + str(m), "j_{m-1,1}/j_{m,1} < exp(-1/(sqrt(m)(sqrt(m+1)+1)))",
                     [m](const std::string& i, const std::string& d) {
                         BesselZeroLemma l = bessel_zero_lemma(m);
                         return check_relation(i, d, l.ratio, Relation::Less, l.bound);
                     }});
    for (int nu = 1; nu <= 200; ++nu)
        c.push_back({"bessel.bracket.nu" + str(nu), "Lo and Chambers bounds enclose j_{nu,1}",
                     [nu](const std::string& i, const std::string& d) {
                         BesselZeroBracket b = bessel_zero_bracket(nu);
                         return check_within(i, d, bessel_first_zero(nu), Value::constant(b.lower),
                                             Value::constant(b.upper));
                     }});
    return c;
}

// ---- hps: Euclidean Pleijel constants

Claims hps_claims(double tm) {
    Claims c;
    for (int d = 2; d < 200; ++d)
        relation_claim(c, "hps.decreasing.d" + str(d), "gamma(R^{d+1}) < gamma(R^d)",
                       [d] { return gamma_euclidean(d + 1); }, Relation::Less, [d] { return gamma_euclidean(d); });
    close_claim(c, "hps.ratio.d200", "gamma(R^200)/gamma(R^199) within 1e-2 of 2/e",
                [] { return gamma_euclidean(200) / gamma_euclidean(199); },
                [] { return Value::exact(2.0) / e_v(); }, 1e-2 * tm, true);
    return c;
}

// ---- maincomp: the unconditional grid, isoperimetry, Faber-Krahn

std::vector<GroupSpec> maincomp_grid() {
    std::vector<GroupSpec> g;
    for (int n = 4; n <= 13; ++n) g.emplace_back(n, 0);
    for (int n = 3; n <= 13; ++n) g.emplace_back(n, 1);
    for (int k = 2; k <= 20; ++k) g.emplace_back(1, k);
    for (int k = 1; k <= 20; ++k) g.emplace_back(2, k);
    return g;
}

Value best_value(int n, int k) { return best_gamma_bound(GroupSpec(n, k), Hypothesis::Unconditional).bound.value; }

Claims maincomp_claims(double tm) {
    Claims c;
    for (const GroupSpec& g : maincomp_grid()) {
        int n = g.n(), k = g.k();
        relation_claim(c, "maincomp.best.n" + str(n) + "k" + str(k), "best unconditional gamma bound < 1",
                       [n, k] { return best_value(n, k); }, Relation::Less, exact(1.0));
    }
    close_claim(c, "maincomp.value.n3k1", "gamma(H_3 x R) <= 0.8871", [] { return best_value(3, 1); },
                printed("0.8871"), 5e-4 * tm);
    close_claim(c, "maincomp.value.n1k2", "gamma(H_1 x R^2) <= 0.701019", [] { return best_value(1, 2); },
                printed("0.701019"), 5e-4 * tm);
    close_claim(c, "maincomp.value.n2k1", "gamma(H_2 x R) <= 0.823715", [] { return best_value(2, 1); },
                printed("0.823715"), 5e-4 * tm);

    close_claim(c, "maincomp.iso.lower.n1", "I(H_1) >= 3.09468",
                [] { return iso_lower_heisenberg(1).bound.value; }, printed("3.09468"), 1e-4 * tm);
    close_claim(c, "maincomp.iso.pansu.n1", "Pansu's value for I(H_1) is 4.39854",
                [] { return pansu_isoperimetric(1).bound.value; }, printed("4.39854"), 1e-4 * tm);
    close_claim(c, "maincomp.iso.bathtub_closed.n1", "general bathtub constant equals the n = 1 closed form",
                [] { return bathtub_constant(1); }, [] { return bathtub_constant_n1(); }, 1e-12 * tm);
    for (int n = 1; n <= 2; ++n)
        close_claim(c, "maincomp.iso.bathtub_oracle.n" + str(n), "quadrature oracle reproduces the bathtub constant",
                    [n] { return bathtub_oracle(n, 4096); }, [n] { return bathtub_constant(n); }, 1e-6 * tm);

    close_claim(c, "maincomp.fk.iso.n1", "C^FK(H_1) >= 8.78829",
                [] { return fk_from_iso(iso_lower_heisenberg(1), 4).value; }, printed("8.78829"), 1e-4 * tm);
    close_claim(c, "maincomp.fk.iso.n2", "C^FK(H_2) >= 17.9011",
                [] { return fk_from_iso(iso_lower_heisenberg(2), 6).value; }, printed("17.9011"), 1e-4 * tm);
    for (int d = 2; d <= 40; ++d)
        close_claim(c, "maincomp.fk.equality.d" + str(d), "symmetrization is an equality on R^d",
                    [d] { return fk_from_iso(iso_euclidean_bound(d), d).value; }, [d] { return fk_euclidean(d); },
                    1e-10 * tm);
    close_claim(c, "maincomp.gamma.iso.n1", "gamma(H_1) <= 1.65737 from the Faber-Krahn bound",
                [] { return gamma_from(fk_from_iso(iso_lower_heisenberg(1), 4), weyl_heisenberg(1), 4).value; },
                printed("1.65737"), 1e-4 * tm);
    close_claim(c, "maincomp.gamma.iso.n2", "gamma(H_2) <= 1.26183 from the Faber-Krahn bound",
                [] { return gamma_from(fk_from_iso(iso_lower_heisenberg(2), 6), weyl_heisenberg(2), 6).value; },
                printed("1.26183"), 1e-4 * tm);
    return c;
}

// ---- pansu: conditional bounds and the quotient argument

Claims pansu_claims(double tm) {
    Claims c;
    const char* printed_bound[] = {"0.406114", "0.155327", "0.0641172"};
    for (int n = 1; n <= 3; ++n)
        close_claim(c, "pansu.bound.n" + str(n), "conditional gamma(H_n) bound against the printed value",
                    [n] { return pleijel_pansu(n).value; }, printed(printed_bound[n - 1]), 5e-4 * tm);
    close_claim(c, "pansu.base", "gamma(R^4) alpha_1 gamma_tilde_1 = 0.406112",
                [] { return gamma_euclidean(4) * alpha_m(1) * gamma_tilde(1); }, printed("0.406112"), 1e-4 * tm);
    for (int m = 34; m <= 200; ++m)
        relation_claim(c, "pansu.combined.m" + str(m), "combined quotient bound < 1",
                       [m] { return combined_quotient_upper(m); }, Relation::Less, exact(1.0));
    relation_claim(c, "pansu.alpha.max", "max_{2<=m<=10^4} alpha_m/alpha_{m-1} < e^2/4",
                   [] {
                       Value worst = alpha_quotient(2);
                       for (int m = 3; m <= 10000; ++m) {
                           Value q = alpha_quotient(m);
                           if (q.hi() > worst.hi()) worst = q;
                       }
                       return worst;
                   },
                   Relation::Less, [] { return e_v() * e_v() / 4.0; });
    close_claim(c, "pansu.denominator.m13", "e^{-1/24} - e/13 = 0.75009", [] { return quotient_denominator(13); },
                printed("0.75009"), 1e-4 * tm);
    close_claim(c, "pansu.inverse_denominator.m63", "(e^{-1/124} - e/63)^{-1} = 1.05394",
                [] { return Value::exact(1.0) / quotient_denominator(63); }, printed("1.05394"), 1e-4 * tm);
    close_claim(c, "pansu.threshold", "((1 - ln 2.108)/2)^{-2} = 61.8732",
                [] {
                    Value t = (Value::exact(1.0) - log(Value::constant(2.108))) / 2.0;
                    return Value::exact(1.0) / (t * t);
                },
                printed("61.8732"), 1e-4 * tm);
    return c;
}

// ---- lifting: functional inequalities, k = 1 identity, large dimensions

Claims lifting_claims(double tm) {
    Claims c;
    for (double Q : {2.0, 3.0, 4.0, 6.0, 8.0, 10.0, 14.0})
        close_claim(c, "lifting.nagy.Q" + str(static_cast<int>(Q)), "Nagy constant agrees with its Q form",
                    [Q] { return gn_nagy(2.0 * (Q + 1.0) / (Q - 1.0)); }, [Q] { return gn_nagy_Q(Q); },
                    1e-12 * tm);
    close_claim(c, "lifting.wangzhang.k1", "S_q^{-q/(q-2)} at q = 2.001 near the k = 1 limit",
                [] { return pow(gn_nagy(2.001), -2.001 / 0.001); }, [] { return wangzhang_limit(1); }, 1e-2 * tm);
    close_claim(c, "lifting.sobolev.k3", "C^Sob(R^3) = 3 (pi/2)^{4/3}", [] { return sobolev_euclidean(3); },
                [] { return 3.0 * pow(pi_v() / 2.0, 4.0 / 3.0); }, 1e-12 * tm);
    for (int n = 1; n <= 6; ++n)
        close_claim(c, "lifting.k1identity.n" + str(n), "k = 1 lifting bound equals its simplified form",
                    [n] { return pleijel_lifting_bound(GroupSpec(n, 1)).value; },
                    [n] { return pleijel_lifting_k1_simplified(n); }, 1e-12 * tm);
    return c;
}

Claims claims_for(CampaignName name, double tm) {
    switch (name) {
        case CampaignName::Maincomp: return maincomp_claims(tm);
        case CampaignName::Pansu: return pansu_claims(tm);
        case CampaignName::Bessel: return bessel_claims(tm);
        case CampaignName::Hps: return hps_claims(tm);
        case CampaignName::Tables: return tables_claims(tm);
        case CampaignName::Series: return series_claims(tm);
        case CampaignName::Lifting: return lifting_claims(tm);
        case CampaignName::All: break;
    }
    Claims all;
    for (CampaignName n : {CampaignName::Maincomp, CampaignName::Pansu, CampaignName::Bessel, CampaignName::Hps,
                           CampaignName::Tables, CampaignName::Series, CampaignName::Lifting}) {
        Claims part = claims_for(n, tm);
        std::move(part.begin(), part.end(), std::back_inserter(all));
    }
    return all;
}

bool includes_scan(CampaignName name) { return name == CampaignName::Lifting || name == CampaignName::All; }

}  // namespace

const char* to_string(CampaignName c) {
    switch (c) {
        case CampaignName::Maincomp: return "maincomp";
        case CampaignName::Pansu: return "pansu";
        case CampaignName::Bessel: return "bessel";
        case CampaignName::Hps: return "hps";
        case CampaignName::Tables: return "tables";
        case CampaignName::Series: return "series";
        case CampaignName::Lifting: return "lifting";
        case CampaignName::All: return "all";
    }
    return "?";
}

CampaignName campaign_from_string(std::string_view s) {
    for (CampaignName c : {CampaignName::Maincomp, CampaignName::Pansu, CampaignName::Bessel, CampaignName::Hps,
                           CampaignName::Tables, CampaignName::Series, CampaignName::Lifting, CampaignName::All})
        if (s == to_string(c)) return c;
    throw Error(ErrorKind::Domain, "unknown campaign '" + std::string(s) + "'");
}

bool natural_less(std::string_view a, std::string_view b) {
    std::size_t i = 0, j = 0;
    auto digit = [](char ch) { return ch >= '0' && ch <= '9'; };
    while (i < a.size() && j < b.size()) {
        if (digit(a[i]) && digit(b[j])) {
            std::size_t i0 = i, j0 = j;
            while (i < a.size() && digit(a[i])) ++i;
            while (j < b.size() && digit(b[j])) ++j;
            std::string_view da = a.substr(i0, i - i0), db = b.substr(j0, j - j0);
            while (da.size() > 1 && da.front() == '0') da.remove_prefix(1);
            while (db.size() > 1 && db.front() == '0') db.remove_prefix(1);
            if (da.size() != db.size()) return da.size() < db.size();
            if (da != db) return da < db;
        } else {
            if (a[i] != b[j]) return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
    return a < b;
}

Value printed_value(std::string_view text) {
    std::string_view mant = text;
    int exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
        mant = text.substr(0, e);
        std::string_view ex = text.substr(e + 1);
        if (!ex.empty() && ex.front() == '+') ex.remove_prefix(1);
        auto r = std::from_chars(ex.data(), ex.data() + ex.size(), exponent);
        if (r.ec != std::errc() || r.ptr != ex.data() + ex.size())
            throw Error(ErrorKind::Domain, "bad exponent in '" + std::string(text) + "'");
    }
    int decimals = 0;
    if (auto dot = mant.find('.'); dot != std::string_view::npos) decimals = static_cast<int>(mant.size() - dot - 1);
    double x = 0.0;
    auto r = std::from_chars(text.data(), text.data() + text.size(), x);
    if (r.ec != std::errc() || r.ptr != text.data() + text.size())
        throw Error(ErrorKind::Domain, "cannot parse printed value '" + std::string(text) + "'");
    return Value::printed(x, std::pow(10.0, exponent - decimals));
}

std::vector<std::string> campaign_claim_ids(CampaignName name) {
    std::vector<std::string> ids;
    for (const Claim& c : claims_for(name, 1.0)) ids.push_back(c.id);
    if (includes_scan(name))
        for (const auto& r : large_dimension_scan(30)) ids.push_back(r.claim_id);
    std::sort(ids.begin(), ids.end(), [](const std::string& a, const std::string& b) { return natural_less(a, b); });
    return ids;
}

Campaign run_campaign(CampaignName name, double tolerance_multiplier) {
    if (!(tolerance_multiplier >= 0.1 && tolerance_multiplier <= 100.0))
        throw Error(ErrorKind::Domain, "tolerance multiplier must lie in [0.1, 100]");
    Claims claims = claims_for(name, tolerance_multiplier);
    std::vector<VerificationRecord> records(claims.size());
    const auto count = static_cast<std::int64_t>(claims.size());
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t i = 0; i < count; ++i) {
        const Claim& c = claims[i];
        try {
            records[i] = c.eval(c.id, c.description);
        } catch (const std::exception& e) {
            records[i] = failed_record(c.id, c.description, e.what());
        }
    }
    if (includes_scan(name)) {
        try {
            for (auto& r : large_dimension_scan(30)) records.push_back(std::move(r));
        } catch (const std::exception& e) {
            records.push_back(failed_record("lifting.largedim", "large dimension scan", e.what()));
        }
    }
    std::sort(records.begin(), records.end(), [](const VerificationRecord& a, const VerificationRecord& b) {
        return natural_less(a.claim_id, b.claim_id);
    });
    for (std::size_t i = 1; i < records.size(); ++i)
        if (records[i].claim_id == records[i - 1].claim_id)
            throw std::logic_error("duplicate claim id " + records[i].claim_id);
    bool ok = std::all_of(records.begin(), records.end(), [](const VerificationRecord& r) { return r.passed(); });
    return {name, std::move(records), ok ? 0 : 1};
}

// ---- tables

Format format_from_string(std::string_view s) {
    if (s == "text") return Format::Text;
    if (s == "csv") return Format::Csv;
    if (s == "json") return Format::Json;
    throw Error(ErrorKind::Domain, "unknown format '" + std::string(s) + "'");
}

TableName table_from_string(std::string_view s) {
    if (s == "cn") return TableName::Cn;
    if (s == "gamma_tilde") return TableName::GammaTilde;
    if (s == "quotients") return TableName::Quotients;
    if (s == "constants") return TableName::Constants;
    if (s == "routes") return TableName::Routes;
    throw Error(ErrorKind::Domain, "unknown table '" + std::string(s) + "'");
}

namespace {

Cell maybe_printed(const char* const* table, int first, int last, int i) {
    if (i < first || i > last) return std::string();
    return printed_value(table[i - first]);
}

// "n/a" where the quantity is undefined, e.g. the quotient bounds at m = 2, 3.
template <class F>
Cell try_cell(F f) {
    try {
        return f();
    } catch (const Error&) {
        return std::string("n/a");
    }
}

std::vector<GroupSpec> route_grid() {
    std::set<std::pair<int, int>> keys;
    for (const GroupSpec& g : maincomp_grid()) keys.insert({g.n(), g.k()});
    for (int n = 1; n <= 3; ++n)
        for (int k = 0; k <= 10; ++k) keys.insert({n, k});
    std::vector<GroupSpec> out;
    for (auto [n, k] : keys) out.emplace_back(n, k);
    return out;
}

}  // namespace

ReportTable build_table(TableName name, int max_n) {
    if (max_n < 1 || max_n > 13) throw Error(ErrorKind::Domain, "max-n must lie in 1..13");
    ReportTable t;
    switch (name) {
        case TableName::Cn:
            t.name = "cn";
            t.headers = {"n", "c_n", "c_n_series", "printed"};
            for (int n = 1; n <= max_n; ++n) {
                t.rows.push_back({std::to_string(n), cn_hurwitz(n), cn_series(n, 1e-7),
                                  maybe_printed(kCnTable, 3, 13, n)});
                t.provenance.push_back(n <= 2 ? "closed form" : n <= 10 ? "printed table" : "quotient-derived");
            }
            break;
        case TableName::GammaTilde:
            t.name = "gamma_tilde";
            t.headers = {"n", "gamma_tilde", "printed"};
            for (int n = 1; n <= max_n; ++n) {
                t.rows.push_back({std::to_string(n), gamma_tilde(n), maybe_printed(kGammaTilde, 1, 13, n)});
                t.provenance.push_back(n <= 2 ? "printed remark" : "printed table");
            }
            break;
        case TableName::Quotients:
            t.name = "quotients";
            t.headers = {"m", "gamma_tilde_quotient", "quotient_upper", "combined_upper", "printed"};
            for (int m = 2; m <= 13; ++m) {
                t.rows.push_back({std::to_string(m), gamma_tilde_quotient(m),
                                  try_cell([m] { return gamma_tilde_quotient_upper(m); }),
                                  try_cell([m] { return combined_quotient_upper(m); }),
                                  maybe_printed(kQuotients, 4, 13, m)});
                t.provenance.push_back(m >= 4 ? "printed quotient table" : "computed");
            }
            break;
        case TableName::Constants:
            t.name = "constants";
            t.headers = {"n", "weyl", "sobolev", "iso_lower", "iso_pansu", "fk_best", "gamma_best"};
            for (int n = 1; n <= max_n; ++n) {
                GroupSpec g(n, 0);
                t.rows.push_back({std::to_string(n), weyl_heisenberg(n), sobolev_heisenberg(n),
                                  iso_lower_heisenberg(n).bound.value, pansu_isoperimetric(n).bound.value,
                                  fk_best(g, Hypothesis::Unconditional).best.bound.value,
                                  best_gamma_bound(g, Hypothesis::Unconditional).bound.value});
                t.provenance.push_back("computed");
            }
            break;
        case TableName::Routes:
            t.name = "routes";
            t.headers = {"n", "k", "fk_route", "fk_value", "gamma_route", "gamma_value", "headline"};
            for (const GroupSpec& g : route_grid()) {
                FKSelection fk = fk_best(g, Hypothesis::Unconditional);
                PleijelBound pb = best_gamma_bound(g, Hypothesis::Unconditional);
                t.rows.push_back({std::to_string(g.n()), std::to_string(g.k()), std::string(to_string(fk.best.name)),
                                  fk.best.bound.value, std::string(to_string(pb.winner)), pb.bound.value,
                                  Value::exact(pb.headline())});
                t.provenance.push_back("computed");
            }
            break;
    }
    return t;
}

std::string format_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9e", x);
    return buf;
}

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"') out += '"';
        out += ch;
    }
    out += '"';
    return out;
}

namespace {

std::string text_cell(const Cell& c) {
    if (const auto* v = std::get_if<Value>(&c)) return format_number(v->estimate()) + " +- " + format_number(v->err());
    return std::get<std::string>(c);
}

void write_padded(std::ostream& out, const std::vector<std::vector<std::string>>& lines) {
    std::vector<std::size_t> width;
    for (const auto& l : lines)
        for (std::size_t i = 0; i < l.size(); ++i) {
            if (width.size() <= i) width.push_back(0);
            width[i] = std::max(width[i], l[i].size());
        }
    for (const auto& l : lines) {
        std::string row;
        for (std::size_t i = 0; i < l.size(); ++i) {
            row += l[i];
            if (i + 1 < l.size()) row += std::string(width[i] - l[i].size() + 2, ' ');
        }
        out << row << '\n';
    }
}

}  // namespace

void emit_table(const ReportTable& t, Format f, std::ostream& out) {
    const std::size_t cols = t.headers.size();
    for (const auto& r : t.rows)
        if (r.size() != cols) throw std::logic_error("table " + t.name + " has a ragged row");
    // A column holds Values if any row has a Value there.
    std::vector<bool> numeric(cols, false);
    for (const auto& r : t.rows)
        for (std::size_t i = 0; i < cols; ++i)
            if (std::holds_alternative<Value>(r[i])) numeric[i] = true;

    switch (f) {
        case Format::Text: {
            std::vector<std::vector<std::string>> lines;
            std::vector<std::string> head = t.headers;
            head.push_back("provenance");
            lines.push_back(head);
            for (std::size_t r = 0; r < t.rows.size(); ++r) {
                std::vector<std::string> l;
                for (const auto& c : t.rows[r]) l.push_back(text_cell(c));
                l.push_back(t.provenance[r]);
                lines.push_back(l);
            }
            write_padded(out, lines);
            break;
        }
        case Format::Csv: {
            std::vector<std::string> head;
            for (std::size_t i = 0; i < cols; ++i) {
                head.push_back(t.headers[i]);
                if (numeric[i]) head.push_back(t.headers[i] + "_err");
            }
            head.push_back("provenance");
            for (std::size_t i = 0; i < head.size(); ++i) out << (i ? "," : "") << csv_field(head[i]);
            out << "\r\n";
            for (std::size_t r = 0; r < t.rows.size(); ++r) {
                std::vector<std::string> l;
                for (std::size_t i = 0; i < cols; ++i) {
                    const Cell& c = t.rows[r][i];
                    if (const auto* v = std::get_if<Value>(&c)) {
                        l.push_back(format_number(v->estimate()));
                        l.push_back(format_number(v->err()));
                    } else {
                        l.push_back(std::get<std::string>(c));
                        if (numeric[i]) l.push_back("");
                    }
                }
                l.push_back(t.provenance[r]);
                for (std::size_t i = 0; i < l.size(); ++i) out << (i ? "," : "") << csv_field(l[i]);
                out << "\r\n";
            }
            break;
        }
        case Format::Json: {
            nlohmann::json arr = nlohmann::json::array();
            for (std::size_t r = 0; r < t.rows.size(); ++r) {
                nlohmann::json row = nlohmann::json::object();
                for (std::size_t i = 0; i < cols; ++i) {
                    const Cell& c = t.rows[r][i];
                    if (const auto* v = std::get_if<Value>(&c))
                        row[t.headers[i]] = *v;
                    else
                        row[t.headers[i]] = std::get<std::string>(c);
                }
                row["provenance"] = t.provenance[r];
                arr.push_back(row);
            }
            out << arr.dump(2) << '\n';
            break;
        }
    }
    if (!out) throw Error(ErrorKind::Domain, "failed to write table " + t.name);
}

void emit_records(const std::vector<VerificationRecord>& records, Format f, std::ostream& out) {
    std::size_t failed = 0;
    for (const auto& r : records) failed += !r.passed();
    switch (f) {
        case Format::Text: {
            std::vector<std::vector<std::string>> lines;
            lines.push_back({"status", "claim_id", "relation", "computed", "expected", "margin", "description"});
            for (const auto& r : records)
                lines.push_back({r.passed() ? "PASS" : "FAIL", r.claim_id, to_string(r.relation),
                                 text_cell(r.computed), text_cell(r.expected), format_number(r.margin),
                                 r.description});
            write_padded(out, lines);
            out << records.size() << " records, " << failed << " failed\n";
            break;
        }
        case Format::Csv: {
            out << "claim_id,status,relation,computed,computed_err,expected,expected_err,tolerance,absolute,margin,"
                   "description\r\n";
            for (const auto& r : records) {
                std::vector<std::string> l{r.claim_id,
                                           to_string(r.status),
                                           to_string(r.relation),
                                           format_number(r.computed.estimate()),
                                           format_number(r.computed.err()),
                                           format_number(r.expected.estimate()),
                                           format_number(r.expected.err()),
                                           format_number(r.tolerance),
                                           r.absolute ? "true" : "false",
                                           format_number(r.margin),
                                           r.description};
                for (std::size_t i = 0; i < l.size(); ++i) out << (i ? "," : "") << csv_field(l[i]);
                out << "\r\n";
            }
            break;
        }
        case Format::Json: {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& r : records) arr.push_back(r);
            out << arr.dump(2) << '\n';
            break;
        }
    }
    if (!out) throw Error(ErrorKind::Domain, "failed to write records");
}

}  // namespace hk
