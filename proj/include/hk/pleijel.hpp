#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "hk/core.hpp"

namespace hk {

// γ = (C^FK)^{-Q/2} / W
Bound gamma_from(const Bound& fk, const Value& w, double Q);

Value gamma_tilde(int n);
Value gamma_euclidean(int d);

Bound pleijel_lifting_bound(const GroupSpec& g);

// k = 1 form γ̃_n · 2((Q-1)/(Q+1))^{(Q-1)/2}, Q = 2n+2.
Value pleijel_lifting_k1_simplified(int n);

Bound pleijel_iso_bound(const GroupSpec& g, Hypothesis hypothesis);
Bound pleijel_pansu(int n);

struct QuotientSuiteRow {
    int m;
    Value alpha_quotient;
    Value gamma_rd_quotient;
    // Absent where e^{-1/(2(m-1))} - e/m <= 0, i.e. m = 2, 3.
    std::optional<Value> gamma_tilde_quotient_upper;
    std::optional<Value> combined_upper;
    // γ̃_m / γ̃_{m-1} from gamma_tilde, m <= 13.
    std::optional<Value> gamma_tilde_quotient;
};

// 2 <= m <= 200
QuotientSuiteRow pansu_quotient_suite(int m);

// α_m/α_{m-1} = (1/4)((m+1/2)/(m+1))(1 + 1/(m-1/2))^{2m}, m >= 2
Value alpha_quotient(int m);

// α_m = sqrt(4π) ((2m+1)/4)^{2m+2} / ((m+1)! Γ((2m+3)/2))
Value alpha_m(int m);

// γ(R^{2m+2}) / γ(R^{2m}), 1 <= m <= 199
Value gamma_rd_quotient(int m);

// e^{-1/(2(m-1))} - e/m
Value quotient_denominator(int m);

// Both throw a singularity error when quotient_denominator(m) <= 0.
Value gamma_tilde_quotient_upper(int m);
Value combined_quotient_upper(int m);

// γ̃_m / γ̃_{m-1}, 2 <= m <= 13
Value gamma_tilde_quotient(int m);

struct BesselZeroLemma {
    Value ratio;  // j_{m-1,1} / j_{m,1}
    Value bound;  // exp(-1/(sqrt(m)(sqrt(m+1)+1)))
};
BesselZeroLemma bessel_zero_lemma(int m);

enum class PleijelRoute { GammaTilde, SobolevLift, FromIsoUnconditional, FromIsoPansu };
const char* to_string(PleijelRoute r);

struct PleijelCandidate {
    PleijelRoute name;
    Bound bound;
};

struct PleijelBound {
    GroupSpec group;
    Bound bound;  // the winning candidate, uncapped
    PleijelRoute winner;
    std::vector<PleijelCandidate> candidates;
    std::vector<std::string> route;

    static constexpr double courant_baseline = 1.0;
    double headline() const { return std::min(bound.value.estimate(), courant_baseline); }
};

PleijelBound best_gamma_bound(const GroupSpec& g, Hypothesis hypothesis);

struct CriterionResult {
    bool holds;
    double margin;
};

// fkw_product · inf_curl · mean_inv_curl > 1
CriterionResult example_criterion(double inf_curl, double mean_inv_curl, double fkw_product);

// ln(x^{-(x+1)/2} Γ((x+2)/2)) + (x/2) ln(2e) - (1/2) ln π
double stirling_remainder(double x);

std::vector<VerificationRecord> large_dimension_scan(int max_total_dim);

// H_1, H_2, H_3 and H_1 x R: the groups whose best unconditional bound is not below 1.
bool is_open_case(const GroupSpec& g);

// (n >= 4, 0), (n >= 3, 1), (1, k >= 2), (2, k >= 1): where γ < 1 is established.
bool covered_below_one(const GroupSpec& g);

}  // namespace hk
