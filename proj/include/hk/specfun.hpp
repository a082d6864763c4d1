#pragma once

#include "hk/core.hpp"

namespace hk {

Value ln_gamma(double x);

// ln Γ at an uncertain argument; the extra error uses a bound on |ψ(x)|.
Value ln_gamma(const Value& x);

// J_ν(x) for 0 <= ν <= 300, 0 <= x <= 400.
Value bessel_j(double nu, double x);

// J_ν and J_{ν+1} from one recurrence pass.
struct BesselPair {
    Value j;
    Value j_next;
};
BesselPair bessel_j_pair(double nu, double x);

struct BesselZeroBracket {
    double order;
    double lower;
    double upper;
};

// Lo and Chambers bounds on the first zero.
BesselZeroBracket bessel_zero_bracket(double nu);

// First positive zero of J_ν, 0 <= ν <= 200.
Value bessel_first_zero(double nu);

// ζ(s, a) = Σ_{m>=0} (m+a)^{-s}, 2 <= s <= 64, 0 < a <= 1000.
Value hurwitz_zeta(int s, double a);

Value sphere_area(int d);
Value ball_volume(int d);

}  // namespace hk
