#pragma once

#include "hk/core.hpp"

namespace hk {

struct GNParams {
    int k;
    double q;
    double theta;

    // θ = k(1/2 - 1/q); for k >= 3 requires q <= 2k/(k-2).
    static GNParams make(int k, double q);
};

Value sobolev_heisenberg(int n);
Value sobolev_euclidean(int k);
Value gn_nagy(double q);
Value gn_nagy_Q(double Q);

// Exponent k(q-2)/(2q) used by gn_from_sobolev.
double gn_from_sobolev_exponent(int k, double q);
Value gn_from_sobolev(int k, double q);

// Exponent q = 2(Q+k)/(Q+k-2) with Q = 2n+2 used by the lifting bounds.
double lifting_exponent(int n, int k);

// GN constant entering the lifting bound: Nagy for k = 1, via Sobolev for k >= 3.
Bound lifting_gn_constant(const GroupSpec& g);

Bound sobolev_lift(const GroupSpec& g);
Bound sobolev_lift_symmetric(const GroupSpec& g);

// The better of the two lifts where both exist.
Bound sobolev_lift_best(const GroupSpec& g);

Value product_sobolev(const Value& c1, double q1, const Value& c2, double q2);
Value wangzhang_limit(int k);

}  // namespace hk
