#pragma once

#include "hk/core.hpp"
#include "hk/kernels.hpp"

namespace hk {

struct IsoValue {
    GroupSpec group;
    Bound bound;
};

// C_n = 2^{n-3} n Γ(n/2)^2 / π^{n+1}
Value rep_constant(int n);
Value bathtub_constant(int n);

// C_1' = 3^{9/8} π^{3/4} / 2, the n = 1 case without gamma functions.
Value bathtub_constant_n1();

IsoValue iso_lower_heisenberg(int n);
IsoValue pansu_isoperimetric(int n);
Value iso_euclidean(int d);

// Lower bound on I(H_n x R^k) from a bound on I(H_n). k = 0 returns the input.
IsoValue iso_lift(const GroupSpec& g, const IsoValue& iso_hn);

// ∫_0^π sin^α, composite Gauss-Legendre with `panels` panels per half.
double sin_power_integral(double alpha, std::int64_t panels,
                          kernels::Exec exec = kernels::Exec::Parallel);

// C_n' by quadrature of the one-dimensional factors, n in {1, 2}.
Value bathtub_oracle(int n, int grid, kernels::Exec exec = kernels::Exec::Parallel);

}  // namespace hk
