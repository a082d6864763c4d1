#pragma once

#include <vector>

#include "hk/core.hpp"
#include "hk/kernels.hpp"

namespace hk {

enum class CnMethod { DirectSeries, HurwitzReduction, ClosedFormTable };

struct CnResult {
    int n;
    Value value;
    CnMethod method;
};

const char* to_string(CnMethod m);

// c_n = Σ_{m>=0} C(m+n-1, m) (2m+n)^{-(n+1)}
Value cn_series(int n, double tol, kernels::Exec exec = kernels::Exec::Parallel);
Value cn_hurwitz(int n);
Value cn_closed_form(int n);
CnResult cn(int n, CnMethod method);

// Integer coefficients of Π_{i=1}^{n-1} (u + 2i - n), lowest degree first.
// Throws an overflow error once a coefficient leaves 128-bit range.
std::vector<__int128> cn_polynomial(int n);

// Largest n the exact reduction supports with 128-bit coefficients.
inline constexpr int kCnHurwitzMaxN = 35;

Value weyl_heisenberg(int n);
Value weyl_euclidean(int k);
Value weyl_hn_rk(const GroupSpec& g);
Value weyl_product(const Value& w1, double q1, const Value& w2, double q2);

// (n-1)^{-1} min_{0<=m<=m_max} θ_n(m), θ_n(m) = ((m+n-1)/(2m+n)) (1 - 1/(2m+n))^n.
Value cn_ratio_floor(int n, int m_max);

}  // namespace hk
