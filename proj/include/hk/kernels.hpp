#pragma once

// Blocked reductions with a serial reference and an OpenMP variant. Both
// produce per-block partials with the same code and then combine them
// serially in a fixed order, so the two agree bit for bit.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

namespace hk::kernels {

enum class Exec { Serial, Parallel };

inline constexpr std::uint64_t kBlock = std::uint64_t{1} << 16;

// Neumaier's variant of Kahan summation.
struct Compensated {
    double sum = 0.0;
    double comp = 0.0;

    Compensated& operator+=(double x) {
        double t = sum + x;
        if (std::fabs(sum) >= std::fabs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
        return *this;
    }
    double value() const { return sum + comp; }
};

struct SeriesSum {
    double sum = 0.0;
    double abs_sum = 0.0;  // sum of |terms|, for rounding bounds
};

// Terms of a decreasing series: within a block, add from the last index down.
template <class F>
SeriesSum block_sum(const F& term, std::uint64_t begin, std::uint64_t end) {
    Compensated s, a;
    for (std::uint64_t m = end; m-- > begin;) {
        double t = term(m);
        s += t;
        a += std::fabs(t);
    }
    return {s.value(), a.value()};
}

inline SeriesSum combine_blocks(const std::vector<SeriesSum>& parts) {
    Compensated s, a;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        s += it->sum;
        a += it->abs_sum;
    }
    return {s.value(), a.value()};
}

template <class F>
SeriesSum sum_series_serial(const F& term, std::uint64_t count) {
    std::uint64_t nblocks = (count + kBlock - 1) / kBlock;
    std::vector<SeriesSum> parts(nblocks);
    for (std::uint64_t b = 0; b < nblocks; ++b)
        parts[b] = block_sum(term, b * kBlock, std::min(count, (b + 1) * kBlock));
    return combine_blocks(parts);
}

template <class F>
SeriesSum sum_series_parallel(const F& term, std::uint64_t count) {
    std::int64_t nblocks = static_cast<std::int64_t>((count + kBlock - 1) / kBlock);
    std::vector<SeriesSum> parts(static_cast<std::size_t>(nblocks));
#pragma omp parallel for schedule(static)
    for (std::int64_t b = 0; b < nblocks; ++b) {
        std::uint64_t lo = static_cast<std::uint64_t>(b) * kBlock;
        parts[static_cast<std::size_t>(b)] = block_sum(term, lo, std::min(count, lo + kBlock));
    }
    return combine_blocks(parts);
}

template <class F>
SeriesSum sum_series(const F& term, std::uint64_t count, Exec exec) {
    return exec == Exec::Parallel ? sum_series_parallel(term, count) : sum_series_serial(term, count);
}

struct GaussRule {
    std::array<double, 16> node{};
    std::array<double, 16> weight{};
};

// 16-point Gauss-Legendre rule on [-1, 1].
const GaussRule& gauss_legendre16();

template <class F>
double panel_sum(const F& f, double a, double h, std::int64_t i) {
    const auto& g = gauss_legendre16();
    double mid = a + (static_cast<double>(i) + 0.5) * h;
    double s = 0.0;
    for (int q = 0; q < 16; ++q) s += g.weight[q] * f(mid + 0.5 * h * g.node[q]);
    return 0.5 * h * s;
}

inline double combine_panels(const std::vector<double>& parts) {
    Compensated s;
    for (double p : parts) s += p;
    return s.value();
}

template <class F>
double integrate_serial(const F& f, double a, double b, std::int64_t panels) {
    double h = (b - a) / static_cast<double>(panels);
    std::vector<double> parts(static_cast<std::size_t>(panels));
    for (std::int64_t i = 0; i < panels; ++i) parts[static_cast<std::size_t>(i)] = panel_sum(f, a, h, i);
    return combine_panels(parts);
}

template <class F>
double integrate_parallel(const F& f, double a, double b, std::int64_t panels) {
    double h = (b - a) / static_cast<double>(panels);
    std::vector<double> parts(static_cast<std::size_t>(panels));
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < panels; ++i) parts[static_cast<std::size_t>(i)] = panel_sum(f, a, h, i);
    return combine_panels(parts);
}

// Composite Gauss-Legendre over `panels` equal subintervals of [a, b].
template <class F>
double integrate(const F& f, double a, double b, std::int64_t panels, Exec exec) {
    return exec == Exec::Parallel ? integrate_parallel(f, a, b, panels) : integrate_serial(f, a, b, panels);
}

}  // namespace hk::kernels
