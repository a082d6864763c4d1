#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hk/specfun.hpp"
#include "oracle.hpp"

using namespace hk;
using oracle::rel;

// Reference values below were computed with mpmath at 30 digits.

TEST(LnGamma, MatchesReferenceValues) {
    const std::pair<double, double> ref[] = {
        {0.1, 2.2527126517342059599},   {0.5, 0.57236494292470008707}, {1.5, -0.12078223763524522235},
        {3.7, 1.4280723266653879219},   {9.99, 12.77931521435019288},  {10.01, 12.824350262448247762},
        {57.3, 173.56386827969143042},  {250.5, 1131.2840013322551691}};
    for (auto [x, y] : ref) {
        Value v = ln_gamma(x);
        EXPECT_NEAR(v.estimate(), y, 4e-15 * std::max(1.0, std::fabs(y))) << x;
        EXPECT_LE(std::fabs(v.estimate() - y), v.err() + 1e-15 * std::fabs(y)) << x;
    }
}

TEST(LnGamma, FactorialsAndRecurrence) {
    double f = 1.0;
    for (int n = 1; n <= 25; ++n) {
        f *= n;
        EXPECT_NEAR(ln_gamma(n + 1.0).estimate(), std::log(f), 1e-14 * std::max(1.0, std::log(f))) << n;
    }
    auto gen = oracle::rng(2);
    std::uniform_real_distribution<double> u(0.2, 60.0);
    for (int i = 0; i < 500; ++i) {
        double x = u(gen);
        double lhs = ln_gamma(x + 1.0).estimate();
        double rhs = ln_gamma(x).estimate() + std::log(x);
        EXPECT_NEAR(lhs, rhs, 1e-13 * std::max(1.0, std::fabs(lhs))) << x;
    }
}

TEST(LnGamma, UncertainArgument) {
    Value v = ln_gamma(Value(5.0, 1e-6));
    EXPECT_GE(v.err(), 1e-6 * std::log(5.0));
    EXPECT_NEAR(v.estimate(), std::log(24.0), 1e-14);
}

TEST(Bessel, MatchesReferenceValues) {
    struct R {
        double nu, x, y;
    };
    const R ref[] = {{0, 1, 0.76519768655796655145},      {0, 10, -0.2459357644513483352},
                     {1, 3.5, 0.13737752736232718572},    {2.5, 7, -0.28343665120169919822},
                     {10, 5, 0.0014678026473104741311},   {30, 40, -0.10408594976564972693},
                     {100, 120, 0.075737179130010701447}, {0.5, 2, 0.51301613656182775167},
                     {200, 210, 0.031620020933562850916}, {300, 400, -0.048457238015631149096}};
    for (const R& r : ref) {
        Value v = bessel_j(r.nu, r.x);
        EXPECT_NEAR(v.estimate(), r.y, 1e-13) << r.nu << " " << r.x;
        EXPECT_LE(std::fabs(v.estimate() - r.y), v.err() + 1e-15) << r.nu << " " << r.x;
    }
}

TEST(Bessel, HalfOrderClosedForms) {
    for (double x : {0.3, 1.0, 4.0, 17.5, 60.0}) {
        double s = std::sqrt(2.0 / (std::numbers::pi * x));
        EXPECT_NEAR(bessel_j(0.5, x).estimate(), s * std::sin(x), 1e-14);
        EXPECT_NEAR(bessel_j(1.5, x).estimate(), s * (std::sin(x) / x - std::cos(x)), 1e-14);
    }
    EXPECT_EQ(bessel_j(0.0, 0.0).estimate(), 1.0);
    EXPECT_EQ(bessel_j(2.0, 0.0).estimate(), 0.0);
}

TEST(BesselProperty, RecurrenceAndPair) {
    auto gen = oracle::rng(3);
    std::uniform_real_distribution<double> nu(0.0, 50.0), x(0.1, 80.0);
    for (int i = 0; i < 300; ++i) {
        double n = nu(gen) + 1.0, z = x(gen);
        double lhs = bessel_j(n - 1.0, z).estimate() + bessel_j(n + 1.0, z).estimate();
        double rhs = 2.0 * n / z * bessel_j(n, z).estimate();
        EXPECT_NEAR(lhs, rhs, 1e-12 * std::max(1.0, 2.0 * n / z)) << n << " " << z;
        BesselPair p = bessel_j_pair(n, z);
        EXPECT_NEAR(p.j_next.estimate(), bessel_j(n + 1.0, z).estimate(), 1e-14);
    }
}

TEST(BesselProperty, AgreesWithAscendingSeriesOracle) {
    auto gen = oracle::rng(4);
    std::uniform_real_distribution<double> nu(0.0, 8.0), x(0.0, 12.0);
    for (int i = 0; i < 300; ++i) {
        double n = nu(gen), z = x(gen);
        // the alternating series cancels roughly e^z / sqrt(z) of its own precision
        EXPECT_NEAR(bessel_j(n, z).estimate(), oracle::bessel_j(n, z), 1e-12) << n << " " << z;
    }
}

TEST(BesselZero, MatchesReferenceValues) {
    const std::pair<double, double> ref[] = {
        {0, 2.4048255576957727686},   {0.5, 3.1415926535897932385}, {1, 3.8317059702075123156},
        {1.5, 4.4934094579090641753}, {2, 5.1356223018406825563},   {2.5, 5.7634591968945497914},
        {3, 6.3801618959239835062},   {10, 14.475500686554541238},  {50, 57.116899160119174119},
        {100, 108.83616589840977436}, {99.5, 108.32215747773552928}, {200, 211.02916651055469196}};
    for (auto [nu, j] : ref) {
        Value z = bessel_first_zero(nu);
        EXPECT_NEAR(z.estimate(), j, 1e-11 * j) << nu;
        EXPECT_LE(std::fabs(z.estimate() - j), z.err()) << nu;
        EXPECT_EQ(z.method(), Method::RootFind);
    }
}

TEST(BesselZero, AgreesWithBisectionOracle) {
    for (double nu : {0.0, 0.25, 1.0, 1.75, 3.0, 4.5}) {
        BesselZeroBracket b = bessel_zero_bracket(nu);
        double j = oracle::bessel_zero(nu, nu + 0.5, nu + 2.0 * std::cbrt(nu + 1.0) + 3.0);
        EXPECT_NEAR(bessel_first_zero(nu).estimate(), j, 1e-11) << nu;
        EXPECT_LE(b.lower, j);
        EXPECT_GE(b.upper, j);
    }
}

TEST(BesselZeroProperty, IncreasingInOrder) {
    double prev = 0.0;
    for (double nu = 0.0; nu <= 200.0; nu += 0.5) {
        double j = bessel_first_zero(nu).estimate();
        EXPECT_GT(j, prev) << nu;
        EXPECT_GT(j, nu);
        prev = j;
    }
}

TEST(BesselZero, DomainErrors) {
    EXPECT_THROW(bessel_first_zero(-0.5), Error);
    EXPECT_THROW(bessel_first_zero(200.5), Error);
}

TEST(HurwitzZeta, MatchesReferenceValues) {
    struct R {
        int s;
        double a, y;
    };
    const R ref[] = {{2, 0.5, 4.9348022005446793094},   {3, 1, 1.2020569031595942854},
                     {5, 2.5, 0.013073166646113806807}, {14, 6.5, 4.8473355981922226738e-12},
                     {2, 1000, 0.0010005001666666333334}, {20, 0.25, 1099511627776.0115293}};
    for (const R& r : ref) {
        Value z = hurwitz_zeta(r.s, r.a);
        EXPECT_LT(rel(z.estimate(), r.y), 1e-14) << r.s << " " << r.a;
        EXPECT_LE(std::fabs(z.estimate() - r.y), z.err() + 1e-16 * r.y);
    }
}

TEST(HurwitzZetaProperty, ShiftIdentity) {
    auto gen = oracle::rng(5);
    std::uniform_real_distribution<double> a(0.05, 30.0);
    std::uniform_int_distribution<int> s(2, 30);
    for (int i = 0; i < 300; ++i) {
        double x = a(gen);
        int k = s(gen);
        double lhs = hurwitz_zeta(k, x).estimate();
        double rhs = std::pow(x, -k) + hurwitz_zeta(k, x + 1.0).estimate();
        EXPECT_LT(rel(lhs, rhs), 1e-13) << k << " " << x;
    }
}

TEST(Geometry, SphereAndBall) {
    const double pi = std::numbers::pi;
    EXPECT_NEAR(sphere_area(2).estimate(), 2.0 * pi, 1e-14);
    EXPECT_NEAR(sphere_area(3).estimate(), 4.0 * pi, 1e-14);
    EXPECT_NEAR(ball_volume(3).estimate(), 4.0 * pi / 3.0, 1e-14);
    EXPECT_NEAR(ball_volume(1).estimate(), 2.0, 1e-15);
    for (int d = 1; d <= 300; ++d)
        EXPECT_LT(rel(sphere_area(d).estimate(), d * ball_volume(d).estimate()), 1e-12) << d;
}
