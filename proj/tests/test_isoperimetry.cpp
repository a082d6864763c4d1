#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "hk/isoperimetry.hpp"
#include "oracle.hpp"

using namespace hk;
using oracle::rel;

namespace {
const double pi = std::numbers::pi;
}

TEST(RepConstant, SmallN) {
    EXPECT_LT(rel(rep_constant(1).estimate(), 1.0 / (4.0 * pi)), 1e-14);
    EXPECT_LT(rel(rep_constant(2).estimate(), 1.0 / (pi * pi * pi)), 1e-14);
    EXPECT_LT(rel(rep_constant(3).estimate(), 3.0 / (4.0 * pi * pi * pi)), 1e-14);
    EXPECT_THROW(rep_constant(51), Error);
}

TEST(Bathtub, MatchesReference) {
    const std::pair<int, double> ref[] = {
        {1, 4.0606337544167343689}, {2, 6.2726381273650564119}, {3, 6.8116232767417712702}, {7, 0.95444566020572223674}};
    for (auto [n, y] : ref) EXPECT_LT(rel(bathtub_constant(n).estimate(), y), 1e-13) << n;
    EXPECT_LT(rel(bathtub_constant(1).estimate(), bathtub_constant_n1().estimate()), 1e-12);
}

TEST(Bathtub, OracleAgreesWithFormula) {
    for (int n = 1; n <= 2; ++n) {
        Value q = bathtub_oracle(n, 4096);
        EXPECT_EQ(q.method(), Method::Quadrature);
        EXPECT_LT(rel(q.estimate(), bathtub_constant(n).estimate()), 1e-6) << n;
    }
    EXPECT_THROW(bathtub_oracle(3, 4096), Error);
    EXPECT_THROW(bathtub_oracle(1, 100), Error);
}

TEST(Bathtub, SerialAndParallelOracleIdentical) {
    Value s = bathtub_oracle(2, 256, kernels::Exec::Serial);
    Value p = bathtub_oracle(2, 256, kernels::Exec::Parallel);
    EXPECT_EQ(s.estimate(), p.estimate());
    EXPECT_EQ(s.err(), p.err());
}

TEST(Bathtub, BetaIdentity) {
    double expected = std::sqrt(pi) * std::tgamma(7.0 / 6.0) / std::tgamma(5.0 / 3.0);
    EXPECT_NEAR(sin_power_integral(4.0 / 3.0, 1024), expected, 1e-13);
    EXPECT_NEAR(sin_power_integral(4.0 / 3.0, 1024), 1.8214879859156862089, 1e-13);
    EXPECT_NEAR(sin_power_integral(2.0, 16), pi / 2.0, 1e-14);
}

TEST(Iso, HeisenbergLowerBound) {
    IsoValue v = iso_lower_heisenberg(1);
    EXPECT_EQ(v.bound.direction, Direction::Lower);
    EXPECT_EQ(v.bound.hypothesis, Hypothesis::Unconditional);
    EXPECT_LT(rel(v.bound.value.estimate(), 8.0 * std::pow(3.0, -9.0 / 8.0) * std::pow(pi, 0.25)), 1e-13);
    EXPECT_LT(rel(iso_lower_heisenberg(2).bound.value.estimate(), 4.9430998649565983284), 1e-13);
}

TEST(Iso, PansuValues) {
    IsoValue p = pansu_isoperimetric(1);
    EXPECT_TRUE(p.bound.conditional());
    EXPECT_LT(rel(p.bound.value.estimate(), std::pow(2.0, 2.5) * std::pow(3.0, -0.75) * std::sqrt(pi)), 1e-14);
    EXPECT_LT(rel(pansu_isoperimetric(2).bound.value.estimate(), 7.0084908498248766158), 1e-13);
    EXPECT_LT(rel(pansu_isoperimetric(5).bound.value.estimate(), 12.142093187275138097), 1e-13);
}

TEST(IsoProperty, LowerBoundBelowPansu) {
    for (int n = 1; n <= 10; ++n)
        EXPECT_LT(iso_lower_heisenberg(n).bound.value.estimate(), pansu_isoperimetric(n).bound.value.estimate()) << n;
}

TEST(Iso, EuclideanValues) {
    EXPECT_EQ(iso_euclidean(1).estimate(), 2.0);
    EXPECT_LT(rel(iso_euclidean(2).estimate(), 2.0 * std::sqrt(pi)), 1e-14);
    EXPECT_LT(rel(iso_euclidean(3).estimate(), std::pow(3.0, 2.0 / 3.0) * std::cbrt(4.0 * pi)), 1e-14);
    for (int d = 2; d <= 300; ++d) {
        double alt = std::exp((d - 1.0) / d * std::log(d) +
                              (std::log(2.0) + 0.5 * d * std::log(pi) - std::lgamma(0.5 * d)) / d);
        EXPECT_LT(rel(iso_euclidean(d).estimate(), alt), 1e-13) << d;
    }
}

TEST(IsoLift, IdentityAndEquality) {
    IsoValue base = iso_lower_heisenberg(1);
    IsoValue same = iso_lift(GroupSpec(1, 0), base);
    EXPECT_EQ(same.bound.value.estimate(), base.bound.value.estimate());
    // If I(H_n) were I(R^{2n+2}) the lift would be I(R^{2n+2+k}).
    for (int n = 1; n <= 4; ++n)
        for (int k = 1; k <= 6; ++k) {
            IsoValue fake{GroupSpec(n, 0), Bound(Quantity::IsoConst, Direction::Lower, iso_euclidean(2 * n + 2),
                                                 Hypothesis::Unconditional, {"iso_euclidean"})};
            EXPECT_LT(rel(iso_lift(GroupSpec(n, k), fake).bound.value.estimate(),
                          iso_euclidean(2 * n + 2 + k).estimate()),
                      1e-13);
        }
}

TEST(IsoLift, InheritsHypothesis) {
    IsoValue l = iso_lift(GroupSpec(2, 3), pansu_isoperimetric(2));
    EXPECT_EQ(l.bound.hypothesis, Hypothesis::PansuConjecture);
    EXPECT_EQ(l.bound.direction, Direction::Lower);
    EXPECT_EQ(l.group, GroupSpec(2, 3));
}

TEST(IsoLift, MismatchErrors) {
    try {
        iso_lift(GroupSpec(2, 1), iso_lower_heisenberg(1));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::Mismatch);
    }
}

TEST(IsoLiftProperty, MonotoneInInput) {
    auto gen = oracle::rng(7);
    std::uniform_real_distribution<double> u(0.5, 10.0);
    for (int i = 0; i < 200; ++i) {
        double a = u(gen), b = u(gen);
        if (a > b) std::swap(a, b);
        auto mk = [](double x) {
            return IsoValue{GroupSpec(1, 0), Bound(Quantity::IsoConst, Direction::Lower, Value::exact(x),
                                                   Hypothesis::Unconditional, {"iso_lower_heisenberg"})};
        };
        GroupSpec g(1, 1 + i % 7);
        EXPECT_LE(iso_lift(g, mk(a)).bound.value.estimate(), iso_lift(g, mk(b)).bound.value.estimate());
    }
}
