#include <gtest/gtest.h>

#include <cfloat>
#include <cmath>

#include "hk/core.hpp"
#include "oracle.hpp"

using namespace hk;

TEST(GroupSpec, HomogeneousDimension) {
    EXPECT_EQ(homogeneous_dimension(GroupSpec(1, 0)), 4);
    EXPECT_EQ(homogeneous_dimension(GroupSpec(2, 3)), 9);
    EXPECT_EQ(homogeneous_dimension(GroupSpec(0, 5)), 5);
    EXPECT_THROW(GroupSpec(0, 0), Error);
    EXPECT_THROW(GroupSpec(-1, 2), Error);
}

TEST(Value, RejectsNonFinite) {
    EXPECT_THROW(Value(NAN, 0.0), Error);
    EXPECT_THROW(Value(1.0, INFINITY), Error);
    EXPECT_THROW(Value(1.0, -1.0), Error);
}

TEST(Value, PrintedCarriesHalfUnit) {
    Value v = Value::printed(3.8317, 1e-4);
    EXPECT_NEAR(v.err(), 5e-5, 1e-15);
    EXPECT_EQ(v.method(), Method::PaperTable);
}

TEST(Value, MethodOfCombinationIsTheWorse) {
    Value a(1.0, 0.0, Method::Series), b(2.0, 0.0, Method::RootFind);
    EXPECT_EQ((a + b).method(), Method::RootFind);
    EXPECT_EQ((a * Value::exact(3.0)).method(), Method::Series);
}

// Interval containment: for operands drawn inside their intervals, the exact
// result (computed in long double) lies inside the propagated interval.
TEST(ValueProperty, ArithmeticContainsSampledResults) {
    auto gen = oracle::rng(1);
    std::uniform_real_distribution<double> mag(0.1, 10.0), relerr(0.0, 1e-3), t(-1.0, 1.0);
    for (int i = 0; i < 2000; ++i) {
        double x = mag(gen), y = mag(gen);
        Value a(x, x * relerr(gen)), b(y, y * relerr(gen));
        long double xs = x + t(gen) * a.err(), ys = y + t(gen) * b.err();
        auto inside = [](const Value& v, long double r) { return v.lo() <= r && r <= v.hi(); };
        EXPECT_TRUE(inside(a + b, xs + ys));
        EXPECT_TRUE(inside(a - b, xs - ys));
        EXPECT_TRUE(inside(a * b, xs * ys));
        EXPECT_TRUE(inside(a / b, xs / ys));
        EXPECT_TRUE(inside(exp(a), std::exp(xs)));
        EXPECT_TRUE(inside(log(a), std::log(xs)));
        EXPECT_TRUE(inside(sqrt(a), std::sqrt(xs)));
        EXPECT_TRUE(inside(pow(a, 1.7), std::pow(xs, 1.7L)));
    }
}

TEST(Value, DivisionByUncertainZero) {
    EXPECT_THROW(Value::exact(1.0) / Value(0.0, 1e-3), Error);
    EXPECT_THROW(log(Value(0.5, 1.0)), Error);
}

TEST(Enums, RoundTripStrings) {
    for (Method m : {Method::ExactFormula, Method::Series, Method::RootFind, Method::Quadrature, Method::PaperTable})
        EXPECT_EQ(method_from_string(to_string(m)), m);
    for (Quantity q : {Quantity::WeylConst, Quantity::SobolevConst, Quantity::GNConst, Quantity::IsoConst,
                       Quantity::FKConst, Quantity::PleijelConst})
        EXPECT_EQ(quantity_from_string(to_string(q)), q);
    EXPECT_STREQ(to_string(Hypothesis::PansuConjecture), "pansu_conjecture");
    EXPECT_STREQ(to_string(Relation::LessEqual), "less_equal");
    EXPECT_THROW(method_from_string("nonsense"), Error);
}

TEST(Bound, RouteMustNameKnownOperations) {
    EXPECT_THROW(Bound(Quantity::IsoConst, Direction::Lower, Value::exact(1), Hypothesis::Unconditional, {}), Error);
    EXPECT_THROW(Bound(Quantity::IsoConst, Direction::Lower, Value::exact(1), Hypothesis::Unconditional, {"nope"}),
                 Error);
    EXPECT_NO_THROW(
        Bound(Quantity::IsoConst, Direction::Lower, Value::exact(1), Hypothesis::Unconditional, {"iso_lift"}));
}

TEST(Bound, ConditionalBoundCitesHypothesis) {
    EXPECT_THROW(Bound(Quantity::IsoConst, Direction::Exact, Value::exact(1), Hypothesis::PansuConjecture,
                       {"iso_lift"}),
                 Error);
    Bound b(Quantity::IsoConst, Direction::Exact, Value::exact(1), Hypothesis::PansuConjecture,
            {"pansu_isoperimetric"});
    EXPECT_TRUE(b.conditional());
}

TEST(Bound, ExtendRouteDeduplicates) {
    std::vector<std::string> a{"ln_gamma", "bessel_j"}, b{"bessel_j", "hurwitz_zeta"};
    auto r = extend_route({&a, &b}, "ln_gamma");
    EXPECT_EQ(r, (std::vector<std::string>{"ln_gamma", "bessel_j", "hurwitz_zeta"}));
}

TEST(Bound, ComposeDirection) {
    EXPECT_EQ(compose_direction(Direction::Lower, true), Direction::Lower);
    EXPECT_EQ(compose_direction(Direction::Lower, false), Direction::Upper);
    EXPECT_EQ(compose_direction(Direction::Exact, false), Direction::Exact);
    EXPECT_EQ(combine(Hypothesis::Unconditional, Hypothesis::PansuConjecture), Hypothesis::PansuConjecture);
}

TEST(Records, CloseUsesToleranceAndErrors) {
    auto r = check_close("a", "d", Value(1.0001, 0.0), Value::exact(1.0), 1e-4);
    EXPECT_TRUE(r.passed());
    r = check_close("a", "d", Value(1.0002, 0.0), Value::exact(1.0), 1e-4);
    EXPECT_FALSE(r.passed());
    r = check_close("a", "d", Value(1.0002, 1e-4), Value::exact(1.0), 1e-4);
    EXPECT_TRUE(r.passed());
    r = check_close("a", "d", Value(0.1, 0.0), Value::exact(0.0), 0.2, true);
    EXPECT_TRUE(r.passed());
}

TEST(Records, RelationsAccountForErrors) {
    EXPECT_TRUE(check_relation("a", "", Value(1.0, 0.1), Relation::Less, Value(1.5, 0.1)).passed());
    EXPECT_FALSE(check_relation("a", "", Value(1.0, 0.3), Relation::Less, Value(1.5, 0.3)).passed());
    EXPECT_TRUE(check_relation("a", "", Value::exact(2.0), Relation::GreaterEqual, Value::exact(2.0)).passed());
    EXPECT_FALSE(check_relation("a", "", Value::exact(2.0), Relation::Greater, Value::exact(2.0)).passed());
    auto r = check_relation("a", "", Value::exact(1.0), Relation::Less, Value::exact(3.0));
    EXPECT_DOUBLE_EQ(r.margin, 2.0);
}

TEST(Json, ValueAndRecordRoundTrip) {
    Value v(1.25, 3e-9, Method::Quadrature);
    nlohmann::json j = v;
    Value w = j.get<Value>();
    EXPECT_EQ(w.estimate(), v.estimate());
    EXPECT_EQ(w.err(), v.err());
    EXPECT_EQ(w.method(), v.method());

    auto r = check_relation("x.y.1", "desc", Value(0.5, 1e-3), Relation::LessEqual, Value::exact(1.0));
    nlohmann::json jr = r;
    auto back = jr.get<VerificationRecord>();
    EXPECT_EQ(back.claim_id, r.claim_id);
    EXPECT_EQ(back.relation, r.relation);
    EXPECT_EQ(back.status, r.status);
    EXPECT_EQ(back.margin, r.margin);
    EXPECT_EQ(nlohmann::json(back).dump(), jr.dump());
}

TEST(Json, BoundRoundTrip) {
    Bound b(Quantity::PleijelConst, Direction::Upper, Value(0.7, 1e-10), Hypothesis::Unconditional,
            {"pleijel_iso_bound", "best_gamma_bound"});
    nlohmann::json j = b;
    Bound c = bound_from_json(j);
    EXPECT_EQ(c.route, b.route);
    EXPECT_EQ(c.direction, b.direction);
    EXPECT_EQ(c.value.estimate(), b.value.estimate());
}
