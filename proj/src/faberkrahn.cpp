#include "hk/faberkrahn.hpp"

#include <algorithm>
#include <numbers>

#include "hk/functional.hpp"
#include "hk/specfun.hpp"

namespace hk {

const char* to_string(FKRouteName r) {
    switch (r) {
        case FKRouteName::FromSobolevJL: return "FromSobolevJL";
        case FKRouteName::FromSobolevLift: return "FromSobolevLift";
        case FKRouteName::FromIsoUnconditional: return "FromIsoUnconditional";
        case FKRouteName::FromIsoPansu: return "FromIsoPansu";
        case FKRouteName::EuclideanExact: return "EuclideanExact";
    }
    return "?";
}

Bound fk_from_sobolev(const Bound& c_sob) {
    if (c_sob.quantity != Quantity::SobolevConst)
        throw Error(ErrorKind::Mismatch, "fk_from_sobolev needs a Sobolev constant");
    if (c_sob.direction == Direction::Upper)
        throw Error(ErrorKind::Direction, "fk_from_sobolev needs a lower or exact Sobolev bound");
    std::vector<std::string> none;
    return Bound(Quantity::FKConst, Direction::Lower, c_sob.value, c_sob.hypothesis,
                 extend_route({&c_sob.route, &none}, "fk_from_sobolev"));
}

Bound fk_from_iso(const IsoValue& iso, int d) {
    if (iso.bound.quantity != Quantity::IsoConst)
        throw Error(ErrorKind::Mismatch, "fk_from_iso needs an isoperimetric constant");
    if (iso.bound.direction == Direction::Upper)
        throw Error(ErrorKind::Direction, "fk_from_iso needs a lower or exact isoperimetric bound");
    if (d < 2) throw Error(ErrorKind::Domain, "fk_from_iso needs dimension >= 2");
    if (homogeneous_dimension(iso.group) != d)
        throw Error(ErrorKind::Mismatch, "fk_from_iso: dimension " + std::to_string(d) +
                                             " does not match the group of the isoperimetric bound");
    Value j = bessel_first_zero(0.5 * (d - 2));
    Value r = iso.bound.value * j / Value::exact(d);
    std::vector<std::string> bz{"bessel_first_zero"};
    return Bound(Quantity::FKConst, Direction::Lower, r * r, iso.bound.hypothesis,
                 extend_route({&iso.bound.route, &bz}, "fk_from_iso"));
}

IsoValue iso_euclidean_bound(int d) {
    return {GroupSpec(0, d), Bound(Quantity::IsoConst, Direction::Exact, iso_euclidean(d),
                                   Hypothesis::Unconditional, {"iso_euclidean"})};
}

Value fk_euclidean(int d) {
    if (d < 1 || d > 300) throw Error(ErrorKind::Domain, "fk_euclidean defined for 1 <= d <= 300");
    // d = 1: J_{-1/2}(x) is proportional to cos(x)/sqrt(x), first zero π/2, and ω_1 = 2.
    if (d == 1) {
        Value pi = Value::constant(std::numbers::pi);
        return pi * pi;
    }
    Value j = bessel_first_zero(0.5 * (d - 2));
    return exp(Value::exact(2.0 / d) * log(ball_volume(d))) * j * j;
}

namespace {

std::vector<std::string> union_route(const std::vector<FKRoute>& cands, std::string_view op) {
    std::vector<std::string> all;
    for (const auto& c : cands)
        for (const auto& s : c.bound.route)
            if (std::find(all.begin(), all.end(), s) == all.end()) all.push_back(s);
    return extend_route({&all}, op);
}

}  // namespace

FKSelection fk_best(const GroupSpec& g, Hypothesis hypothesis) {
    if (g.n() == 0) {
        FKRoute e{FKRouteName::EuclideanExact, Bound(Quantity::FKConst, Direction::Exact, fk_euclidean(g.k()),
                                                    Hypothesis::Unconditional, {"fk_euclidean"})};
        return {g, e, {e}, union_route({e}, "fk_best")};
    }
    int d = homogeneous_dimension(g);
    std::vector<FKRoute> cands;
    if (g.k() == 0) {
        Bound jl(Quantity::SobolevConst, Direction::Exact, sobolev_heisenberg(g.n()), Hypothesis::Unconditional,
                 {"sobolev_heisenberg"});
        cands.push_back({FKRouteName::FromSobolevJL, fk_from_sobolev(jl)});
    } else if (g.k() != 2) {
        cands.push_back({FKRouteName::FromSobolevLift, fk_from_sobolev(sobolev_lift_best(g))});
    }
    cands.push_back({FKRouteName::FromIsoUnconditional, fk_from_iso(iso_lift(g, iso_lower_heisenberg(g.n())), d)});
    if (hypothesis == Hypothesis::PansuConjecture)
        cands.push_back({FKRouteName::FromIsoPansu, fk_from_iso(iso_lift(g, pansu_isoperimetric(g.n())), d)});

    std::size_t best = 0;
    for (std::size_t i = 1; i < cands.size(); ++i)
        if (cands[i].bound.value.estimate() > cands[best].bound.value.estimate()) best = i;
    return {g, cands[best], cands, union_route(cands, "fk_best")};
}

}  // namespace hk
