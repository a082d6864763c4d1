#pragma once

#include <vector>

#include "hk/core.hpp"
#include "hk/isoperimetry.hpp"

namespace hk {

enum class FKRouteName { FromSobolevJL, FromSobolevLift, FromIsoUnconditional, FromIsoPansu, EuclideanExact };

const char* to_string(FKRouteName r);

struct FKRoute {
    FKRouteName name;
    Bound bound;
};

struct FKSelection {
    GroupSpec group;
    FKRoute best;
    std::vector<FKRoute> candidates;
    // Every operation used by any candidate, then fk_best.
    std::vector<std::string> route;
};

Bound fk_from_sobolev(const Bound& c_sob);

// d must be the homogeneous dimension of iso.group.
Bound fk_from_iso(const IsoValue& iso, int d);

// I(R^d) wrapped as an exact bound for the group (0, d).
IsoValue iso_euclidean_bound(int d);

Value fk_euclidean(int d);
FKSelection fk_best(const GroupSpec& g, Hypothesis hypothesis);

}  // namespace hk
