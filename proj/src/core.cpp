#include "hk/core.hpp"

#include <algorithm>
#include <array>
#include <cfloat>
#include <cmath>
#include <utility>

namespace hk {

namespace {

constexpr double kEps = DBL_EPSILON;

// Slack for the rounding of a single elementary operation.
double rounding(double r) { return 2.0 * kEps * std::fabs(r); }

Method worse(Method a, Method b) { return static_cast<int>(a) >= static_cast<int>(b) ? a : b; }

template <class E, std::size_t N>
E parse_enum(std::string_view s, const std::array<std::pair<E, const char*>, N>& table,
             const char* what) {
    for (const auto& [e, name] : table)
        if (s == name) return e;
    throw Error(ErrorKind::Domain, std::string("unknown ") + what + " '" + std::string(s) + "'");
}

template <class E, std::size_t N>
const char* enum_name(E e, const std::array<std::pair<E, const char*>, N>& table) {
    for (const auto& [v, name] : table)
        if (v == e) return name;
    return "?";
}

constexpr std::array<std::pair<Method, const char*>, 5> kMethods{{
    {Method::ExactFormula, "exact_formula"},
    {Method::Series, "series"},
    {Method::RootFind, "root_find"},
    {Method::Quadrature, "quadrature"},
    {Method::PaperTable, "paper_table"},
}};

constexpr std::array<std::pair<Quantity, const char*>, 6> kQuantities{{
    {Quantity::WeylConst, "weyl_const"},
    {Quantity::SobolevConst, "sobolev_const"},
    {Quantity::GNConst, "gn_const"},
    {Quantity::IsoConst, "iso_const"},
    {Quantity::FKConst, "fk_const"},
    {Quantity::PleijelConst, "pleijel_const"},
}};

constexpr std::array<std::pair<Direction, const char*>, 3> kDirections{{
    {Direction::Lower, "lower"},
    {Direction::Upper, "upper"},
    {Direction::Exact, "exact"},
}};

constexpr std::array<std::pair<Hypothesis, const char*>, 2> kHypotheses{{
    {Hypothesis::Unconditional, "unconditional"},
    {Hypothesis::PansuConjecture, "pansu_conjecture"},
}};

constexpr std::array<std::pair<Status, const char*>, 2> kStatuses{{
    {Status::Pass, "pass"},
    {Status::Fail, "fail"},
}};

constexpr std::array<std::pair<Relation, const char*>, 5> kRelations{{
    {Relation::Close, "close"},
    {Relation::Less, "less"},
    {Relation::LessEqual, "less_equal"},
    {Relation::Greater, "greater"},
    {Relation::GreaterEqual, "greater_equal"},
}};

}  // namespace

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Domain: return "domain error";
        case ErrorKind::Range: return "range error";
        case ErrorKind::Convergence: return "convergence error";
        case ErrorKind::Budget: return "budget error";
        case ErrorKind::Overflow: return "coefficient overflow";
        case ErrorKind::Unsupported: return "unsupported";
        case ErrorKind::RouteUnavailable: return "route unavailable";
        case ErrorKind::Mismatch: return "mismatch";
        case ErrorKind::Direction: return "direction error";
        case ErrorKind::Singularity: return "singularity";
    }
    return "error";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

GroupSpec::GroupSpec(int n, int k) : n_(n), k_(k) {
    if (n < 0 || k < 0 || n + k < 1)
        throw Error(ErrorKind::Domain, "group needs n, k >= 0 and n + k >= 1");
}

int homogeneous_dimension(const GroupSpec& g) {
    return g.n() >= 1 ? 2 * g.n() + 2 + g.k() : g.k();
}

const char* to_string(Method m) { return enum_name(m, kMethods); }
Method method_from_string(std::string_view s) { return parse_enum(s, kMethods, "method"); }

Value::Value(double estimate, double err, Method method)
    : estimate_(estimate), err_(err), method_(method) {
    if (!std::isfinite(estimate) || !std::isfinite(err) || err < 0.0)
        throw Error(ErrorKind::Range, "value must be finite with a finite non-negative error");
}

Value Value::constant(double x) { return Value(x, kEps * std::fabs(x)); }

Value Value::exact(double x) { return Value(x, 0.0); }

Value Value::printed(double x, double last_digit_unit) {
    return Value(x, 0.5 * last_digit_unit + kEps * std::fabs(x), Method::PaperTable);
}

double Value::rel_err() const noexcept {
    return estimate_ == 0.0 ? err_ : err_ / std::fabs(estimate_);
}

Value Value::widened(double extra) const { return Value(estimate_, err_ + std::fabs(extra), method_); }

Value operator+(const Value& a, const Value& b) {
    double r = a.estimate() + b.estimate();
    return Value(r, a.err() + b.err() + rounding(r), worse(a.method(), b.method()));
}

Value operator-(const Value& a, const Value& b) { return a + (-b); }

Value operator*(const Value& a, const Value& b) {
    double r = a.estimate() * b.estimate();
    double e = std::fabs(a.estimate()) * b.err() + std::fabs(b.estimate()) * a.err() +
               a.err() * b.err() + rounding(r);
    return Value(r, e, worse(a.method(), b.method()));
}

Value operator/(const Value& a, const Value& b) {
    double bb = std::fabs(b.estimate());
    if (bb <= b.err()) throw Error(ErrorKind::Domain, "division by an interval containing zero");
    double r = a.estimate() / b.estimate();
    double e = (std::fabs(a.estimate()) * b.err() + bb * a.err()) / (bb * (bb - b.err())) + rounding(r);
    return Value(r, e, worse(a.method(), b.method()));
}

Value operator*(double s, const Value& a) { return Value::exact(s) * a; }
Value operator*(const Value& a, double s) { return Value::exact(s) * a; }
Value operator/(const Value& a, double s) { return a / Value::exact(s); }

Value exp(const Value& a) {
    double r = std::exp(a.estimate());
    return Value(r, r * std::expm1(a.err()) + rounding(r), a.method());
}

Value log(const Value& a) {
    if (a.lo() <= 0.0) throw Error(ErrorKind::Domain, "log of a non-positive interval");
    double r = std::log(a.estimate());
    double e = -std::log1p(-a.err() / a.estimate()) + rounding(r) + kEps * kEps;
    return Value(r, e, a.method());
}

Value sqrt(const Value& a) { return pow(a, 0.5); }

Value pow(const Value& a, double p) {
    if (p == 0.0) return Value::exact(1.0).with_method(a.method());
    if (a.estimate() == 0.0 && a.err() == 0.0 && p > 0.0) return Value(0.0, 0.0, a.method());
    if (a.lo() <= 0.0) throw Error(ErrorKind::Domain, "power of a non-positive interval");
    double r = std::pow(a.estimate(), p);
    double up = std::pow(a.hi(), p), dn = std::pow(a.lo(), p);
    double e = std::max(std::fabs(up - r), std::fabs(r - dn)) + 2.0 * rounding(r);
    return Value(r, e, a.method());
}

Value pow(const Value& a, const Value& p) { return exp(p * log(a)); }

const char* to_string(Quantity q) { return enum_name(q, kQuantities); }
const char* to_string(Direction d) { return enum_name(d, kDirections); }
const char* to_string(Hypothesis h) { return enum_name(h, kHypotheses); }
Quantity quantity_from_string(std::string_view s) { return parse_enum(s, kQuantities, "quantity"); }
Direction direction_from_string(std::string_view s) { return parse_enum(s, kDirections, "direction"); }
Hypothesis hypothesis_from_string(std::string_view s) { return parse_enum(s, kHypotheses, "hypothesis"); }

Direction compose_direction(Direction input, bool increasing) {
    if (input == Direction::Exact || increasing) return input;
    return input == Direction::Lower ? Direction::Upper : Direction::Lower;
}

const std::vector<std::string>& operation_names() {
    static const std::vector<std::string> names{
        "homogeneous_dimension", "ln_gamma", "bessel_j", "bessel_first_zero", "hurwitz_zeta",
        "sphere_area", "ball_volume", "cn_series", "cn_hurwitz", "cn_closed_form",
        "weyl_heisenberg", "weyl_euclidean", "weyl_hn_rk", "weyl_product", "sobolev_heisenberg",
        "sobolev_euclidean", "gn_nagy", "gn_nagy_Q", "gn_from_sobolev", "sobolev_lift",
        "sobolev_lift_symmetric", "product_sobolev", "wangzhang_limit", "rep_constant",
        "bathtub_constant", "iso_lower_heisenberg", "pansu_isoperimetric", "iso_euclidean",
        "iso_lift", "bathtub_oracle", "fk_from_sobolev", "fk_from_iso", "fk_euclidean", "fk_best",
        "gamma_from", "gamma_tilde", "gamma_euclidean", "pleijel_lifting_bound",
        "pleijel_iso_bound", "pleijel_pansu", "pansu_quotient_suite", "best_gamma_bound",
        "example_criterion", "large_dimension_scan", "run_campaign", "emit_table", "cli_main",
    };
    return names;
}

bool is_operation_name(std::string_view name) {
    const auto& names = operation_names();
    return std::find(names.begin(), names.end(), name) != names.end();
}

Bound::Bound(Quantity quantity_, Direction direction_, Value value_, Hypothesis hypothesis_,
             std::vector<std::string> route_)
    : quantity(quantity_), direction(direction_), value(value_), hypothesis(hypothesis_),
      route(std::move(route_)) {
    if (route.empty()) throw Error(ErrorKind::Domain, "bound without a route");
    for (const auto& op : route)
        if (!is_operation_name(op)) throw Error(ErrorKind::Domain, "unknown route entry '" + op + "'");
    if (hypothesis == Hypothesis::PansuConjecture) {
        bool cites = std::any_of(route.begin(), route.end(), [](const std::string& op) {
            return op == "pansu_isoperimetric" || op == "pleijel_pansu";
        });
        if (!cites) throw Error(ErrorKind::Domain, "conditional bound must cite its hypothesis in the route");
    }
}

Hypothesis combine(Hypothesis a, Hypothesis b) {
    return (a == Hypothesis::PansuConjecture || b == Hypothesis::PansuConjecture)
               ? Hypothesis::PansuConjecture
               : Hypothesis::Unconditional;
}

std::vector<std::string> extend_route(std::initializer_list<const std::vector<std::string>*> parts,
                                      std::string_view op) {
    std::vector<std::string> out;
    auto push = [&out](const std::string& s) {
        if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(s);
    };
    for (const auto* p : parts)
        for (const auto& s : *p) push(s);
    push(std::string(op));
    return out;
}

const char* to_string(Status s) { return enum_name(s, kStatuses); }
const char* to_string(Relation r) { return enum_name(r, kRelations); }
Status status_from_string(std::string_view s) { return parse_enum(s, kStatuses, "status"); }
Relation relation_from_string(std::string_view s) { return parse_enum(s, kRelations, "relation"); }

VerificationRecord check_close(std::string id, std::string description, const Value& computed,
                               const Value& expected, double tolerance, bool absolute) {
    VerificationRecord r;
    r.claim_id = std::move(id);
    r.description = std::move(description);
    r.computed = computed;
    r.expected = expected;
    r.tolerance = tolerance;
    r.absolute = absolute;
    r.relation = Relation::Close;
    double diff = std::fabs(computed.estimate() - expected.estimate());
    double allowance = tolerance * (absolute ? 1.0 : std::fabs(expected.estimate())) +
                       computed.err() + expected.err();
    r.margin = allowance - diff;
    r.status = diff <= allowance ? Status::Pass : Status::Fail;
    return r;
}

VerificationRecord check_relation(std::string id, std::string description, const Value& lhs,
                                  Relation rel, const Value& rhs) {
    VerificationRecord r;
    r.claim_id = std::move(id);
    r.description = std::move(description);
    r.computed = lhs;
    r.expected = rhs;
    r.relation = rel;
    bool ok = false;
    switch (rel) {
        case Relation::Less:
            r.margin = rhs.lo() - lhs.hi();
            ok = r.margin > 0.0;
            break;
        case Relation::LessEqual:
            r.margin = rhs.lo() - lhs.hi();
            ok = r.margin >= 0.0;
            break;
        case Relation::Greater:
            r.margin = lhs.lo() - rhs.hi();
            ok = r.margin > 0.0;
            break;
        case Relation::GreaterEqual:
            r.margin = lhs.lo() - rhs.hi();
            ok = r.margin >= 0.0;
            break;
        case Relation::Close:
            return check_close(r.claim_id, r.description, lhs, rhs, 0.0);
    }
    r.status = ok ? Status::Pass : Status::Fail;
    return r;
}

VerificationRecord failed_record(std::string id, std::string description, const std::string& why) {
    VerificationRecord r;
    r.claim_id = std::move(id);
    r.description = std::move(description) + " [" + why + "]";
    r.status = Status::Fail;
    return r;
}

void to_json(nlohmann::json& j, const Value& v) {
    j = nlohmann::json{{"estimate", v.estimate()}, {"err", v.err()}, {"method", to_string(v.method())}};
}

void from_json(const nlohmann::json& j, Value& v) {
    v = Value(j.at("estimate").get<double>(), j.at("err").get<double>(),
              method_from_string(j.at("method").get<std::string>()));
}

void to_json(nlohmann::json& j, const GroupSpec& g) { j = nlohmann::json{{"n", g.n()}, {"k", g.k()}}; }

void to_json(nlohmann::json& j, const Bound& b) {
    j = nlohmann::json{{"quantity", to_string(b.quantity)},
                       {"direction", to_string(b.direction)},
                       {"value", b.value},
                       {"hypothesis", to_string(b.hypothesis)},
                       {"route", b.route}};
}

Bound bound_from_json(const nlohmann::json& j) {
    return Bound(quantity_from_string(j.at("quantity").get<std::string>()),
                 direction_from_string(j.at("direction").get<std::string>()),
                 j.at("value").get<Value>(),
                 hypothesis_from_string(j.at("hypothesis").get<std::string>()),
                 j.at("route").get<std::vector<std::string>>());
}

void to_json(nlohmann::json& j, const VerificationRecord& r) {
    j = nlohmann::json{{"claim_id", r.claim_id},
                       {"description", r.description},
                       {"computed", r.computed},
                       {"expected", r.expected},
                       {"tolerance", r.tolerance},
                       {"absolute", r.absolute},
                       {"relation", to_string(r.relation)},
                       {"status", to_string(r.status)},
                       {"margin", r.margin}};
}

void from_json(const nlohmann::json& j, VerificationRecord& r) {
    r.claim_id = j.at("claim_id").get<std::string>();
    r.description = j.at("description").get<std::string>();
    r.computed = j.at("computed").get<Value>();
    r.expected = j.at("expected").get<Value>();
    r.tolerance = j.at("tolerance").get<double>();
    r.absolute = j.at("absolute").get<bool>();
    r.relation = relation_from_string(j.at("relation").get<std::string>());
    r.status = status_from_string(j.at("status").get<std::string>());
    r.margin = j.at("margin").get<double>();
}

}  // namespace hk
