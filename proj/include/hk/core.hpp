#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace hk {

enum class ErrorKind {
    Domain,
    Range,
    Convergence,
    Budget,
    Overflow,
    Unsupported,
    RouteUnavailable,
    Mismatch,
    Direction,
    Singularity,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// ℍn × ℝk. n = 0 is the purely Euclidean group ℝk.
class GroupSpec {
public:
    GroupSpec(int n, int k);

    int n() const noexcept { return n_; }
    int k() const noexcept { return k_; }

    bool operator==(const GroupSpec&) const = default;

private:
    int n_;
    int k_;
};

int homogeneous_dimension(const GroupSpec& g);

enum class Method { ExactFormula, Series, RootFind, Quadrature, PaperTable };

const char* to_string(Method m);
Method method_from_string(std::string_view s);

// Estimate with an absolute error bound. Arithmetic propagates the bound so
// that the result interval contains the image of the operand intervals, plus
// a few ulps for the rounding of the operation itself.
class Value {
public:
    Value() = default;
    Value(double estimate, double err, Method method = Method::ExactFormula);

    // A double that is only known to within its own rounding.
    static Value constant(double x);
    // A double that is exactly representable (small integers, dyadic rationals).
    static Value exact(double x);
    // A printed decimal carrying half a unit in its last printed digit.
    static Value printed(double x, double last_digit_unit);

    double estimate() const noexcept { return estimate_; }
    double err() const noexcept { return err_; }
    Method method() const noexcept { return method_; }

    double lo() const noexcept { return estimate_ - err_; }
    double hi() const noexcept { return estimate_ + err_; }
    double rel_err() const noexcept;

    Value with_method(Method m) const { return Value(estimate_, err_, m); }
    Value widened(double extra) const;

    Value operator-() const { return Value(-estimate_, err_, method_); }

private:
    double estimate_ = 0.0;
    double err_ = 0.0;
    Method method_ = Method::ExactFormula;
};

Value operator+(const Value& a, const Value& b);
Value operator-(const Value& a, const Value& b);
Value operator*(const Value& a, const Value& b);
Value operator/(const Value& a, const Value& b);
Value operator*(double s, const Value& a);
Value operator*(const Value& a, double s);
Value operator/(const Value& a, double s);

Value exp(const Value& a);
Value log(const Value& a);
Value sqrt(const Value& a);
Value pow(const Value& a, double p);
Value pow(const Value& a, const Value& p);

enum class Quantity { WeylConst, SobolevConst, GNConst, IsoConst, FKConst, PleijelConst };
enum class Direction { Lower, Upper, Exact };
enum class Hypothesis { Unconditional, PansuConjecture };

const char* to_string(Quantity q);
const char* to_string(Direction d);
const char* to_string(Hypothesis h);
Quantity quantity_from_string(std::string_view s);
Direction direction_from_string(std::string_view s);
Hypothesis hypothesis_from_string(std::string_view s);

// Direction of f(x) given a bound on x and the monotonicity of f.
Direction compose_direction(Direction input, bool increasing);

// True if `name` is one of the library's public operation names.
bool is_operation_name(std::string_view name);
const std::vector<std::string>& operation_names();

struct Bound {
    Quantity quantity;
    Direction direction;
    Value value;
    Hypothesis hypothesis;
    std::vector<std::string> route;

    Bound(Quantity quantity, Direction direction, Value value, Hypothesis hypothesis,
          std::vector<std::string> route);

    bool conditional() const noexcept { return hypothesis == Hypothesis::PansuConjecture; }
};

// Weaker-of-two hypotheses: a result using any conditional input is conditional.
Hypothesis combine(Hypothesis a, Hypothesis b);

// Concatenate routes and append `op`, dropping duplicates while keeping first occurrence.
std::vector<std::string> extend_route(std::initializer_list<const std::vector<std::string>*> parts,
                                      std::string_view op);

enum class Status { Pass, Fail };
enum class Relation { Close, Less, LessEqual, Greater, GreaterEqual };

const char* to_string(Status s);
const char* to_string(Relation r);
Status status_from_string(std::string_view s);
Relation relation_from_string(std::string_view s);

struct VerificationRecord {
    std::string claim_id;
    std::string description;
    Value computed;
    Value expected;
    double tolerance = 0.0;
    bool absolute = false;
    Relation relation = Relation::Close;
    Status status = Status::Fail;
    double margin = 0.0;

    bool passed() const noexcept { return status == Status::Pass; }
};

// |c - e| <= tol*|e| + c.err + e.err   (tol absolute when `absolute`)
VerificationRecord check_close(std::string id, std::string description, const Value& computed,
                               const Value& expected, double tolerance, bool absolute = false);

// One-sided claims. The inequality must hold after moving both operands by
// their error bounds in the unfavourable direction.
VerificationRecord check_relation(std::string id, std::string description, const Value& lhs,
                                  Relation rel, const Value& rhs);

// A record for a claim whose evaluation raised an error.
VerificationRecord failed_record(std::string id, std::string description, const std::string& why);

void to_json(nlohmann::json& j, const Value& v);
void from_json(const nlohmann::json& j, Value& v);
void to_json(nlohmann::json& j, const GroupSpec& g);
void to_json(nlohmann::json& j, const Bound& b);
Bound bound_from_json(const nlohmann::json& j);
void to_json(nlohmann::json& j, const VerificationRecord& r);
void from_json(const nlohmann::json& j, VerificationRecord& r);

}  // namespace hk
