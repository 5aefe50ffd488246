#pragma once

#include <map>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace convexlab {

inline constexpr double kExactTolerance = 1e-9;

// max(1e-3·|rhs|, 1e-6)
double quadrature_tolerance(double rhs);

// One verified inequality lhs ≥ rhs. `error` holds the error-kind name when the
// check raised instead of producing numbers; such rows never pass.
struct InequalityRecord {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string body;
  std::string body2;
  std::string quadrature;
  int dim = 0;
  std::vector<std::string> flags;
  std::map<std::string, double> extras;
  std::string error;
  std::string message;

  bool has_flag(const std::string& flag) const;
  // |gap| ≤ tolerance
  bool at_boundary() const { return error.empty() && std::abs(gap) <= tolerance; }
  // gap > tolerance
  bool strict() const { return error.empty() && gap > tolerance; }
};

// gap = lhs − rhs, pass ⇔ gap ≥ −tol, flag "equality-boundary" when
// |gap| ≤ tol. Non-finite inputs raise numeric-domain.
InequalityRecord make_record(std::string name, double lhs, double rhs, double tol, std::string body,
                             std::string body2, std::string quadrature, int dim);

InequalityRecord error_record(std::string name, std::string error, std::string message, std::string body,
                              std::string body2, int dim);

// lower = ∫ln(h_K/h_L) d̄v_L, middle = ln(V₁/Vol L), upper = ∫ln(h_K/h_L) d̄v₁.
struct ChainRecord {
  double lower = 0.0;
  double middle = 0.0;
  double upper = 0.0;
  double tolerance = 0.0;
  bool lower_pass = false;  // lower ≤ middle
  bool upper_pass = false;  // middle ≤ upper
  std::string body;
  std::string body2;
  std::string quadrature;
  int dim = 0;

  bool pass() const { return lower_pass && upper_pass; }
  // The two inequalities as records: "chain-lower" (middle ≥ lower) and
  // "chain-upper" (upper ≥ middle).
  std::vector<InequalityRecord> records() const;
};

nlohmann::json to_json(const InequalityRecord& r);
InequalityRecord record_from_json(const nlohmann::json& j);
nlohmann::json to_json(const ChainRecord& r);

}  // namespace convexlab
