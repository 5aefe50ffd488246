#include "convexlab/records.hpp"

#include <algorithm>
#include <cmath>

#include "convexlab/errors.hpp"

namespace convexlab {

double quadrature_tolerance(double rhs) { return std::max(1e-3 * std::abs(rhs), 1e-6); }

bool InequalityRecord::has_flag(const std::string& flag) const {
  return std::find(flags.begin(), flags.end(), flag) != flags.end();
}

InequalityRecord make_record(std::string name, double lhs, double rhs, double tol, std::string body,
                             std::string body2, std::string quadrature, int dim) {
  if (!std::isfinite(lhs) || !std::isfinite(rhs) || !std::isfinite(tol)) {
    fail(ErrorKind::numeric_domain, name + ": non-finite inequality side");
  }
  InequalityRecord r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.gap = lhs - rhs;
  r.tolerance = tol;
  r.pass = r.gap >= -tol;
  r.body = std::move(body);
  r.body2 = std::move(body2);
  r.quadrature = std::move(quadrature);
  r.dim = dim;
  if (std::abs(r.gap) <= tol) r.flags.push_back("equality-boundary");
  return r;
}

InequalityRecord error_record(std::string name, std::string error, std::string message, std::string body,
                              std::string body2, int dim) {
  InequalityRecord r;
  r.name = std::move(name);
  r.error = std::move(error);
  r.body = std::move(body);
  r.body2 = std::move(body2);
  r.dim = dim;
  r.pass = false;
  r.flags.push_back("error");
  r.message = std::move(message);
  return r;
}

std::vector<InequalityRecord> ChainRecord::records() const {
  auto lo = make_record("chain-lower", middle, lower, tolerance, body, body2, quadrature, dim);
  auto up = make_record("chain-upper", upper, middle, tolerance, body, body2, quadrature, dim);
  return {lo, up};
}

nlohmann::json to_json(const InequalityRecord& r) {
  nlohmann::json j;
  j["name"] = r.name;
  j["lhs"] = r.lhs;
  j["rhs"] = r.rhs;
  j["gap"] = r.gap;
  j["tol"] = r.tolerance;
  j["pass"] = r.pass;
  j["body"] = r.body;
  j["body2"] = r.body2;
  j["quadrature"] = r.quadrature;
  j["dim"] = r.dim;
  j["flags"] = r.flags;
  j["extras"] = r.extras;
  if (!r.error.empty()) j["error"] = r.error;
  if (!r.message.empty()) j["message"] = r.message;
  return j;
}

InequalityRecord record_from_json(const nlohmann::json& j) {
  InequalityRecord r;
  r.name = j.at("name").get<std::string>();
  r.lhs = j.at("lhs").get<double>();
  r.rhs = j.at("rhs").get<double>();
  r.gap = j.at("gap").get<double>();
  r.tolerance = j.at("tol").get<double>();
  r.pass = j.at("pass").get<bool>();
  r.body = j.at("body").get<std::string>();
  r.body2 = j.at("body2").get<std::string>();
  r.quadrature = j.at("quadrature").get<std::string>();
  r.dim = j.at("dim").get<int>();
  r.flags = j.at("flags").get<std::vector<std::string>>();
  r.extras = j.at("extras").get<std::map<std::string, double>>();
  if (j.contains("error")) r.error = j.at("error").get<std::string>();
  if (j.contains("message")) r.message = j.at("message").get<std::string>();
  return r;
}

nlohmann::json to_json(const ChainRecord& r) {
  return {{"lower", r.lower},         {"middle", r.middle},         {"upper", r.upper},
          {"tol", r.tolerance},       {"lower_pass", r.lower_pass}, {"upper_pass", r.upper_pass},
          {"body", r.body},           {"body2", r.body2},           {"quadrature", r.quadrature},
          {"dim", r.dim}};
}

}  // namespace convexlab
