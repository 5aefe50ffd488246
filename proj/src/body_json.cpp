#include "convexlab/body_json.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "convexlab/errors.hpp"

namespace convexlab {
namespace {

using nlohmann::json;

const json& field(const json& spec, const char* key) {
  auto it = spec.find(key);
  if (it == spec.end()) fail(ErrorKind::parse, std::string("missing field '") + key + "'");
  return *it;
}

double real(const json& v, const char* what) {
  if (!v.is_number()) fail(ErrorKind::parse, std::string(what) + " must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) fail(ErrorKind::parse, std::string(what) + " must be finite");
  return x;
}

Vec vector_of(const json& v, int n, const char* what) {
  if (!v.is_array()) fail(ErrorKind::parse, std::string(what) + " must be an array");
  if (static_cast<int>(v.size()) != n) fail(ErrorKind::parse, std::string(what) + " has the wrong length");
  Vec out(n);
  for (int i = 0; i < n; ++i) out[i] = real(v[static_cast<std::size_t>(i)], what);
  return out;
}

Mat matrix_of(const json& v, int n, const char* what) {
  if (!v.is_array() || static_cast<int>(v.size()) != n) {
    fail(ErrorKind::parse, std::string(what) + " must have n rows");
  }
  Mat out(n, n);
  for (int i = 0; i < n; ++i) out.row(i) = vector_of(v[static_cast<std::size_t>(i)], n, what).transpose();
  return out;
}

int dimension_of(const json& spec, std::optional<int> inferred) {
  int n = 0;
  if (spec.contains("dim")) {
    const json& d = spec["dim"];
    if (!d.is_number_integer()) fail(ErrorKind::parse, "dim must be an integer");
    const auto value = d.get<long long>();
    if (value < 2 || value > kMaxSpecDim) fail(ErrorKind::invalid_argument, "dim must be in [2, 10]");
    n = static_cast<int>(value);
    if (inferred && *inferred != n) fail(ErrorKind::parse, "dim disagrees with the data");
  } else if (inferred) {
    n = *inferred;
    if (n < 2 || n > kMaxSpecDim) fail(ErrorKind::invalid_argument, "dim must be in [2, 10]");
  } else {
    fail(ErrorKind::parse, "missing field 'dim'");
  }
  return n;
}

ConvexBody named_body(const std::string& name, int n) {
  if (name == "cube") return cube(n);
  if (name == "cross") return cross_polytope(n);
  if (name == "simplex") return regular_simplex(n);
  if (name == "ball") return ball(n);
  fail(ErrorKind::parse, "unknown named body '" + name + "'");
}

}  // namespace

ConvexBody body_from_json(const json& spec) {
  if (!spec.is_object()) fail(ErrorKind::parse, "body spec must be a JSON object");
  const json& type_field = field(spec, "type");
  if (!type_field.is_string()) fail(ErrorKind::parse, "type must be a string");
  const std::string type = type_field.get<std::string>();

  ConvexBody body = [&]() -> ConvexBody {
    if (type == "polytope-v") {
      const json& verts = field(spec, "vertices");
      if (!verts.is_array() || verts.empty()) fail(ErrorKind::parse, "vertices must be a non-empty array");
      if (verts.size() > kMaxSpecVertices) fail(ErrorKind::invalid_argument, "too many vertices");
      if (!verts[0].is_array()) fail(ErrorKind::parse, "vertices must be arrays of numbers");
      const int n = dimension_of(spec, static_cast<int>(verts[0].size()));
      std::vector<Vec> pts;
      pts.reserve(verts.size());
      for (const auto& v : verts) pts.push_back(vector_of(v, n, "vertex"));
      return ConvexBody(PolytopeV::from_points(pts), spec.value("label", std::string("polytope")));
    }
    if (type == "ellipsoid") {
      const json& shape = field(spec, "shape");
      std::optional<int> inferred;
      if (shape.is_array()) inferred = static_cast<int>(shape.size());
      const int n = dimension_of(spec, inferred);
      const Mat A = matrix_of(shape, n, "shape");
      const Vec c = spec.contains("center") ? vector_of(spec["center"], n, "center") : Vec::Zero(n);
      const Ellipsoid e = Ellipsoid::make(c, A);
      if (!(e.gauge(Vec::Zero(n)) < 1.0 - 1e-9)) {
        fail(ErrorKind::origin_not_interior, "origin is not inside the ellipsoid");
      }
      return ConvexBody(e, "ellipsoid");
    }
    if (type == "pball") {
      const int n = dimension_of(spec, std::nullopt);
      return p_ball_smooth(n, real(field(spec, "p"), "p"));
    }
    if (type == "named") {
      const json& name = field(spec, "name");
      if (!name.is_string()) fail(ErrorKind::parse, "name must be a string");
      return named_body(name.get<std::string>(), dimension_of(spec, std::nullopt));
    }
    fail(ErrorKind::parse, "unknown body type '" + type + "'");
  }();

  if (spec.contains("scale")) {
    const double s = real(spec["scale"], "scale");
    if (!(s > 0.0)) fail(ErrorKind::invalid_argument, "scale must be positive");
    if (s != 1.0) body = scaled(body, s);
  }
  if (spec.contains("label")) {
    if (!spec["label"].is_string()) fail(ErrorKind::parse, "label must be a string");
    body = body.renamed(spec["label"].get<std::string>());
  }
  return body;
}

ConvexBody parse_body_spec(const std::string& spec) {
  std::string text = spec;
  if (!spec.empty() && spec[0] == '@') {
    std::ifstream in(spec.substr(1));
    if (!in) fail(ErrorKind::io, "cannot read body spec file '" + spec.substr(1) + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::parse, std::string("invalid JSON: ") + e.what());
  }
  return body_from_json(doc);
}

json body_to_json(const ConvexBody& body) {
  json out;
  out["label"] = body.name();
  out["dim"] = body.dim();
  if (const auto* p = body.polytope()) {
    out["type"] = "polytope-v";
    json verts = json::array();
    for (const auto& v : p->vertices()) verts.push_back(std::vector<double>(v.data(), v.data() + v.size()));
    out["vertices"] = verts;
  } else if (const auto* e = body.ellipsoid()) {
    out["type"] = "ellipsoid";
    json rows = json::array();
    for (Eigen::Index i = 0; i < e->shape().rows(); ++i) {
      const Vec r = e->shape().row(i).transpose();
      rows.push_back(std::vector<double>(r.data(), r.data() + r.size()));
    }
    out["shape"] = rows;
    out["center"] = std::vector<double>(e->center().data(), e->center().data() + e->center().size());
  } else {
    const auto& s = *body.smooth();
    // Ball and p-ball families only survive scalings, so h(e₁) is the scale.
    const double scale = support(body, Vec::Unit(body.dim(), 0));
    if (s.family == SmoothFamily::pball) {
      out["type"] = "pball";
      out["p"] = s.p;
      out["scale"] = scale;
    } else if (s.family == SmoothFamily::ball) {
      out["type"] = "named";
      out["name"] = "ball";
      out["scale"] = scale;
    } else {
      // Not readable back: the body is only known through evaluators.
      out["type"] = "smooth";
      out["family"] = family_name(s.family);
    }
  }
  return out;
}

}  // namespace convexlab
