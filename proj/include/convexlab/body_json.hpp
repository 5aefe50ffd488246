#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "convexlab/bodies.hpp"

namespace convexlab {

inline constexpr int kMaxSpecDim = 10;
inline constexpr std::size_t kMaxSpecVertices = 10000;

// Builds a body from the JSON schema
//   {"type": "polytope-v" | "ellipsoid" | "pball" | "named", "dim": n,
//    "vertices": [[...]], "shape": [[...]], "center": [...], "p": real,
//    "name": "cube" | "cross" | "simplex" | "ball", "scale": real}
// Malformed input raises parse; invalid geometry raises the geometric kinds.
ConvexBody body_from_json(const nlohmann::json& spec);

// Inline JSON text, or "@path" to read the document from a file.
ConvexBody parse_body_spec(const std::string& spec);

nlohmann::json body_to_json(const ConvexBody& body);

}  // namespace convexlab
