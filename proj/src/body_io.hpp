#pragma once
#include <string>

#include "body.hpp"

namespace tlab {

struct BodyWithSpec {
  ConvexBody2D body;
  std::string spec_json;  ///< canonical echo of the construction input
};

/// Body file schema (JSON):
///   { "dimension": 2, "kind": "trig" | "disk" | "ellipse" | "random",
///     "c0": number, "cos": [..], "sin": [..],
///     "semi_axes": [a, b],                (ellipse)
///     "seed": u64, "degree": k, "amplitude": x,   (random)
///     "nodes": N }
/// Unknown kinds and odd N are rejected.
BodyWithSpec body_from_json(const std::string& json_text,
                            const BodyLimits& limits = {},
                            int default_nodes = 256,
                            int ellipse_project_degree = 16);

std::string body_to_json(const ConvexBody2D& body);

/// Command-line shorthand: "disk", "disk:r", "ellipse:a,b",
/// "random:seed[:degree[:amplitude]]", or a path to a body file.
BodyWithSpec body_from_spec(const std::string& spec, int nodes,
                            const BodyLimits& limits = {},
                            int ellipse_project_degree = 16);

}  // namespace tlab
