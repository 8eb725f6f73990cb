#pragma once

#include <string>

#include "hilbert/convex_body.hpp"

namespace hilbert {

/// Parses a body from its JSON description:
///
///   {"type":"ball","dim":2}                       optional "radius", "center"
///   {"type":"ellipsoid","center":[..],"shape":[[..]]}
///   {"type":"hpolytope","A":[[..]],"b":[..]}
///   {"type":"vpolytope","vertices":[[..]]}
///   {"type":"product","factors":[..]}
///   {"type":"minkowski_ball","base":{..},"radius":r}
///   {"type":"affine","map":[[..]],"shift":[..],"base":{..}}
///
/// Unknown keys are rejected. Errors are InvalidArgument whose field() is a
/// path such as "factors[1].shape".
ConvexBody bodyFromJson(const std::string& text);

/// Reads and parses a JSON body file.
ConvexBody loadBody(const std::string& path);

/// Serializes a body; bodyFromJson(bodyToJson(b)) describes the same set.
std::string bodyToJson(const ConvexBody& body, int indent = -1);

}  // namespace hilbert
