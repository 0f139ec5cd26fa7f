#pragma once

#include "wpl/canonical_algebra.hpp"
#include "wpl/coxring.hpp"
#include "wpl/picard.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace wpl {

/// "t^k" then "x{i}^{a}" factors with positive exponents, '*'-separated,
/// "^1" suppressed; "1" for the empty monomial.
std::string render_monomial(const Monomial& m);

/// Degree in the normal-form grammar, e.g. "0", "c", "2c+x1", "-c+2x3".
std::string render_degree(const PicElt& d);

/// "O" for the zero class, otherwise "O(<degree>)".
std::string bundle_name(const PicElt& d);

/// Identifier of vertex idx on the canonical vertex set: "v0" (source),
/// "v<arm><j>" (interior), "v1" (sink). Throws Error when two vertices of
/// this weight data would share a name.
std::string vertex_name(const WplData& w, std::size_t idx);

/// Deterministic DOT rendering. The quiver must live on the canonical vertex
/// set (tilting_degrees order); vertices are emitted in that order, then one
/// edge line per arrow in stored order.
std::string to_dot(const WplData& w, const LabeledQuiver& q);

/// Extra top-level certificate block for JSON emitted with a window bound.
struct JsonCertificate {
  std::int64_t k_max = 0;
  bool closure_verified = false;
};

/// Versioned JSON document (field "schema": 1) for a quiver, optionally with
/// relations and a certificate block. All rationals are exact "a/b" strings.
std::string to_json_string(const WplData& w, const LabeledQuiver& q,
                           const std::vector<PathRelation>* relations = nullptr,
                           const JsonCertificate* certificate = nullptr);

struct ParsedQuiver {
  WplData data;
  LabeledQuiver quiver;
};

/// Inverse of to_json_string on the weight and quiver fields; the round trip
/// through emit/parse is exact.
ParsedQuiver quiver_from_json_string(const std::string& text);

}  // namespace wpl
