#pragma once

// JSON form of triangulations and reports.
//
// Triangulation schema:
//   {"geometry": "hyperbolic" | "cr" | "flag" | "shapes",
//    "tetrahedra": [{"coeff": "p/q" | integer | decimal, ...}],
//    "metadata": any}
// hyperbolic: "vertices": 4 of "inf" | [re, im] | [[re, im], [re, im]]
// cr:         "vertices": 4 triples of [re, im]
// flag:       "vertices": 4 of {"point": triple, "line": triple}
// shapes:     "shape": [re, im]
// Reals are JSON numbers or decimal strings (for more than 17 digits).

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bloch/invariants.hpp"
#include "bloch/triangulation.hpp"

namespace bloch {

using nlohmann::json;

// ParseError for malformed JSON or unreadable files, SchemaError for
// missing or mistyped fields, GeometryError for invalid vertex data.
Triangulation parse_triangulation(const std::string& path);
Triangulation parse_triangulation_text(const std::string& text);
Triangulation triangulation_from_json(const json& j);
json to_json(const Triangulation& t);

template <class R>
json to_json(const PreBlochElt<R>& e);
json to_json(const VolumeReport& v);
json to_json(const RelationLattice& l);
json to_json(const WedgeVerdict& v);
template <class R>
json to_json(const InvariantResult<R>& r);
template <class R>
json to_json(const ComparisonReport<R>& r);

struct Report {
  std::string command;
  json config = json::object();
  json results = json::object();
  std::vector<std::string> warnings;
  double wall_time = 0;

  friend bool operator==(const Report& a, const Report& b) {
    return a.command == b.command && a.config == b.config && a.results == b.results && a.warnings == b.warnings &&
           a.wall_time == b.wall_time;
  }
};

json to_json(const Report& r);
Report report_from_json(const json& j);  // SchemaError

// Stable key order, two-space indent, trailing newline.
std::string dump(const json& j);

}  // namespace bloch
