#include "bloch/io.hpp"

#include <fstream>
#include <sstream>

#include "bloch/errors.hpp"

namespace bloch {

namespace {

std::string real_text(const json& j, const std::string& where) {
  if (j.is_number_integer()) return j.dump();
  if (j.is_number_float()) return to_decimal(j.get<double>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    try {
      (void)from_string<double>(s);
    } catch (const ParseError&) {
      throw SchemaError(where + ": '" + s + "' is not a decimal number");
    }
    return s;
  }
  throw SchemaError(where + ": expected a real number");
}

json real_json(const std::string& text) {
  const bool integral = !text.empty() && text.find_first_not_of("-0123456789") == std::string::npos;
  if (integral && text.size() < 18) return json(std::stoll(text));
  const double d = from_string<double>(text);
  if (to_decimal(d) == text) return json(d);
  return json(text);
}

CText complex_text(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || j[0].is_array()) throw SchemaError(where + ": expected [re, im]");
  return {real_text(j[0], where + "[0]"), real_text(j[1], where + "[1]")};
}

json complex_json(const CText& c) { return json::array({real_json(c.re), real_json(c.im)}); }

std::vector<CText> triple_text(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) throw SchemaError(where + ": expected three [re, im] coordinates");
  std::vector<CText> out;
  for (std::size_t i = 0; i < 3; ++i) out.push_back(complex_text(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

json vector_json(const std::vector<CText>& v) {
  json out = json::array();
  for (const auto& c : v) out.push_back(complex_json(c));
  return out;
}

const CText kZero{"0", "0"};
const CText kOne{"1", "0"};

std::vector<CText> cp1_text(const json& j, const std::string& where) {
  if (j.is_string()) {
    if (j.get<std::string>() != "inf") throw SchemaError(where + ": the only named point is \"inf\"");
    return {kOne, kZero};
  }
  if (j.is_array() && j.size() == 2 && j[0].is_array()) {
    return {complex_text(j[0], where + "[0]"), complex_text(j[1], where + "[1]")};
  }
  return {complex_text(j, where), kOne};
}

json cp1_json(const std::vector<CText>& v) {
  if (v[1] == kZero && v[0] == kOne) return "inf";
  if (v[1] == kOne) return complex_json(v[0]);
  return vector_json(v);
}

Rational coeff_of(const json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return parse_rational(j.dump());
    if (j.is_number_float()) return parse_rational(to_decimal(j.get<double>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
  } catch (const ParseError& e) {
    throw SchemaError(where + ": " + e.what());
  }
  throw SchemaError(where + ": expected a rational coefficient");
}

const json& field(const json& obj, const char* key, const std::string& where) {
  auto it = obj.find(key);
  if (it == obj.end()) throw SchemaError(where + ": missing \"" + key + "\"");
  return *it;
}

std::vector<double> double_pair(double a, double b) { return {a, b}; }

template <class R>
json param_json(const Complex<R>& z) {
  if constexpr (std::is_same_v<R, double>) {
    return json::array({z.re, z.im});
  } else {
    return json::array({to_decimal(z.re), to_decimal(z.im)});
  }
}

}  // namespace

Triangulation triangulation_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("top level must be an object");
  const json& g = field(j, "geometry", "triangulation");
  if (!g.is_string()) throw SchemaError("geometry must be a string");
  Triangulation t;
  t.geometry = parse_geometry(g.get<std::string>());
  const json& tets = field(j, "tetrahedra", "triangulation");
  if (!tets.is_array()) throw SchemaError("tetrahedra must be an array");
  if (auto m = j.find("metadata"); m != j.end()) t.metadata = *m;
  for (std::size_t i = 0; i < tets.size(); ++i) {
    const std::string where = "tetrahedra[" + std::to_string(i) + "]";
    const json& tj = tets[i];
    if (!tj.is_object()) throw SchemaError(where + ": expected an object");
    Tetrahedron tet;
    tet.coeff = coeff_of(field(tj, "coeff", where), where + ".coeff");
    if (t.geometry == Geometry::shapes) {
      tet.shape = complex_text(field(tj, "shape", where), where + ".shape");
    } else {
      const json& vs = field(tj, "vertices", where);
      if (!vs.is_array() || vs.size() != 4) throw SchemaError(where + ".vertices: expected 4 vertices");
      for (std::size_t k = 0; k < 4; ++k) {
        const std::string vw = where + ".vertices[" + std::to_string(k) + "]";
        switch (t.geometry) {
          case Geometry::hyperbolic:
            tet.vertices.push_back(cp1_text(vs[k], vw));
            break;
          case Geometry::cr:
            tet.vertices.push_back(triple_text(vs[k], vw));
            break;
          case Geometry::flag:
            if (!vs[k].is_object()) throw SchemaError(vw + ": expected {\"point\", \"line\"}");
            tet.vertices.push_back(triple_text(field(vs[k], "point", vw), vw + ".point"));
            tet.lines.push_back(triple_text(field(vs[k], "line", vw), vw + ".line"));
            break;
          case Geometry::shapes:
            break;
        }
      }
    }
    t.tetrahedra.push_back(std::move(tet));
  }
  validate(t);
  return t;
}

Triangulation parse_triangulation_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return triangulation_from_json(j);
}

Triangulation parse_triangulation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_triangulation_text(ss.str());
}

json to_json(const Triangulation& t) {
  json tets = json::array();
  for (const auto& tet : t.tetrahedra) {
    json tj;
    tj["coeff"] = to_string(tet.coeff);
    if (t.geometry == Geometry::shapes) {
      tj["shape"] = complex_json(tet.shape);
    } else {
      json vs = json::array();
      for (std::size_t k = 0; k < tet.vertices.size(); ++k) {
        switch (t.geometry) {
          case Geometry::hyperbolic:
            vs.push_back(cp1_json(tet.vertices[k]));
            break;
          case Geometry::cr:
            vs.push_back(vector_json(tet.vertices[k]));
            break;
          case Geometry::flag:
            vs.push_back({{"point", vector_json(tet.vertices[k])}, {"line", vector_json(tet.lines.at(k))}});
            break;
          case Geometry::shapes:
            break;
        }
      }
      tj["vertices"] = std::move(vs);
    }
    tets.push_back(std::move(tj));
  }
  json out{{"geometry", to_string(t.geometry)}, {"tetrahedra", std::move(tets)}};
  if (!t.metadata.is_null()) out["metadata"] = t.metadata;
  return out;
}

template <class R>
json to_json(const PreBlochElt<R>& e) {
  json terms = json::array();
  for (const auto& t : e.terms()) terms.push_back({{"param", param_json(t.param)}, {"coeff", to_string(t.coeff)}});
  return {{"terms", std::move(terms)}, {"degenerate", e.degenerate_count()}};
}

json to_json(const VolumeReport& v) {
  return {{"volume", v.volume},
          {"term_count", v.term_count},
          {"degenerate_terms", v.degenerate_terms},
          {"precision_bits", v.precision_bits}};
}

json to_json(const RelationLattice& l) {
  json gens = json::array();
  for (const auto& g : l.generators) gens.push_back(double_pair(to_double(g.re), to_double(g.im)));
  json rels = json::array();
  for (const auto& row : l.relations) {
    json r = json::array();
    for (const auto& x : row) r.push_back(x.convert_to<long long>());
    rels.push_back(std::move(r));
  }
  json logs = json::array();
  for (const auto& [a, b] : l.log_data) logs.push_back(double_pair(a, b));
  return {{"generators", std::move(gens)},
          {"relations", std::move(rels)},
          {"log_data", std::move(logs)},
          {"detection_bits", l.detection_bits},
          {"height_exceeded", l.height_exceeded}};
}

json to_json(const WedgeVerdict& v) {
  return {{"status", to_string(v.status)},
          {"residual_norm", v.residual_norm},
          {"free_rank", v.free_rank},
          {"lattice", to_json(v.lattice)}};
}

template <class R>
json to_json(const InvariantResult<R>& r) {
  json out{{"geometry", to_string(r.geometry)},
           {"element", to_json(r.element)},
           {"volume", to_json(r.volume)},
           {"warnings", r.warnings}};
  if (r.delta) out["delta"] = to_json(*r.delta);
  return out;
}

template <class R>
json to_json(const ComparisonReport<R>& r) {
  json out{{"geometry", to_string(r.geometry)},
           {"difference", to_json(r.difference)},
           {"volume", to_json(r.volume)},
           {"equal", r.equal},
           {"verdict", r.verdict},
           {"warnings", r.warnings}};
  if (r.delta) out["delta"] = to_json(*r.delta);
  return out;
}

json to_json(const Report& r) {
  return {{"command", r.command},
          {"config", r.config},
          {"results", r.results},
          {"warnings", r.warnings},
          {"wall_time", r.wall_time}};
}

Report report_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("report must be an object");
  Report r;
  try {
    r.command = field(j, "command", "report").get<std::string>();
    r.config = field(j, "config", "report");
    r.results = field(j, "results", "report");
    r.warnings = field(j, "warnings", "report").get<std::vector<std::string>>();
    r.wall_time = field(j, "wall_time", "report").get<double>();
  } catch (const json::type_error& e) {
    throw SchemaError(std::string("report field has the wrong type: ") + e.what());
  }
  return r;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

template json to_json(const PreBlochElt<double>&);
template json to_json(const PreBlochElt<Mp>&);
template json to_json(const InvariantResult<double>&);
template json to_json(const InvariantResult<Mp>&);
template json to_json(const ComparisonReport<double>&);
template json to_json(const ComparisonReport<Mp>&);

}  // namespace bloch
