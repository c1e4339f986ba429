#pragma once

// JSON readers for graph-manifold specs, ratio graphs and Lie algebra specs.
// Layouts are documented in docs/formats.md.

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "svol/errors.hpp"
#include "svol/exact.hpp"
#include "svol/jsj.hpp"
#include "svol/lie_algebra.hpp"
#include "svol/seifert.hpp"

namespace svol::io {

using Json = nlohmann::json;

inline Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("io", "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw DomainError("parse", path + ": " + e.what());
  }
}

namespace detail {

[[noreturn]] inline void bad(const std::string& where, const std::string& what) {
  throw DomainError("format", where + ": " + what);
}

inline const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) bad(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) bad(where, std::string("missing \"") + key + "\"");
  return *it;
}

inline std::string string_of(const Json& j, const std::string& where) {
  if (!j.is_string()) bad(where, "expected a string");
  return j.get<std::string>();
}

}  // namespace detail

/// Integers may be JSON integers or decimal strings (for large values).
inline Integer integer_from(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) return parse_integer(j.get<std::string>());
  detail::bad(where, "expected an integer");
}

inline std::size_t index_from(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned()) detail::bad(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

/// Rationals are JSON integers or strings "p" / "p/q".
inline Rational rational_from(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(Integer(j.get<long long>()));
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  detail::bad(where, "expected a rational (integer or \"p/q\" string)");
}

/// "a", "bi", "a+bi", "a-bi", "i", "-i" with rational a, b.
inline GaussianRational parse_gaussian(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw DomainError("parse", "empty number");
  if (s.back() != 'i') return GaussianRational(Rational::parse(s));
  s.pop_back();
  // Split at the last sign that is not in leading position.
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;)
    if (s[k] == '+' || s[k] == '-') {
      split = k;
      break;
    }
  std::string re = split == std::string::npos ? "" : s.substr(0, split);
  std::string im = split == std::string::npos ? s : s.substr(split);
  if (im.empty() || im == "+") im = "1";
  if (im == "-") im = "-1";
  if (!im.empty() && im[0] == '+') im.erase(0, 1);
  return {re.empty() ? Rational(0) : Rational::parse(re), Rational::parse(im)};
}

inline GaussianRational gaussian_from(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return GaussianRational(Rational(Integer(j.get<long long>())));
  if (j.is_string()) return parse_gaussian(j.get<std::string>());
  detail::bad(where, "expected a number");
}

inline Slope slope_from(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) detail::bad(where, "expected a pair [c_s, c_h]");
  return {integer_from(j[0], where), integer_from(j[1], where)};
}

inline GluingMatrix gluing_from(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || j[0].size() != 2 || !j[1].is_array() || j[1].size() != 2)
    detail::bad(where, "gluing must be a 2x2 integer matrix");
  GluingMatrix m;
  for (std::size_t r = 0; r < 2; ++r)
    for (std::size_t c = 0; c < 2; ++c) m[r][c] = integer_from(j[r][c], where);
  return m;
}

inline Endpoint endpoint_from(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) detail::bad(where, "endpoint must be [piece_id, slot]");
  return {detail::string_of(j[0], where), index_from(j[1], where)};
}

inline Piece piece_from(const Json& j, const std::string& where) {
  Piece p;
  p.id = detail::string_of(detail::field(j, "id", where), where);
  p.slots = index_from(detail::field(j, "slots", where), where);
  std::string kind = detail::string_of(detail::field(j, "kind", where), where);
  if (kind == "seifert") {
    p.kind = PieceKind::Seifert;
    auto closed = parse_seifert(detail::string_of(detail::field(j, "seifert", where), where));
    p.seifert = SeifertInvariants(closed.genus(), closed.pairs(), Integer(p.slots));
  } else if (kind == "hyperbolic") {
    p.kind = PieceKind::Hyperbolic;
    if (j.contains("label")) p.label = detail::string_of(j["label"], where);
  } else {
    detail::bad(where, "kind must be \"seifert\" or \"hyperbolic\"");
  }
  return p;
}

inline Edge edge_from(const Json& j, const std::string& where) {
  Edge e;
  const auto& ends = detail::field(j, "endpoints", where);
  if (!ends.is_array() || ends.size() != 2) detail::bad(where, "endpoints must hold two [piece, slot] pairs");
  e.a = endpoint_from(ends[0], where);
  e.b = endpoint_from(ends[1], where);
  e.gluing = gluing_from(detail::field(j, "gluing", where), where);
  if (j.contains("killed_slope") && !j["killed_slope"].is_null()) e.killed_slope = slope_from(j["killed_slope"], where);
  if (j.contains("killed_slope_b") && !j["killed_slope_b"].is_null())
    e.killed_slope_b = slope_from(j["killed_slope_b"], where);
  return e;
}

inline VolumeValue volume_from(const Json& j, const std::string& where) {
  if (j.is_object()) {
    if (j.contains("exact")) return VolumeValue::exact(rational_from(j["exact"], where));
    if (j.contains("numeric")) {
      if (!j["numeric"].is_number()) detail::bad(where, "numeric volume must be a number");
      return VolumeValue::numeric(j["numeric"].get<double>());
    }
    detail::bad(where, "volume object needs \"exact\" or \"numeric\"");
  }
  if (j.is_number_float()) return VolumeValue::numeric(j.get<double>());
  return VolumeValue::exact(rational_from(j, where));
}

inline PieceAssignment assignment_from(const Json& j, const std::string& where) {
  PieceAssignment a;
  a.piece = detail::string_of(detail::field(j, "piece", where), where);
  std::string type = detail::string_of(detail::field(j, "type", where), where);
  if (type == "small_image") {
    a.value = PieceAssignment::SmallImage{};
  } else if (type == "direct") {
    a.value = PieceAssignment::Direct{volume_from(detail::field(j, "volume", where), where)};
  } else if (type == "filled_seifert") {
    PieceAssignment::FilledSeifert f;
    const auto& fills = detail::field(j, "fillings", where);
    if (!fills.is_array()) detail::bad(where, "fillings must be an array of slopes");
    for (const auto& s : fills) f.fillings.push_back(slope_from(s, where));
    f.coeff = rational_from(detail::field(j, "coeff", where), where);
    a.value = f;
  } else {
    detail::bad(where, "type must be small_image, direct or filled_seifert");
  }
  return a;
}

inline std::vector<PieceAssignment> assignments_from(const Json& j, const std::string& where) {
  if (!j.is_array()) detail::bad(where, "assignments must be an array");
  std::vector<PieceAssignment> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(assignment_from(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

/// A named variant of a graph spec: killed slopes replaced edge by edge and
/// its own assignments.
struct Scenario {
  std::string name;
  GraphManifoldSpec spec;
  std::vector<PieceAssignment> assignments;
};

struct GraphDocument {
  GraphManifoldSpec spec;
  std::vector<PieceAssignment> assignments;
  std::vector<Scenario> scenarios;
};

inline GraphDocument graph_document_from(const Json& j) {
  GraphDocument doc;
  const auto& pieces = detail::field(j, "pieces", "document");
  if (!pieces.is_array()) detail::bad("pieces", "expected an array");
  for (std::size_t i = 0; i < pieces.size(); ++i) doc.spec.pieces.push_back(piece_from(pieces[i], "pieces[" + std::to_string(i) + "]"));
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) detail::bad("edges", "expected an array");
    for (std::size_t i = 0; i < j["edges"].size(); ++i)
      doc.spec.edges.push_back(edge_from(j["edges"][i], "edges[" + std::to_string(i) + "]"));
  }
  if (j.contains("assignments")) doc.assignments = assignments_from(j["assignments"], "assignments");
  if (j.contains("scenarios")) {
    if (!j["scenarios"].is_array()) detail::bad("scenarios", "expected an array");
    for (std::size_t s = 0; s < j["scenarios"].size(); ++s) {
      const auto& sj = j["scenarios"][s];
      std::string where = "scenarios[" + std::to_string(s) + "]";
      Scenario sc;
      sc.name = detail::string_of(detail::field(sj, "name", where), where);
      sc.spec = doc.spec;
      if (sj.contains("killed_slopes")) {
        const auto& ks = sj["killed_slopes"];
        if (!ks.is_array() || ks.size() != sc.spec.edges.size())
          detail::bad(where, "killed_slopes must list one slope (or null) per edge");
        for (std::size_t e = 0; e < ks.size(); ++e) {
          sc.spec.edges[e].killed_slope_b.reset();
          if (ks[e].is_null())
            sc.spec.edges[e].killed_slope.reset();
          else
            sc.spec.edges[e].killed_slope = slope_from(ks[e], where);
        }
      }
      sc.assignments = assignments_from(detail::field(sj, "assignments", where), where + ".assignments");
      doc.scenarios.push_back(std::move(sc));
    }
  }
  return doc;
}

/// {"vertices": n, "edges": [[from, to, ratio], ...]}
inline RatioGraph ratio_graph_from(const Json& j) {
  RatioGraph g;
  g.vertex_count = index_from(detail::field(j, "vertices", "document"), "vertices");
  const auto& edges = detail::field(j, "edges", "document");
  if (!edges.is_array()) detail::bad("edges", "expected an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::string where = "edges[" + std::to_string(i) + "]";
    const auto& e = edges[i];
    if (!e.is_array() || e.size() != 3) detail::bad(where, "edge must be [from, to, ratio]");
    g.edges.push_back({index_from(e[0], where), index_from(e[1], where), rational_from(e[2], where)});
  }
  return g;
}

/// {"basis": [...], "brackets": [["X", "Y", {"Y": -2}], ...], "field": "rational" | "gaussian"}
inline LieAlgebraSpec lie_spec_from(const Json& j) {
  const auto& basis = detail::field(j, "basis", "document");
  if (!basis.is_array() || basis.empty()) detail::bad("basis", "expected a non-empty array of names");
  std::vector<std::string> names;
  for (const auto& b : basis) names.push_back(detail::string_of(b, "basis"));
  ScalarField field = ScalarField::Rational;
  if (j.contains("field")) {
    std::string f = detail::string_of(j["field"], "field");
    if (f == "gaussian")
      field = ScalarField::Gaussian;
    else if (f != "rational")
      detail::bad("field", "must be \"rational\" or \"gaussian\"");
  }
  LieAlgebraSpec spec(names, field);
  if (j.contains("brackets")) {
    const auto& brackets = j["brackets"];
    if (!brackets.is_array()) detail::bad("brackets", "expected an array");
    for (std::size_t i = 0; i < brackets.size(); ++i) {
      std::string where = "brackets[" + std::to_string(i) + "]";
      const auto& br = brackets[i];
      if (!br.is_array() || br.size() != 3 || !br[2].is_object()) detail::bad(where, "bracket must be [x, y, {name: coeff}]");
      std::vector<std::pair<std::string, GaussianRational>> value;
      for (const auto& [name, coeff] : br[2].items()) value.emplace_back(name, gaussian_from(coeff, where));
      spec.set_bracket(detail::string_of(br[0], where), detail::string_of(br[1], where), value);
    }
  }
  return spec;
}

}  // namespace svol::io
