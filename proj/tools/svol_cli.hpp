#pragma once

#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "svol/chern_simons.hpp"
#include "svol/covers.hpp"
#include "svol/ehn.hpp"
#include "svol/errors.hpp"
#include "svol/exact.hpp"
#include "svol/io_json.hpp"
#include "svol/jsj.hpp"
#include "svol/oracle.hpp"
#include "svol/seifert.hpp"
#include "svol/standard_algebras.hpp"

namespace svol::cli {

namespace detail {

inline std::vector<Integer> integer_list(const std::vector<std::string>& items) {
  std::vector<Integer> out;
  for (const auto& s : items) out.push_back(parse_integer(s));
  return out;
}

inline std::string join(const std::vector<Integer>& v, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i].str();
  return s;
}

/// Integers that fit in 64 bits become JSON numbers, larger ones strings.
inline nlohmann::json json_integer(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return v.convert_to<long long>();
  return v.str();
}

inline nlohmann::json json_integers(const std::vector<Integer>& v) {
  auto out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(json_integer(x));
  return out;
}

/// Two-column text table, keys padded to a common width.
inline void print_record(std::ostream& out, const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  for (const auto& [k, v] : rows) out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
}

inline std::string with_decimal(const Rational& coeff, bool decimal) {
  std::string s = VolumeValue::exact(coeff).to_string();
  if (decimal) s += " = " + format_decimal(VolumeValue::exact(coeff).to_double());
  return s;
}

inline void seifert_info(std::ostream& out, const std::string& text) {
  auto inv = parse_seifert(text);
  out << "manifold: " << to_string(inv) << '\n';
  out << "genus: " << inv.genus() << '\n';
  out << "exceptional fibers: " << inv.pairs().size() << '\n';
  if (!inv.closed()) {
    out << "boundary tori: " << inv.boundary_count() << '\n';
    return;
  }
  out << "e: " << euler_number(inv) << '\n';
  out << "chi: " << orbifold_chi(inv) << '\n';
  out << "geometry: " << to_string(classify_geometry(inv)) << '\n';
}

inline void seifert_volumes(std::ostream& out, const std::string& text, bool decimal, const std::optional<std::string>& witness,
                            bool oracle) {
  auto inv = parse_seifert(text);
  auto values = volume_set(inv);
  for (const auto& v : values) out << with_decimal(v, decimal) << '\n';
  if (witness) {
    for (const auto& w : witnesses_for(inv, Rational::parse(*witness))) out << w.to_string() << '\n';
  }
  if (oracle) {
    Integer window = oracle::default_window(inv);
    auto brute = oracle::brute_force_volume_set(inv, window);
    if (brute != values)
      throw InternalError("canonical enumeration and brute-force window B=" + window.str() + " disagree");
    out << "oracle: agree (window B=" << window << ", " << brute.size() << " values)\n";
  }
}

inline void seifert_sv(std::ostream& out, const std::string& text, bool decimal) {
  auto inv = parse_seifert(text);
  auto sv = seifert_volume_max(inv);
  out << "SV = " << with_decimal(sv.enumerated, decimal) << '\n';
  out << "chi^2/|e| = " << sv.closed_form << '\n';
}

inline void seifert_foliation(std::ostream& out, const std::string& text) {
  auto inv = parse_seifert(text);
  inv.require_closed("foliation");
  out << "horizontal foliation: " << (foliation_exists(inv) ? "yes" : "no") << '\n';
}

inline void seifert_witnesses(std::ostream& out, const std::string& text, const std::string& coeff) {
  auto inv = parse_seifert(text);
  for (const auto& w : witnesses_for(inv, Rational::parse(coeff))) out << w.to_string() << '\n';
}

inline void print_decomposition(std::ostream& out, const LieAlgebra& alg, const ExteriorForm& tf, const ExteriorForm& volume) {
  const auto& names = alg.basis_names();
  auto dec = decompose_against(alg, tf, volume);
  if (!dec) throw DomainError("inconsistent", "Tf is not a multiple of the volume form modulo exact forms");
  out << "Tf = " << tf.to_string(names) << '\n';
  out << "d(Tf) = " << d(alg, tf).to_string(names) << '\n';
  out << "decomposition: Tf = " << volume.scaled(dec->coefficient).to_string(names) << " + d(beta)\n";
  out << "beta = " << dec->primitive.to_string(names) << '\n';
  bool ok = d(alg, tf).is_zero() && volume.scaled(dec->coefficient) + d(alg, dec->primitive) == tf;
  if (!ok) throw InternalError("Chern-Simons decomposition does not verify");
  out << "OK\n";
}

inline void cs_verify(std::ostream& out, const std::string& which) {
  if (which == "iso-sl2r") {
    auto alg = iso_sl2r_algebra();
    out << "algebra: iso-sl2r (basis X, Y, Z, W)\n";
    out << "Gram form: R\n";
    print_decomposition(out, alg, cs_three_form(alg, iso_sl2r_r_gram()), ExteriorForm::monomial({0, 1, 2}));
  } else if (which == "psl2c") {
    auto alg = sl2_algebra(ScalarField::Gaussian);
    out << "algebra: sl2 over Q(i) (basis X, Y, Z)\n";
    out << "Gram form: P1\n";
    print_decomposition(out, alg, cs_three_form(alg, pontrjagin_gram_sl2()), ExteriorForm::monomial({0, 1, 2}));
  } else {
    throw CLI::ValidationError("algebra", "expected iso-sl2r or psl2c");
  }
}

inline void cs_jacobi(std::ostream& out, const std::string& path) {
  auto spec = io::lie_spec_from(io::load_json_file(path));
  out << validate_jacobi(spec).to_string(spec) << '\n';
}

inline void graph_validate(std::ostream& out, const std::string& path) {
  auto doc = io::graph_document_from(io::load_json_file(path));
  auto report = validate_spec(doc.spec);
  if (report.ok()) {
    out << "ok" << (is_closed(doc.spec) ? " (closed)" : " (open slots remain)") << '\n';
  } else {
    for (const auto& v : report.violations) out << "violation: " << v << '\n';
  }
  for (const auto& sc : doc.scenarios) {
    auto r = validate_spec(sc.spec);
    out << "scenario " << sc.name << ": " << (r.ok() ? "ok" : r.violations.front()) << '\n';
  }
}

inline void graph_additivity(std::ostream& out, const std::string& path, bool decimal) {
  auto doc = io::graph_document_from(io::load_json_file(path));
  auto render = [&](const VolumeValue& v) {
    std::string s = v.to_string();
    if (decimal && v.is_exact()) s += " = " + format_decimal(v.to_double());
    return s;
  };
  if (doc.scenarios.empty()) {
    out << render(additivity_sum(doc.spec, doc.assignments)) << '\n';
    return;
  }
  if (!doc.assignments.empty()) out << "default: " << render(additivity_sum(doc.spec, doc.assignments)) << '\n';
  for (const auto& sc : doc.scenarios) out << sc.name << ": " << render(additivity_sum(sc.spec, sc.assignments)) << '\n';
}

inline void graph_rw(std::ostream& out, const std::string& path) {
  auto g = io::ratio_graph_from(io::load_json_file(path));
  auto r = rw_consistency(g);
  if (r.consistent) {
    out << "consistent\n";
    out << "potentials:";
    for (const auto& p : r.potentials) out << ' ' << p;
    out << '\n';
    return;
  }
  out << "inconsistent\n";
  out << "cycle:";
  for (const auto& s : r.witness) {
    const auto& e = g.edges[s.edge];
    out << ' ' << (s.forward ? e.from : e.to) << "->" << (s.forward ? e.to : e.from);
  }
  out << '\n';
  out << "product: " << r.witness_product << '\n';
}

}  // namespace detail

/// Runs one command line. Output is buffered and only written to `out` on
/// success, so failures never leave partial results on the primary stream.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact representation-volume computations for Seifert and graph manifolds", "svol"};
  app.require_subcommand(1);

  std::string manifold, coeff, path, which;
  bool decimal = false, json = false, oracle = false;
  std::optional<std::string> witness;

  auto* seifert = app.add_subcommand("seifert", "Seifert fibered manifolds");
  seifert->require_subcommand(1);
  auto* s_info = seifert->add_subcommand("info", "invariants, Euler number, orbifold characteristic, geometry");
  auto* s_vol = seifert->add_subcommand("volumes", "volume set, one coefficient of 4*pi^2 per line");
  auto* s_sv = seifert->add_subcommand("sv", "Seifert volume (maximum of the volume set)");
  auto* s_fol = seifert->add_subcommand("foliation", "horizontal foliation criterion");
  auto* s_wit = seifert->add_subcommand("witnesses", "integer witnesses realizing a coefficient");
  for (auto* sub : {s_info, s_vol, s_sv, s_fol, s_wit})
    sub->add_option("manifold", manifold, "Seifert notation, e.g. \"(1; 1/2, 1/2)\"")->required();
  s_wit->add_option("coeff", coeff, "volume coefficient p/q")->required();
  for (auto* sub : {s_vol, s_sv}) sub->add_flag("--decimal", decimal, "append decimal values");
  s_vol->add_option("--witnesses", witness, "print witnesses for this coefficient");
  s_vol->add_flag("--oracle", oracle, "cross-check against the brute-force window enumeration");

  auto* cs = app.add_subcommand("cs", "Chern-Simons forms over structure-constant Lie algebras");
  cs->require_subcommand(1);
  auto* cs_verify = cs->add_subcommand("verify", "decompose Tf against the volume form");
  cs_verify->add_option("algebra", which, "iso-sl2r or psl2c")->required()->check(CLI::IsMember({"iso-sl2r", "psl2c"}));
  auto* cs_jacobi = cs->add_subcommand("jacobi", "check the Jacobi identity of a JSON Lie algebra spec");
  cs_jacobi->add_option("file", path)->required();

  auto* graph = app.add_subcommand("graph", "graph-manifold JSJ bookkeeping");
  graph->require_subcommand(1);
  auto* g_val = graph->add_subcommand("validate", "check slots, gluings and killed slopes");
  auto* g_add = graph->add_subcommand("additivity", "sum piece volumes");
  auto* g_rw = graph->add_subcommand("rw", "cycle consistency of fiber-intersection ratios");
  for (auto* sub : {g_val, g_add, g_rw}) sub->add_option("file", path)->required();
  g_add->add_flag("--decimal", decimal, "append decimal values");

  std::vector<std::string> degrees, ks, ls;
  std::string m, deg_T, deg_s, i_fs, deg_f;
  auto* covers = app.add_subcommand("covers", "covering and merging arithmetic");
  covers->require_subcommand(1);
  auto* c_merge = covers->add_subcommand("merge", "copy counts for merging piece covers");
  c_merge->add_option("--degrees", degrees, "piece cover degrees d_i")->delimiter(',')->required();
  c_merge->add_option("--m", m, "characteristic degree m")->required();
  auto* c_colored = covers->add_subcommand("colored", "copy counts for colored merging");
  c_colored->add_option("--k", ks)->delimiter(',')->required();
  c_colored->add_option("--l", ls)->delimiter(',')->required();
  auto* c_elev = covers->add_subcommand("elevations", "number of elevations of a slope");
  c_elev->add_option("--deg-T", deg_T, "[T~:T]")->required();
  c_elev->add_option("--deg-s", deg_s, "[s~:s]")->required();
  auto* c_int = covers->add_subcommand("intersection", "intersection number of elevated fiber and slope");
  c_int->add_option("--i-fs", i_fs, "i(f, s)")->required();
  c_int->add_option("--deg-f", deg_f, "[f~:f]")->required();
  c_int->add_option("--deg-s", deg_s, "[s~:s]")->required();
  c_int->add_option("--deg-T", deg_T, "[T~:T]")->required();
  for (auto* sub : {c_merge, c_colored, c_elev, c_int}) sub->add_flag("--json", json, "print JSON");

  std::vector<std::string> pq;
  auto* cases = app.add_subcommand("cases", "worked examples");
  cases->require_subcommand(1);
  auto* motegi = cases->add_subcommand("motegi", "graph manifold from two torus knot exteriors");
  motegi->add_option("params", pq, "p1 q1 p2 q2")->expected(4)->required();
  motegi->add_flag("--json", json, "print JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out, help_err;
    int code = app.exit(e, help_out, help_err);
    if (code == 0) {
      out << help_out.str();
      return 0;
    }
    err << help_err.str();
    return 2;
  }

  std::ostringstream buf;
  try {
    using namespace detail;
    if (s_info->parsed()) seifert_info(buf, manifold);
    else if (s_vol->parsed()) seifert_volumes(buf, manifold, decimal, witness, oracle);
    else if (s_sv->parsed()) seifert_sv(buf, manifold, decimal);
    else if (s_fol->parsed()) seifert_foliation(buf, manifold);
    else if (s_wit->parsed()) seifert_witnesses(buf, manifold, coeff);
    else if (cs_verify->parsed()) detail::cs_verify(buf, which);
    else if (cs_jacobi->parsed()) detail::cs_jacobi(buf, path);
    else if (g_val->parsed()) graph_validate(buf, path);
    else if (g_add->parsed()) graph_additivity(buf, path, decimal);
    else if (g_rw->parsed()) graph_rw(buf, path);
    else if (c_merge->parsed()) {
      auto r = merge_copy_counts(integer_list(degrees), parse_integer(m));
      if (json)
        buf << nlohmann::json{{"D", json_integer(r.D)},
                              {"copies", json_integers(r.copies)},
                              {"per_torus_elevations", json_integer(r.per_torus_elevations)}}
                   .dump()
            << '\n';
      else
        print_record(buf, {{"D", r.D.str()}, {"copies", join(r.copies, " ")}, {"per_torus_elevations", r.per_torus_elevations.str()}});
    } else if (c_colored->parsed()) {
      auto r = colored_merge_counts(integer_list(ks), integer_list(ls));
      if (json)
        buf << nlohmann::json{{"K", json_integer(r.K)},
                              {"j0_positive_copies", json_integer(r.j0_positive_copies)},
                              {"j0_negative_copies", json_integer(r.j0_negative_copies)},
                              {"corridor_copies", json_integers(r.corridor_copies)},
                              {"matched", r.matched}}
                   .dump()
            << '\n';
      else
        print_record(buf, {{"K", r.K.str()},
                           {"j0_positive_copies", r.j0_positive_copies.str()},
                           {"j0_negative_copies", r.j0_negative_copies.str()},
                           {"corridor_copies", join(r.corridor_copies, " ")},
                           {"matched", r.matched ? "true" : "false"}});
    } else if (c_elev->parsed()) {
      Integer n = elevation_count({parse_integer(deg_T), parse_integer(deg_s)});
      if (json)
        buf << nlohmann::json{{"elevations", json_integer(n)}}.dump() << '\n';
      else
        print_record(buf, {{"elevations", n.str()}});
    } else if (c_int->parsed()) {
      Integer n = cover_intersection(parse_integer(i_fs), parse_integer(deg_f), parse_integer(deg_s), parse_integer(deg_T));
      if (json)
        buf << nlohmann::json{{"intersection", json_integer(n)}}.dump() << '\n';
      else
        print_record(buf, {{"intersection", n.str()}});
    } else if (motegi->parsed()) {
      auto v = integer_list(pq);
      auto r = motegi_case(v[0], v[1], v[2], v[3]);
      VolumeValue sv = VolumeValue::exact(r.sv_coeff);
      if (r.torus_knots) {
        auto [spec, assignments] = motegi_spec(v[0], v[1], v[2], v[3]);
        sv = additivity_sum(spec, assignments);
        if (!sv.is_exact() || sv.coeff() != r.sv_coeff) throw InternalError("additivity disagrees with the small-image rule");
      }
      if (json)
        buf << nlohmann::json{{"h1_order", json_integer(r.h1_order)},
                              {"nontrivial_graph_manifold", r.nontrivial_graph_manifold},
                              {"sv_coeff", r.sv_coeff.to_string()},
                              {"torus_knots", r.torus_knots}}
                   .dump()
            << '\n';
      else
        buf << "H1 order " << r.h1_order << "; nontrivial graph manifold: " << (r.nontrivial_graph_manifold ? "yes" : "no")
            << "; SV = " << sv.to_string() << '\n';
      if (!json && !r.torus_knots) buf << "note: a (p, q) pair is not coprime, so no torus knot exists; arithmetic only\n";
    }
  } catch (const DomainError& e) {
    err << "error: " << e.kind() << ": " << e.what() << '\n';
    return 1;
  } catch (const CLI::Error& e) {
    err << "error: usage: " << e.what() << '\n';
    return 2;
  }
  out << buf.str();
  return 0;
}

}  // namespace svol::cli
