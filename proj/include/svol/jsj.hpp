#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "svol/ehn.hpp"
#include "svol/errors.hpp"
#include "svol/exact.hpp"
#include "svol/seifert.hpp"

namespace svol {

/// Slope c_s * s + c_h * h in a (section, fiber) basis of a boundary torus.
using Slope = std::array<Integer, 2>;
/// Maps side-A (section, fiber) coordinates to side-B coordinates: v_B = M v_A.
using GluingMatrix = std::array<std::array<Integer, 2>, 2>;

inline Slope map_slope(const GluingMatrix& m, const Slope& v) {
  return {m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
}

inline Integer determinant(const GluingMatrix& m) { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }

inline bool is_primitive(const Slope& v) { return gcd(v[0], v[1]) == 1; }

inline bool same_unoriented_slope(const Slope& x, const Slope& y) {
  return (x[0] == y[0] && x[1] == y[1]) || (x[0] == -y[0] && x[1] == -y[1]);
}

inline std::string to_string(const Slope& v) { return "(" + v[0].str() + "," + v[1].str() + ")"; }

enum class PieceKind { Seifert, Hyperbolic };

struct Piece {
  std::string id;
  PieceKind kind = PieceKind::Seifert;
  SeifertInvariants seifert;  // Seifert pieces: boundary_count = number of slots
  std::string label;          // hyperbolic pieces
  std::size_t slots = 0;
};

struct Endpoint {
  std::string piece;
  std::size_t slot = 0;
};

struct Edge {
  Endpoint a;
  Endpoint b;
  GluingMatrix gluing{};
  std::optional<Slope> killed_slope;    // side-A coordinates
  std::optional<Slope> killed_slope_b;  // optional declaration from side B
};

struct GraphManifoldSpec {
  std::vector<Piece> pieces;
  std::vector<Edge> edges;

  const Piece* find(const std::string& id) const {
    for (const auto& p : pieces)
      if (p.id == id) return &p;
    return nullptr;
  }
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

inline ValidationReport validate_spec(const GraphManifoldSpec& spec) {
  ValidationReport report;
  auto fail = [&](std::string msg) { report.violations.push_back(std::move(msg)); };

  std::set<std::string> ids;
  for (const auto& p : spec.pieces) {
    if (!ids.insert(p.id).second) fail("duplicate piece id '" + p.id + "'");
    if (p.kind == PieceKind::Seifert && p.seifert.boundary_count() != Integer(p.slots))
      fail("piece '" + p.id + "': slot count differs from Seifert boundary count");
    // A lone closed Seifert manifold is accepted as a degenerate graph.
    bool degenerate = spec.pieces.size() == 1 && spec.edges.empty();
    if (p.kind == PieceKind::Seifert && p.slots == 0 && !degenerate)
      fail("piece '" + p.id + "': Seifert JSJ piece must have boundary");
  }

  std::set<std::pair<std::string, std::size_t>> used;
  for (std::size_t e = 0; e < spec.edges.size(); ++e) {
    const auto& edge = spec.edges[e];
    std::string where = "edge " + std::to_string(e) + ": ";
    for (const Endpoint* end : {&edge.a, &edge.b}) {
      const Piece* p = spec.find(end->piece);
      if (!p) {
        fail(where + "unknown piece '" + end->piece + "'");
        continue;
      }
      if (end->slot >= p->slots) fail(where + "slot " + std::to_string(end->slot) + " out of range for '" + p->id + "'");
      if (!used.insert({end->piece, end->slot}).second)
        fail(where + "slot " + std::to_string(end->slot) + " of '" + end->piece + "' used more than once");
    }
    if (determinant(edge.gluing) != -1)
      fail(where + "gluing determinant is " + determinant(edge.gluing).str() + ", expected -1");
    if (edge.killed_slope && !is_primitive(*edge.killed_slope))
      fail(where + "killed slope " + to_string(*edge.killed_slope) + " is not primitive");
    if (edge.killed_slope_b && !is_primitive(*edge.killed_slope_b))
      fail(where + "side-B killed slope " + to_string(*edge.killed_slope_b) + " is not primitive");
    if (edge.killed_slope && edge.killed_slope_b) {
      Slope pushed = map_slope(edge.gluing, *edge.killed_slope);
      if (!same_unoriented_slope(pushed, *edge.killed_slope_b))
        fail(where + "killed slope maps to " + to_string(pushed) + " but side B declares " + to_string(*edge.killed_slope_b));
    }
  }
  return report;
}

inline bool is_closed(const GraphManifoldSpec& spec) {
  std::size_t slots = 0;
  for (const auto& p : spec.pieces) slots += p.slots;
  return slots == 2 * spec.edges.size();
}

struct PieceAssignment {
  /// Dehn filling of every boundary slot of a Seifert piece along its killed
  /// slope, with a chosen volume of the filled closed manifold.
  struct FilledSeifert {
    std::vector<Slope> fillings;  // per slot, (c_s, c_h) in the piece's basis
    Rational coeff;
  };
  struct Direct {
    VolumeValue volume;
  };
  /// Image infinite cyclic or finite: contributes zero.
  struct SmallImage {};

  std::string piece;
  std::variant<FilledSeifert, Direct, SmallImage> value;
};

namespace detail {

/// The killed slope at (piece, slot), in that piece's coordinates.
inline std::optional<Slope> killed_slope_at(const GraphManifoldSpec& spec, const std::string& piece, std::size_t slot) {
  for (const auto& edge : spec.edges) {
    if (edge.a.piece == piece && edge.a.slot == slot) {
      if (edge.killed_slope) return edge.killed_slope;
      if (edge.killed_slope_b) {
        // Invert the unimodular gluing matrix.
        const auto& m = edge.gluing;
        Integer det = determinant(m);
        GluingMatrix inv{{{m[1][1] * det, -m[0][1] * det}, {-m[1][0] * det, m[0][0] * det}}};
        return map_slope(inv, *edge.killed_slope_b);
      }
      return std::nullopt;
    }
    if (edge.b.piece == piece && edge.b.slot == slot) {
      if (edge.killed_slope_b) return edge.killed_slope_b;
      if (edge.killed_slope) return map_slope(edge.gluing, *edge.killed_slope);
      return std::nullopt;
    }
  }
  return std::nullopt;
}

inline Rational filled_contribution(const GraphManifoldSpec& spec, const Piece& piece, const PieceAssignment::FilledSeifert& f) {
  if (piece.kind != PieceKind::Seifert)
    throw DomainError("precondition", "piece '" + piece.id + "' is not Seifert; cannot use filled_seifert");
  if (f.fillings.size() != piece.slots)
    throw DomainError("inconsistent", "piece '" + piece.id + "' has " + std::to_string(piece.slots) + " slots but " +
                                          std::to_string(f.fillings.size()) + " fillings");
  std::vector<FiberPair> pairs;
  for (std::size_t slot = 0; slot < piece.slots; ++slot) {
    auto killed = killed_slope_at(spec, piece.id, slot);
    if (!killed)
      throw DomainError("inconsistent", "piece '" + piece.id + "' slot " + std::to_string(slot) + " has no killed slope");
    const Slope& fill = f.fillings[slot];
    if (!same_unoriented_slope(fill, *killed))
      throw DomainError("inconsistent", "piece '" + piece.id + "' slot " + std::to_string(slot) + ": filling " +
                                            to_string(fill) + " does not match killed slope " + to_string(*killed));
    Slope v = fill[0] < 0 ? Slope{-fill[0], -fill[1]} : fill;
    pairs.push_back(FiberPair{v[0], v[1]});
  }
  SeifertInvariants closed = dehn_fill(piece.seifert, pairs);
  if (closed.genus() == 0 && classify_geometry(closed) == GeometryTag::SL2R_tilde)
    throw DomainError("precondition", "filled piece '" + piece.id + "' has base genus 0; its volume set is not supported");
  if (classify_geometry(closed) == GeometryTag::Other) {
    if (!f.coeff.is_zero())
      throw DomainError("not-attained", "filled piece '" + piece.id + "' " + to_string(closed) +
                                            " is not SL2R~; only volume 0 is attained");
    return f.coeff;
  }
  auto values = volume_set(closed);
  if (!std::binary_search(values.begin(), values.end(), f.coeff))
    throw DomainError("not-attained", "coefficient " + f.coeff.to_string() + " is not in the volume set of filled piece '" +
                                          piece.id + "' " + to_string(closed));
  return f.coeff;
}

}  // namespace detail

/// Sum of piece volumes over the JSJ graph: filled Seifert pieces contribute
/// their chosen coefficient, direct pieces their given value and pieces with
/// small image zero. Glueability of the boundary representations is the
/// caller's assertion; only slope compatibility is checked.
inline VolumeValue additivity_sum(const GraphManifoldSpec& spec, const std::vector<PieceAssignment>& assignments) {
  auto report = validate_spec(spec);
  if (!report.ok()) throw DomainError("inconsistent", "invalid graph manifold: " + report.violations.front());

  std::map<std::string, const PieceAssignment*> by_piece;
  for (const auto& a : assignments) {
    if (!spec.find(a.piece)) throw DomainError("inconsistent", "assignment for unknown piece '" + a.piece + "'");
    if (!by_piece.emplace(a.piece, &a).second) throw DomainError("inconsistent", "piece '" + a.piece + "' assigned twice");
  }

  std::vector<VolumeValue> contributions;
  for (const auto& piece : spec.pieces) {
    auto it = by_piece.find(piece.id);
    if (it == by_piece.end()) throw DomainError("inconsistent", "piece '" + piece.id + "' has no assignment");
    const auto& value = it->second->value;
    if (auto* f = std::get_if<PieceAssignment::FilledSeifert>(&value))
      contributions.push_back(VolumeValue::exact(detail::filled_contribution(spec, piece, *f)));
    else if (auto* dv = std::get_if<PieceAssignment::Direct>(&value))
      contributions.push_back(dv->volume);
    else
      contributions.push_back(VolumeValue::exact(0));
  }
  return volume_sum(contributions);
}

// ---------------------------------------------------------------------------
// Cycle consistency of fiber-intersection ratios.

struct RatioEdge {
  std::size_t from = 0;
  std::size_t to = 0;
  Rational ratio;  // traversing from -> to multiplies by ratio, to -> from by 1/ratio
};

struct RatioGraph {
  std::size_t vertex_count = 0;
  std::vector<RatioEdge> edges;
};

struct CycleStep {
  std::size_t edge = 0;
  bool forward = true;
  friend bool operator==(const CycleStep&, const CycleStep&) = default;
};

struct RwResult {
  bool consistent = true;
  std::vector<Rational> potentials;  // p(to) = p(from) * ratio on every tree edge
  std::vector<CycleStep> witness;    // closed walk with product != 1 when inconsistent
  Rational witness_product{1};
};

/// Product of ratios along a walk; throws if the steps are not a closed walk.
inline Rational cycle_product(const RatioGraph& g, const std::vector<CycleStep>& steps) {
  if (steps.empty()) throw DomainError("precondition", "empty cycle");
  Rational product(1);
  const auto& first = g.edges.at(steps.front().edge);
  std::size_t start = steps.front().forward ? first.from : first.to;
  std::size_t at = start;
  for (const auto& s : steps) {
    const auto& e = g.edges.at(s.edge);
    std::size_t tail = s.forward ? e.from : e.to;
    if (tail != at) throw DomainError("precondition", "steps do not form a walk");
    at = s.forward ? e.to : e.from;
    product *= s.forward ? e.ratio : e.ratio.reciprocal();
  }
  if (at != start) throw DomainError("precondition", "walk is not closed");
  return product;
}

/// Assigns multiplicative potentials on a BFS spanning forest and checks
/// every non-tree edge; returns the first fundamental cycle whose product
/// differs from 1.
inline RwResult rw_consistency(const RatioGraph& g) {
  const std::size_t n = g.vertex_count;
  for (const auto& e : g.edges) {
    if (e.from >= n || e.to >= n) throw DomainError("precondition", "edge endpoint out of range");
    if (e.ratio.sign() <= 0) throw DomainError("precondition", "edge ratios must be positive");
  }
  std::vector<std::vector<std::size_t>> incident(n);
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    incident[g.edges[i].from].push_back(i);
    if (g.edges[i].to != g.edges[i].from) incident[g.edges[i].to].push_back(i);
  }

  RwResult result;
  result.potentials.assign(n, Rational(1));
  std::vector<bool> seen(n, false);
  std::vector<std::optional<CycleStep>> parent(n);  // step from parent into v
  std::vector<std::size_t> depth(n, 0);
  std::vector<bool> tree_edge(g.edges.size(), false);
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    std::queue<std::size_t> q;
    q.push(root);
    while (!q.empty()) {
      std::size_t u = q.front();
      q.pop();
      for (std::size_t ei : incident[u]) {
        const auto& e = g.edges[ei];
        bool forward = e.from == u;
        std::size_t v = forward ? e.to : e.from;
        if (seen[v]) continue;
        seen[v] = true;
        tree_edge[ei] = true;
        parent[v] = CycleStep{ei, forward};
        depth[v] = depth[u] + 1;
        result.potentials[v] = forward ? result.potentials[u] * e.ratio : result.potentials[u] / e.ratio;
        q.push(v);
      }
    }
  }

  auto parent_vertex = [&](std::size_t v) {
    const auto& e = g.edges[parent[v]->edge];
    return parent[v]->forward ? e.from : e.to;
  };

  for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
    if (tree_edge[ei]) continue;
    const auto& e = g.edges[ei];
    Rational closing = result.potentials[e.from] * e.ratio / result.potentials[e.to];
    if (closing == Rational(1)) continue;

    // Walk: e.to -> (tree) -> e.from, then the edge itself.
    std::vector<CycleStep> up_from_to;    // from e.to up to the common ancestor (reversed tree steps)
    std::vector<CycleStep> up_from_from;  // from e.from up to the common ancestor
    std::size_t x = e.to;
    std::size_t y = e.from;
    while (depth[x] > depth[y]) {
      up_from_to.push_back({parent[x]->edge, !parent[x]->forward});
      x = parent_vertex(x);
    }
    while (depth[y] > depth[x]) {
      up_from_from.push_back(*parent[y]);
      y = parent_vertex(y);
    }
    while (x != y) {
      up_from_to.push_back({parent[x]->edge, !parent[x]->forward});
      x = parent_vertex(x);
      up_from_from.push_back(*parent[y]);
      y = parent_vertex(y);
    }
    result.witness = up_from_to;
    result.witness.insert(result.witness.end(), up_from_from.rbegin(), up_from_from.rend());
    result.witness.push_back({ei, true});
    result.witness_product = cycle_product(g, result.witness);
    if (result.witness_product != closing) throw InternalError("witness cycle product disagrees with potentials");
    result.consistent = false;
    return result;
  }
  return result;
}

// ---------------------------------------------------------------------------

/// i(f~, s~) = i(f, s) [f~:f][s~:s] / [T~:T]; must be a positive integer.
inline Integer cover_intersection(const Integer& i_fs, const Integer& deg_f, const Integer& deg_s, const Integer& deg_T) {
  if (i_fs <= 0 || deg_f <= 0 || deg_s <= 0 || deg_T <= 0)
    throw DomainError("precondition", "intersection number and covering degrees must be positive");
  Integer num = i_fs * deg_f * deg_s;
  if (num % deg_T != 0)
    throw DomainError("inconsistent", "intersection number " + Rational(num, deg_T).to_string() + " is not integral");
  return num / deg_T;
}

struct MotegiCase {
  Integer h1_order;
  bool nontrivial_graph_manifold = false;
  Rational sv_coeff;
  bool torus_knots = true;  // false when a pair is not coprime: arithmetic only
};

/// Motegi's graph manifold glued from the (p1,q1) and (p2,q2) torus knot
/// exteriors: H_1 is cyclic of order p1 p2 q1 q2 - 1, every representation
/// has small image, so the Seifert volume vanishes. Non-coprime pairs are
/// evaluated arithmetically and flagged; motegi_spec rejects them.
inline MotegiCase motegi_case(const Integer& p1, const Integer& q1, const Integer& p2, const Integer& q2) {
  for (const Integer* v : {&p1, &q1, &p2, &q2})
    if (*v < 2) throw DomainError("precondition", "torus knot parameters must be >= 2");
  MotegiCase out;
  out.torus_knots = gcd(p1, q1) == 1 && gcd(p2, q2) == 1;
  out.h1_order = p1 * p2 * q1 * q2 - 1;
  out.nontrivial_graph_manifold = out.h1_order > 15;
  out.sv_coeff = 0;
  return out;
}

namespace detail {

/// Exceptional pairs b1/p, b2/q of a torus knot exterior with b1 q + b2 p = 1.
inline std::vector<FiberPair> torus_knot_pairs(const Integer& p, const Integer& q) {
  for (Integer b1 = 0; b1 < p; ++b1) {
    Integer rest = 1 - b1 * q;
    if (rest % p == 0) return {FiberPair{p, b1}, FiberPair{q, rest / p}};
  }
  throw DomainError("precondition", "p and q must be coprime");
}

}  // namespace detail

/// The closed graph manifold of motegi_case: two torus knot exteriors glued by
/// t1 -> m2, m1 -> t2, with each piece assigned small image.
inline std::pair<GraphManifoldSpec, std::vector<PieceAssignment>> motegi_spec(const Integer& p1, const Integer& q1,
                                                                              const Integer& p2, const Integer& q2) {
  motegi_case(p1, q1, p2, q2);
  if (gcd(p1, q1) != 1) throw DomainError("precondition", "gcd(p1, q1) must be 1");
  if (gcd(p2, q2) != 1) throw DomainError("precondition", "gcd(p2, q2) must be 1");
  GraphManifoldSpec spec;
  spec.pieces.push_back({"E1", PieceKind::Seifert, SeifertInvariants(0, detail::torus_knot_pairs(p1, q1), 1), "", 1});
  spec.pieces.push_back({"E2", PieceKind::Seifert, SeifertInvariants(0, detail::torus_knot_pairs(p2, q2), 1), "", 1});
  Edge e;
  e.a = {"E1", 0};
  e.b = {"E2", 0};
  e.gluing = GluingMatrix{{{0, 1}, {1, 0}}};
  spec.edges.push_back(e);
  std::vector<PieceAssignment> assignments = {{"E1", PieceAssignment::SmallImage{}}, {"E2", PieceAssignment::SmallImage{}}};
  return {spec, assignments};
}

}  // namespace svol
