#pragma once

#include <string>
#include <vector>

#include "svol/errors.hpp"
#include "svol/exact.hpp"

namespace svol {

/// Covering data of a boundary torus: [T~ : T] and the degree [s~ : s] with
/// which an elevation of a chosen slope covers it.
struct TorusCoverDatum {
  Integer deg_T;
  Integer deg_s;
};

/// Number of elevations of the slope: [T~:T] / [s~:s].
inline Integer elevation_count(const TorusCoverDatum& datum) {
  if (datum.deg_T <= 0 || datum.deg_s <= 0) throw DomainError("precondition", "covering degrees must be positive");
  if (datum.deg_T % datum.deg_s != 0)
    throw DomainError("inconsistent", "slope degree " + datum.deg_s.str() + " does not divide torus degree " + datum.deg_T.str());
  return datum.deg_T / datum.deg_s;
}

struct MergeCounts {
  Integer D;
  std::vector<Integer> copies;
  Integer per_torus_elevations;
};

/// Copy counts for merging covers of degrees d_i whose boundary tori are
/// m-characteristic: D = lcm(d_i), D/d_i copies of piece i, and D/m
/// elevations of every boundary torus on either side.
inline MergeCounts merge_copy_counts(const std::vector<Integer>& piece_degrees, const Integer& m) {
  if (piece_degrees.empty()) throw DomainError("precondition", "need at least one piece degree");
  if (m <= 0) throw DomainError("precondition", "m must be positive");
  MergeCounts out{1, {}, 0};
  for (const auto& d : piece_degrees) {
    if (d <= 0) throw DomainError("precondition", "piece degrees must be positive");
    if (d % m != 0) throw DomainError("precondition", "m = " + m.str() + " does not divide piece degree " + d.str());
    out.D = lcm(out.D, d);
  }
  out.per_torus_elevations = out.D / m;
  for (const auto& d : piece_degrees) {
    out.copies.push_back(out.D / d);
    // (D/d_i) copies, each with d_i/m elevations of the torus.
    Integer from_piece = (out.D / d) * (d / m);
    if (from_piece != out.per_torus_elevations)
      throw InternalError("elevation count from piece of degree " + d.str() + " is " + from_piece.str() + ", expected " +
                          out.per_torus_elevations.str());
  }
  return out;
}

struct ColoredMergeCounts {
  Integer K;
  Integer j0_positive_copies;
  Integer j0_negative_copies;
  std::vector<Integer> corridor_copies;
  bool matched = false;
};

/// Colored merging: K = lcm(k_i), K positive and K negative copies of J0,
/// and l_i K / k_i copies of corridor i. The positively (and negatively)
/// colored elevations on torus i must agree from both sides.
inline ColoredMergeCounts colored_merge_counts(const std::vector<Integer>& k_values, const std::vector<Integer>& l_values) {
  if (k_values.size() != l_values.size()) throw DomainError("precondition", "k and l lists must have equal length");
  if (k_values.empty()) throw DomainError("precondition", "need at least one corridor");
  ColoredMergeCounts out;
  out.K = 1;
  for (std::size_t i = 0; i < k_values.size(); ++i) {
    if (k_values[i] <= 0 || l_values[i] <= 0) throw DomainError("precondition", "k and l values must be positive");
    out.K = lcm(out.K, k_values[i]);
  }
  out.j0_positive_copies = out.K;
  out.j0_negative_copies = out.K;
  out.matched = true;
  for (std::size_t i = 0; i < k_values.size(); ++i) {
    Integer copies = l_values[i] * out.K / k_values[i];
    out.corridor_copies.push_back(copies);
    Integer corridor_side = copies * k_values[i];
    Integer positive_side = out.j0_positive_copies * l_values[i];
    Integer negative_side = out.j0_negative_copies * l_values[i];
    out.matched = out.matched && corridor_side == positive_side && corridor_side == negative_side;
  }
  if (!out.matched) throw InternalError("colored elevation counts do not match");
  return out;
}

}  // namespace svol
