#pragma once

#include <optional>
#include <vector>

#include "redscope/arith.hpp"

namespace redscope {

struct Segment {
  Rational slope;
  i64 multiplicity = 0;

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Convex polygon starting at the origin, stored as segments with strictly
/// increasing slopes. Used for both Newton and Hodge polygons.
class Polygon {
 public:
  Polygon() = default;
  /// Throws ErrorKind::InvalidPolygon unless slopes strictly increase and
  /// multiplicities are positive.
  explicit Polygon(std::vector<Segment> segments);

  /// Groups an arbitrary slope list (one entry per unit of width).
  static Polygon from_slopes(std::vector<Rational> slopes);

  const std::vector<Segment>& segments() const noexcept { return segments_; }
  i64 width() const noexcept;
  Rational height() const;
  /// Ordinate at abscissa x in [0, width].
  Rational ordinate_at(i64 x) const;
  i64 multiplicity_of(const Rational& slope) const;
  std::vector<Rational> expanded_slopes() const;

  friend bool operator==(const Polygon&, const Polygon&) = default;

 private:
  std::vector<Segment> segments_;
};

/// p-adic valuation of one coefficient; nullopt stands for +infinity (a
/// vanishing coefficient) and is left out of the hull.
using Valuation = std::optional<Rational>;

/// Lower convex hull of the points (i, v_i) with finite valuation.
/// Throws ErrorKind::DegenerateInput with fewer than two finite points and
/// ErrorKind::Domain when the index-0 valuation is infinite.
Polygon newton_polygon(const std::vector<Valuation>& vals);

/// Slope j repeated h[j] times. Throws ErrorKind::DegenerateInput when all
/// entries are zero, ErrorKind::Domain on a negative entry.
Polygon hodge_polygon(const std::vector<i64>& hodge_numbers);

struct MazurComparison {
  bool above = false;
  bool same_endpoints = false;

  friend bool operator==(const MazurComparison&, const MazurComparison&) = default;
};

/// Compares ordinates at every integer abscissa. Throws ErrorKind::Domain
/// on a width mismatch.
MazurComparison lies_above(const Polygon& newton, const Polygon& hodge);

/// Trace of Frobenius on a cohomology group of dimension d.
struct TraceDatum {
  i64 a_v = 0;
  u64 p = 0;
  i64 d = 0;
};

/// |a_v| <= d * p.
bool weil_bound_check(const TraceDatum& t);

/// The implication "non-ordinary => p | a_v" holds for this datum.
bool trace_divisibility_check(const TraceDatum& t, bool non_ordinary);

struct K3Status {
  bool ordinary = false;
  bool finite_height = false;

  friend bool operator==(const K3Status&, const K3Status&) = default;
};

/// Ordinarity and finite height from the Newton polygon of H^2 of a K3
/// surface. Throws ErrorKind::InvalidPolygon unless the width is 22 and the
/// slopes lie in [0,2] symmetric about 1.
K3Status k3_status(const Polygon& newton_h2);

}  // namespace redscope
