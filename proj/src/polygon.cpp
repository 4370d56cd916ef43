#include "redscope/polygon.hpp"

#include <algorithm>
#include <cstdlib>

#include "redscope/errors.hpp"

namespace redscope {

Polygon::Polygon(std::vector<Segment> segments) : segments_(std::move(segments)) {
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    if (segments_[i].multiplicity <= 0) fail(ErrorKind::InvalidPolygon, "segment multiplicity must be positive");
    if (i > 0 && !(segments_[i - 1].slope < segments_[i].slope)) {
      fail(ErrorKind::InvalidPolygon, "segment slopes must strictly increase");
    }
  }
}

Polygon Polygon::from_slopes(std::vector<Rational> slopes) {
  std::sort(slopes.begin(), slopes.end());
  std::vector<Segment> segs;
  for (const auto& s : slopes) {
    if (!segs.empty() && segs.back().slope == s) {
      ++segs.back().multiplicity;
    } else {
      segs.push_back({s, 1});
    }
  }
  return Polygon(std::move(segs));
}

i64 Polygon::width() const noexcept {
  i64 w = 0;
  for (const auto& s : segments_) w += s.multiplicity;
  return w;
}

Rational Polygon::height() const {
  Rational h(0);
  for (const auto& s : segments_) h += s.slope * s.multiplicity;
  return h;
}

Rational Polygon::ordinate_at(i64 x) const {
  if (x < 0 || x > width()) fail(ErrorKind::Domain, "abscissa outside polygon");
  Rational y(0);
  for (const auto& s : segments_) {
    i64 step = std::min(x, s.multiplicity);
    y += s.slope * step;
    x -= step;
    if (x == 0) break;
  }
  return y;
}

i64 Polygon::multiplicity_of(const Rational& slope) const {
  for (const auto& s : segments_) {
    if (s.slope == slope) return s.multiplicity;
  }
  return 0;
}

std::vector<Rational> Polygon::expanded_slopes() const {
  std::vector<Rational> out;
  for (const auto& s : segments_) out.insert(out.end(), static_cast<std::size_t>(s.multiplicity), s.slope);
  return out;
}

Polygon newton_polygon(const std::vector<Valuation>& vals) {
  if (vals.empty() || !vals.front()) {
    fail(ErrorKind::Domain, "valuation of the constant term must be finite");
  }
  struct Point {
    i64 x;
    Rational y;
  };
  std::vector<Point> pts;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    if (vals[i]) pts.push_back({static_cast<i64>(i), *vals[i]});
  }
  if (pts.size() < 2) fail(ErrorKind::DegenerateInput, "Newton polygon needs at least two finite points");

  // Monotone chain; collinear points are dropped so slopes strictly increase.
  std::vector<Point> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      Rational slope_ab = (b.y - a.y) / (b.x - a.x);
      Rational slope_bp = (pt.y - b.y) / (pt.x - b.x);
      if (slope_bp <= slope_ab) {
        hull.pop_back();
      } else {
        break;
      }
    }
    hull.push_back(pt);
  }
  std::vector<Segment> segs;
  for (std::size_t i = 1; i < hull.size(); ++i) {
    i64 dx = hull[i].x - hull[i - 1].x;
    segs.push_back({(hull[i].y - hull[i - 1].y) / dx, dx});
  }
  return Polygon(std::move(segs));
}

Polygon hodge_polygon(const std::vector<i64>& hodge_numbers) {
  std::vector<Segment> segs;
  for (std::size_t j = 0; j < hodge_numbers.size(); ++j) {
    if (hodge_numbers[j] < 0) fail(ErrorKind::Domain, "Hodge numbers must be nonnegative");
    if (hodge_numbers[j] > 0) segs.push_back({Rational(static_cast<i64>(j)), hodge_numbers[j]});
  }
  if (segs.empty()) fail(ErrorKind::DegenerateInput, "all Hodge numbers are zero");
  return Polygon(std::move(segs));
}

MazurComparison lies_above(const Polygon& newton, const Polygon& hodge) {
  const i64 w = newton.width();
  if (w != hodge.width()) {
    fail(ErrorKind::Domain, "Newton width " + std::to_string(w) + " differs from Hodge width " +
                                std::to_string(hodge.width()));
  }
  MazurComparison out;
  out.above = true;
  for (i64 x = 0; x <= w; ++x) {
    if (newton.ordinate_at(x) < hodge.ordinate_at(x)) {
      out.above = false;
      break;
    }
  }
  out.same_endpoints = newton.height() == hodge.height();
  return out;
}

bool weil_bound_check(const TraceDatum& t) {
  const i128 bound = static_cast<i128>(t.d) * static_cast<i128>(t.p);
  const i128 a = t.a_v < 0 ? -static_cast<i128>(t.a_v) : static_cast<i128>(t.a_v);
  return a <= bound;
}

bool trace_divisibility_check(const TraceDatum& t, bool non_ordinary) {
  if (!non_ordinary) return true;
  if (t.p == 0) return false;
  const i128 a = t.a_v;
  return a % static_cast<i128>(t.p) == 0;
}

K3Status k3_status(const Polygon& newton_h2) {
  if (newton_h2.width() != 22) fail(ErrorKind::InvalidPolygon, "K3 H^2 polygon must have width 22");
  const auto& segs = newton_h2.segments();
  for (const auto& s : segs) {
    if (s.slope < 0 || s.slope > 2) fail(ErrorKind::InvalidPolygon, "K3 slopes must lie in [0,2]");
    if (newton_h2.multiplicity_of(Rational(2) - s.slope) != s.multiplicity) {
      fail(ErrorKind::InvalidPolygon, "K3 slopes must be symmetric about 1");
    }
  }
  return {newton_h2.multiplicity_of(Rational(0)) == 1, segs.front().slope < 1};
}

}  // namespace redscope
