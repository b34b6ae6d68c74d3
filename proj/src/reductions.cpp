#include "frq/reductions.hpp"

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>

#include "frq/error.hpp"
#include "frq/query_engine.hpp"

namespace frq {

namespace {

void check_unit(double v, const std::string& what) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw OutOfUnitBox(what + " " + std::to_string(v) + " outside [0, 1]");
  }
}

std::size_t instance_dimension(std::size_t box_dim, std::size_t point_dim,
                               bool have_boxes, bool have_points) {
  if (have_boxes && have_points && box_dim != point_dim) {
    throw DimensionMismatch("boxes and points disagree on dimension");
  }
  return have_boxes ? box_dim : point_dim;
}

}  // namespace

bool UnitBox::contains(const std::vector<double>& p) const {
  if (p.size() != lo.size()) return false;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    if (!(lo[i] <= p[i] && p[i] <= hi[i])) return false;
  }
  return true;
}

TimeSeries rect_to_series(std::string id, const std::vector<double>& lo,
                          const std::vector<double>& hi) {
  if (lo.size() != hi.size()) {
    throw DimensionMismatch("box bounds disagree on dimension");
  }
  std::vector<double> values;
  values.reserve(2 * lo.size());
  for (std::size_t i = 0; i < lo.size(); ++i) {
    check_unit(lo[i], "box lower bound");
    check_unit(hi[i], "box upper bound");
    if (lo[i] > hi[i]) throw OutOfUnitBox("box lower bound exceeds upper bound");
    double band = 6.0 * static_cast<double>(i + 1);
    values.push_back((hi[i] + 1.0) + band);
    values.push_back((lo[i] - 1.0) + band);
  }
  return make_series(std::move(id), std::move(values));
}

TimeSeries rect_to_series(const UnitBox& box) {
  return rect_to_series(box.id, box.lo, box.hi);
}

TimeSeries point_to_series(std::string id, const std::vector<double>& p) {
  std::vector<double> values;
  values.reserve(2 * p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    check_unit(p[i], "point coordinate");
    double band = 6.0 * static_cast<double>(i + 1);
    values.push_back((p[i] + 2.0) + band);
    values.push_back((p[i] - 2.0) + band);
  }
  return make_series(std::move(id), std::move(values));
}

TimeSeries point_to_series(const UnitPoint& point) {
  return point_to_series(point.id, point.coords);
}

std::vector<std::vector<std::string>> solve_stabbing_via_frechet(
    const std::vector<UnitBox>& boxes, const std::vector<std::vector<double>>& points,
    Backend backend) {
  if (points.empty()) return {};
  std::size_t d = instance_dimension(boxes.empty() ? 0 : boxes[0].dimension(),
                                     points[0].size(), !boxes.empty(), true);
  std::vector<TimeSeries> stored;
  stored.reserve(boxes.size());
  for (const UnitBox& box : boxes) stored.push_back(rect_to_series(box));

  FrechetIndex index(std::move(stored), Radius(1.0), 2 * d, 2 * d,
                     BuildOptions{backend, kDefaultSequenceCap});
  std::vector<std::vector<std::string>> out;
  out.reserve(points.size());
  for (const std::vector<double>& p : points) {
    out.push_back(index.query(point_to_series("query", p)));
  }
  return out;
}

std::vector<std::vector<std::string>> solve_range_via_frechet(
    const std::vector<UnitPoint>& points, const std::vector<UnitBox>& boxes,
    Backend backend) {
  if (boxes.empty()) return {};
  std::size_t d = instance_dimension(boxes[0].dimension(),
                                     points.empty() ? 0 : points[0].coords.size(), true,
                                     !points.empty());
  std::vector<TimeSeries> stored;
  stored.reserve(points.size());
  for (const UnitPoint& point : points) stored.push_back(point_to_series(point));

  PointStoreIndex index(std::move(stored), Radius(1.0), 2 * d, 2 * d,
                        BuildOptions{backend, kDefaultSequenceCap});
  std::vector<std::vector<std::string>> out;
  out.reserve(boxes.size());
  for (const UnitBox& box : boxes) {
    out.push_back(index.query(rect_to_series(box)));
  }
  return out;
}

UnitInstance scale_to_unit_box(std::vector<UnitBox> boxes, std::vector<UnitPoint> points) {
  std::size_t d = instance_dimension(boxes.empty() ? 0 : boxes[0].dimension(),
                                     points.empty() ? 0 : points[0].coords.size(),
                                     !boxes.empty(), !points.empty());
  std::vector<double> lo(d, std::numeric_limits<double>::infinity());
  std::vector<double> hi(d, -std::numeric_limits<double>::infinity());
  auto widen = [&](const std::vector<double>& v) {
    if (v.size() != d) throw DimensionMismatch("instance dimensions disagree");
    for (std::size_t i = 0; i < d; ++i) {
      if (!std::isfinite(v[i])) throw OutOfUnitBox("coordinate is not finite");
      lo[i] = std::min(lo[i], v[i]);
      hi[i] = std::max(hi[i], v[i]);
    }
  };
  for (const UnitBox& box : boxes) {
    widen(box.lo);
    widen(box.hi);
  }
  for (const UnitPoint& point : points) widen(point.coords);

  auto rescale = [&](std::vector<double>& v) {
    for (std::size_t i = 0; i < d; ++i) {
      double span = hi[i] - lo[i];
      // Rounding keeps (x - lo) / span weakly increasing in x and lands the
      // extremes on 0 and 1 exactly, so containment survives unchanged.
      v[i] = span > 0.0 ? (v[i] - lo[i]) / span : 0.5;
    }
  };
  for (UnitBox& box : boxes) {
    rescale(box.lo);
    rescale(box.hi);
  }
  for (UnitPoint& point : points) rescale(point.coords);
  return UnitInstance{std::move(boxes), std::move(points)};
}

}  // namespace frq
