#pragma once

#include <string>
#include <vector>

#include "frq/backend.hpp"
#include "frq/series.hpp"

namespace frq {

/// Axis-aligned box inside the closed unit cube.
struct UnitBox {
  std::string id;
  std::vector<double> lo;
  std::vector<double> hi;

  std::size_t dimension() const { return lo.size(); }
  bool contains(const std::vector<double>& p) const;
};

struct UnitPoint {
  std::string id;
  std::vector<double> coords;
};

/// Series image of a box: per dimension one vertex just above the upper bound
/// and one just below the lower bound, lifted onto a value band of its own so
/// bands never interact. Throws OutOfUnitBox unless 0 <= lo <= hi <= 1.
TimeSeries rect_to_series(std::string id, const std::vector<double>& lo,
                          const std::vector<double>& hi);
TimeSeries rect_to_series(const UnitBox& box);

/// Series image of a point in the unit cube, on the same value bands. The
/// point lies in a box iff the two images are within Frechet distance one.
TimeSeries point_to_series(std::string id, const std::vector<double>& p);
TimeSeries point_to_series(const UnitPoint& point);

/// Point-in-box reporting answered by Frechet queries at radius one over the
/// box images. Row r lists ids of the boxes containing points[r], sorted.
std::vector<std::vector<std::string>> solve_stabbing_via_frechet(
    const std::vector<UnitBox>& boxes, const std::vector<std::vector<double>>& points,
    Backend backend = Backend::naive);

/// Role-swapped: stores the point images, queries with the box images.
/// Row r lists ids of the points inside boxes[r], sorted.
std::vector<std::vector<std::string>> solve_range_via_frechet(
    const std::vector<UnitPoint>& points, const std::vector<UnitBox>& boxes,
    Backend backend = Backend::naive);

/// Joint min-max rescaling of an arbitrary finite instance into the unit
/// cube. Containment is preserved exactly: each dimension maps through one
/// weakly increasing function shared by boxes and points; a dimension with no
/// spread collapses to 0.5.
struct UnitInstance {
  std::vector<UnitBox> boxes;
  std::vector<UnitPoint> points;
};

UnitInstance scale_to_unit_box(std::vector<UnitBox> boxes, std::vector<UnitPoint> points);

}  // namespace frq
