#pragma once

#include <limits>
#include <vector>

namespace frq {

/// Closed interval over the extended reals. Empty iff lo > hi. Bounds of
/// +-infinity express one-sided constraints; comparisons are plain IEEE
/// comparisons with no epsilon anywhere.
struct Interval {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();

  bool empty() const { return !(lo <= hi); }
  bool contains(double x) const { return lo <= x && x <= hi; }
  bool unbounded() const {
    return lo == -std::numeric_limits<double>::infinity() &&
           hi == std::numeric_limits<double>::infinity();
  }

  Interval intersect(const Interval& o) const {
    return Interval{lo > o.lo ? lo : o.lo, hi < o.hi ? hi : o.hi};
  }

  friend bool operator==(const Interval&, const Interval&) = default;
};

/// Axis-aligned box as the product of closed intervals, one per dimension.
struct Rect {
  std::vector<Interval> sides;

  std::size_t dimension() const { return sides.size(); }

  bool empty() const {
    for (const Interval& s : sides) {
      if (s.empty()) return true;
    }
    return false;
  }

  bool contains(const std::vector<double>& p) const {
    if (p.size() != sides.size()) return false;
    for (std::size_t i = 0; i < sides.size(); ++i) {
      if (!sides[i].contains(p[i])) return false;
    }
    return true;
  }

  friend bool operator==(const Rect&, const Rect&) = default;
};

using Point = std::vector<double>;

}  // namespace frq
