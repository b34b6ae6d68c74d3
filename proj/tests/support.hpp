#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "frq/rng.hpp"
#include "frq/series.hpp"

namespace frq::test {

// ---------------------------------------------------------------------------
// Generators

inline TimeSeries random_series(Rng& rng, std::size_t min_len, std::size_t max_len,
                                double lo, double hi, std::string id = "t") {
  std::size_t len = static_cast<std::size_t>(rng.uniform_int(
      static_cast<std::int64_t>(min_len), static_cast<std::int64_t>(max_len)));
  std::vector<double> v(len);
  for (double& x : v) x = rng.uniform(lo, hi);
  return make_series(std::move(id), std::move(v));
}

// Integer-valued series. Comparisons against integer radii are then exact,
// which makes translation and canonicalization properties hold bit for bit.
inline TimeSeries random_grid_series(Rng& rng, std::size_t min_len, std::size_t max_len,
                                     std::int64_t lo, std::int64_t hi,
                                     std::string id = "t") {
  std::size_t len = static_cast<std::size_t>(rng.uniform_int(
      static_cast<std::int64_t>(min_len), static_cast<std::int64_t>(max_len)));
  std::vector<double> v(len);
  for (double& x : v) x = static_cast<double>(rng.uniform_int(lo, hi));
  return make_series(std::move(id), std::move(v));
}

// Strictly alternating vertex sequence whose first edge follows `shape`.
// The result is its own canonical form.
inline std::vector<double> random_shaped_values(Rng& rng, std::size_t len, Shape shape,
                                                double scale) {
  std::vector<double> v(len);
  v[0] = rng.uniform(0.0, scale);
  for (std::size_t e = 1; e < len; ++e) {
    double step = rng.uniform(scale * 0.05, scale);
    v[e] = edge_ascending(shape, e) ? v[e - 1] + step : v[e - 1] - step;
  }
  return v;
}

// ---------------------------------------------------------------------------
// Parameter-space reference decision procedure.
//
// Classic free-space reachability over edge parameters in [0, 1], with
// divisions. An independent formulation from the production value-space
// code; matching-window endpoints are materialized as c - rho / c + rho
// before dividing so structural ties (exactly shared endpoint values) agree.

struct ParamInterval {
  double lo = 0.0;
  double hi = 0.0;
};

// Parameter range of edge a->b inside the value window [wlo, whi].
// nullopt when the edge misses the window entirely; a degenerate edge inside
// the window is unconstrained.
inline std::optional<ParamInterval> edge_params(double a, double b, double wlo,
                                                double whi) {
  if (a == b) {
    if (wlo <= a && a <= whi) {
      return ParamInterval{-std::numeric_limits<double>::infinity(),
                           std::numeric_limits<double>::infinity()};
    }
    return std::nullopt;
  }
  double t0 = (wlo - a) / (b - a);
  double t1 = (whi - a) / (b - a);
  if (t0 > t1) std::swap(t0, t1);
  return ParamInterval{t0, t1};
}

namespace detail {

struct Reach {
  double lo = 0.0;
  bool some = false;
};

inline Reach clamp01(const std::optional<ParamInterval>& p, double at_least) {
  if (!p) return {};
  double lo = std::max({p->lo, 0.0, at_least});
  double hi = std::min(p->hi, 1.0);
  if (lo > hi) return {};
  return {lo, true};
}

inline bool full01(const std::optional<ParamInterval>& p) {
  return p && p->lo <= 0.0 && p->hi >= 1.0;
}

}  // namespace detail

inline bool decide_oracle(std::span<const double> q, std::span<const double> s,
                          double rho) {
  const std::size_t n = q.size();
  const std::size_t m = s.size();
  auto corner = [&](std::size_t i, std::size_t j) {
    return q[i] - rho <= s[j] && s[j] <= q[i] + rho;
  };
  if (n == 1 || m == 1) {
    bool ok = true;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) ok = ok && corner(i, j);
    return ok;
  }
  if (!corner(0, 0)) return false;

  // q-vertex i crossing s-edge j, and s-vertex j crossing q-edge i.
  auto vfree = [&](std::size_t i, std::size_t j) {
    return edge_params(s[j], s[j + 1], q[i] - rho, q[i] + rho);
  };
  auto hfree = [&](std::size_t i, std::size_t j) {
    return edge_params(q[i], q[i + 1], s[j] - rho, s[j] + rho);
  };

  // Left column: walking up the x = 0 line needs every crossed edge fully free.
  std::vector<detail::Reach> left(m - 1);
  left[0] = detail::clamp01(vfree(0, 0), 0.0);
  bool chain = detail::full01(vfree(0, 0));
  for (std::size_t j = 1; j + 1 < m; ++j) {
    auto f = vfree(0, j);
    if (chain) left[j] = detail::clamp01(f, 0.0);
    chain = chain && detail::full01(f);
  }

  bool bottom_chain = true;
  detail::Reach top;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    detail::Reach bottom =
        bottom_chain ? detail::clamp01(hfree(i, 0), 0.0) : detail::Reach{};
    bottom_chain = bottom_chain && detail::full01(hfree(i, 0));
    for (std::size_t j = 0; j + 1 < m; ++j) {
      detail::Reach right, up;
      if (bottom.some) {
        right = detail::clamp01(vfree(i + 1, j), 0.0);
      } else if (left[j].some) {
        right = detail::clamp01(vfree(i + 1, j), left[j].lo);
      }
      if (left[j].some) {
        up = detail::clamp01(hfree(i, j + 1), 0.0);
      } else if (bottom.some) {
        up = detail::clamp01(hfree(i, j + 1), bottom.lo);
      }
      left[j] = right;
      bottom = up;
    }
    top = bottom;
  }
  return corner(n - 1, m - 1) && (left[m - 2].some || top.some);
}

inline bool decide_oracle(const TimeSeries& q, const TimeSeries& s, double rho) {
  return decide_oracle(std::span<const double>(q.values),
                       std::span<const double>(s.values), rho);
}

// Ordered two-point matching onto a single edge, again via edge parameters.
inline bool pair_on_edge_oracle(double a, double b, double c1, double c2, double rho) {
  auto p1 = edge_params(a, b, c1 - rho, c1 + rho);
  auto p2 = edge_params(a, b, c2 - rho, c2 + rho);
  if (!p1 || !p2) return false;
  double lo1 = std::max(p1->lo, 0.0);
  double hi1 = std::min(p1->hi, 1.0);
  double lo2 = std::max(p2->lo, 0.0);
  double hi2 = std::min(p2->hi, 1.0);
  return lo1 <= hi1 && lo2 <= hi2 && lo1 <= hi2;
}

}  // namespace frq::test
