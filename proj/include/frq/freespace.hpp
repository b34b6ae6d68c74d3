#pragma once

#include <span>

#include "frq/cell_sequence.hpp"
#include "frq/series.hpp"

namespace frq {

/// Set of second-curve values attained on the free part of a grid boundary.
/// In one dimension the free part of any cell boundary is a single closed
/// interval, so value intervals represent boundary free sets exactly. Empty
/// iff lo > hi.
struct ValueInterval {
  double lo = 1.0;
  double hi = 0.0;
  bool empty() const { return !(lo <= hi); }
};

/// Free-space diagram of |q(x) - s(y)| <= rho over the parameter grid
/// [1, t_q] x [1, t_s]. Exposes the per-boundary free sets the reachability
/// propagation runs on. All comparisons are closed and epsilon-free.
class FreeSpaceGrid {
 public:
  FreeSpaceGrid(std::span<const double> q, std::span<const double> s, double rho);

  std::size_t t_q() const { return q_.size(); }
  std::size_t t_s() const { return s_.size(); }

  /// Free s-values on the vertical boundary x = i crossing s-edge j.
  ValueInterval vertical_free(std::size_t i, std::size_t j) const;
  /// Free q-values on the horizontal boundary y = j crossing q-edge i.
  ValueInterval horizontal_free(std::size_t i, std::size_t j) const;
  /// Whether grid corner (i, j) lies in the free space.
  bool corner_free(std::size_t i, std::size_t j) const;

  /// Vertical free set covering the whole s-edge j at x = i.
  bool vertical_full(std::size_t i, std::size_t j) const;
  bool horizontal_full(std::size_t i, std::size_t j) const;

  int s_dir(std::size_t j) const;  // sign of s-edge j
  int q_dir(std::size_t i) const;  // sign of q-edge i

  std::span<const double> q() const { return q_; }
  std::span<const double> s() const { return s_; }
  double rho() const { return rho_; }

 private:
  std::span<const double> q_;
  std::span<const double> s_;
  double rho_;
};

/// Continuous Frechet decision d_F(q, s) <= rho via reachability propagation
/// across boundary intervals. Exact for the 1-D case: per-cell free regions
/// are convex slabs, so a monotone path exists between two free boundary
/// points iff their parameters are ordered.
bool decide_frechet(const TimeSeries& q, const TimeSeries& s, Radius rho);

/// Span form; accepts degenerate single-vertex curves (used by reach profiles).
bool decide_frechet(std::span<const double> q, std::span<const double> s, double rho);

/// Whether some monotone path through the free space traverses exactly the
/// cells of `seq` in order. Throws DimensionMismatch when the sequence grid
/// does not match the curve complexities.
bool feasible_for_sequence(const CellSequence& seq, const TimeSeries& q,
                           const TimeSeries& s, Radius rho);

bool feasible_for_sequence(const CellSequence& seq, std::span<const double> q,
                           std::span<const double> s, double rho);

}  // namespace frq
