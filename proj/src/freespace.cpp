#include "frq/freespace.hpp"

#include <algorithm>
#include <cassert>
#include <vector>

#include "frq/error.hpp"

namespace frq {

namespace {

ValueInterval intersect(ValueInterval a, ValueInterval b) {
  return ValueInterval{std::max(a.lo, b.lo), std::min(a.hi, b.hi)};
}

ValueInterval edge_span(double a, double b) {
  return ValueInterval{std::min(a, b), std::max(a, b)};
}

/// Portion of `free` at or above the lowest reachable parameter of `prev`,
/// where both intervals live on the same directed edge. A positive direction
/// means parameter order equals value order; negative reverses it; on a
/// constant edge every value interval spans the whole boundary, so a nonempty
/// predecessor imposes no cut.
ValueInterval cut_low(ValueInterval free, ValueInterval prev, int dir) {
  if (prev.empty()) return ValueInterval{};
  if (dir > 0) return ValueInterval{std::max(free.lo, prev.lo), free.hi};
  if (dir < 0) return ValueInterval{free.lo, std::min(free.hi, prev.hi)};
  return free;
}

int sign(double d) { return d > 0 ? 1 : (d < 0 ? -1 : 0); }

}  // namespace

FreeSpaceGrid::FreeSpaceGrid(std::span<const double> q, std::span<const double> s,
                             double rho)
    : q_(q), s_(s), rho_(rho) {}

ValueInterval FreeSpaceGrid::vertical_free(std::size_t i, std::size_t j) const {
  assert(i >= 1 && i <= t_q() && j >= 1 && j + 1 <= t_s());
  ValueInterval ball{q_[i - 1] - rho_, q_[i - 1] + rho_};
  return intersect(edge_span(s_[j - 1], s_[j]), ball);
}

ValueInterval FreeSpaceGrid::horizontal_free(std::size_t i, std::size_t j) const {
  assert(i >= 1 && i + 1 <= t_q() && j >= 1 && j <= t_s());
  ValueInterval ball{s_[j - 1] - rho_, s_[j - 1] + rho_};
  return intersect(edge_span(q_[i - 1], q_[i]), ball);
}

bool FreeSpaceGrid::corner_free(std::size_t i, std::size_t j) const {
  assert(i >= 1 && i <= t_q() && j >= 1 && j <= t_s());
  // Oriented around the q-vertex so that curves compared against ramps built
  // from their own values shifted by exactly rho keep those ties exact.
  return q_[i - 1] - rho_ <= s_[j - 1] && s_[j - 1] <= q_[i - 1] + rho_;
}

bool FreeSpaceGrid::vertical_full(std::size_t i, std::size_t j) const {
  ValueInterval span = edge_span(s_[j - 1], s_[j]);
  return q_[i - 1] - rho_ <= span.lo && span.hi <= q_[i - 1] + rho_;
}

bool FreeSpaceGrid::horizontal_full(std::size_t i, std::size_t j) const {
  ValueInterval span = edge_span(q_[i - 1], q_[i]);
  return s_[j - 1] - rho_ <= span.lo && span.hi <= s_[j - 1] + rho_;
}

int FreeSpaceGrid::s_dir(std::size_t j) const { return sign(s_[j] - s_[j - 1]); }
int FreeSpaceGrid::q_dir(std::size_t i) const { return sign(q_[i] - q_[i - 1]); }

bool decide_frechet(std::span<const double> q, std::span<const double> s, double rho) {
  assert(!q.empty() && !s.empty());
  FreeSpaceGrid g(q, s, rho);
  const std::size_t tq = q.size();
  const std::size_t ts = s.size();

  // Degenerate single-vertex curves: the matching is forced, the distance is
  // the farthest point of the other curve, attained at a vertex.
  if (tq == 1 || ts == 1) {
    for (std::size_t i = 1; i <= tq; ++i) {
      for (std::size_t j = 1; j <= ts; ++j) {
        if (!g.corner_free(i, j)) return false;
      }
    }
    return true;
  }

  if (!g.corner_free(1, 1)) return false;

  // vr[j]: reachable part of the vertical boundary at the current column i,
  // crossing s-edge j. hr: reachable part of the horizontal boundary below the
  // cell being processed.
  std::vector<ValueInterval> vr(ts);  // index 1..ts-1
  bool corner_chain = true;           // corner (1, j) reachable along the left edge
  for (std::size_t j = 1; j < ts; ++j) {
    vr[j] = corner_chain ? g.vertical_free(1, j) : ValueInterval{};
    corner_chain = corner_chain && g.vertical_full(1, j);
  }

  bool bottom_chain = true;  // corner (i, 1) reachable along the bottom edge
  for (std::size_t i = 1; i < tq; ++i) {
    ValueInterval hr = bottom_chain ? g.horizontal_free(i, 1) : ValueInterval{};
    bottom_chain = bottom_chain && g.horizontal_full(i, 1);

    for (std::size_t j = 1; j < ts; ++j) {
      ValueInterval right = !hr.empty()
                                ? g.vertical_free(i + 1, j)
                                : cut_low(g.vertical_free(i + 1, j), vr[j], g.s_dir(j));
      ValueInterval top = !vr[j].empty()
                              ? g.horizontal_free(i, j + 1)
                              : cut_low(g.horizontal_free(i, j + 1), hr, g.q_dir(i));
      vr[j] = right;
      hr = top;
    }
    // hr now sits on the top boundary y = ts of column i; reaching the final
    // corner from it needs nothing beyond corner freeness, checked below.
    if (i + 1 == tq) {
      return g.corner_free(tq, ts) && (!hr.empty() || !vr[ts - 1].empty());
    }
  }
  // tq >= 2 always enters the loop.
  return false;
}

bool decide_frechet(const TimeSeries& q, const TimeSeries& s, Radius rho) {
  validate(q);
  validate(s);
  return decide_frechet(std::span<const double>(q.values),
                        std::span<const double>(s.values), rho.value);
}

bool feasible_for_sequence(const CellSequence& seq, std::span<const double> q,
                           std::span<const double> s, double rho) {
  if (q.size() < 2 || s.size() < 2 || seq.rows != q.size() - 1 ||
      seq.cols != s.size() - 1) {
    throw DimensionMismatch("cell sequence grid does not match curve complexities");
  }
  if (!seq.valid()) {
    throw DimensionMismatch("cell sequence is not a valid monotone staircase");
  }

  FreeSpaceGrid g(q, s, rho);
  if (!g.corner_free(1, 1)) return false;

  enum class Side { vertical, horizontal };
  Side prev_side = Side::vertical;
  ValueInterval cur;
  for (std::size_t m = 0; m + 1 < seq.cells.size(); ++m) {
    const Cell& a = seq.cells[m];
    const Cell& b = seq.cells[m + 1];
    bool row_step = b.i == a.i + 1;
    if (row_step) {
      // Shared boundary: vertical at x = b.i crossing s-edge a.j. Cuts apply
      // only when the previous boundary sits on the same s-edge, which is
      // exactly the consecutive-row-step case.
      ValueInterval free = g.vertical_free(b.i, a.j);
      if (m == 0) {
        cur = free;
      } else if (prev_side == Side::vertical) {
        cur = cut_low(free, cur, g.s_dir(a.j));
      } else {
        cur = cur.empty() ? ValueInterval{} : free;
      }
      prev_side = Side::vertical;
    } else {
      ValueInterval free = g.horizontal_free(a.i, b.j);
      if (m == 0) {
        cur = free;
      } else if (prev_side == Side::horizontal) {
        cur = cut_low(free, cur, g.q_dir(a.i));
      } else {
        cur = cur.empty() ? ValueInterval{} : free;
      }
      prev_side = Side::horizontal;
    }
    if (cur.empty()) return false;
  }
  return g.corner_free(q.size(), s.size());
}

bool feasible_for_sequence(const CellSequence& seq, const TimeSeries& q,
                           const TimeSeries& s, Radius rho) {
  validate(q);
  validate(s);
  return feasible_for_sequence(seq, std::span<const double>(q.values),
                               std::span<const double>(s.values), rho.value);
}

}  // namespace frq
