#include "frq/cell_sequence.hpp"

#include <algorithm>
#include <cassert>

#include "frq/error.hpp"

namespace frq {

bool CellSequence::valid() const {
  if (rows == 0 || cols == 0 || cells.empty()) return false;
  if (!(cells.front() == Cell{1, 1})) return false;
  if (!(cells.back() == Cell{rows, cols})) return false;
  for (std::size_t m = 0; m + 1 < cells.size(); ++m) {
    const Cell& a = cells[m];
    const Cell& b = cells[m + 1];
    bool row_step = b.i == a.i + 1 && b.j == a.j;
    bool col_step = b.i == a.i && b.j == a.j + 1;
    if (!row_step && !col_step) return false;
  }
  for (const Cell& c : cells) {
    if (c.i < 1 || c.i > rows || c.j < 1 || c.j > cols) return false;
  }
  return true;
}

std::size_t count_valid_sequences(std::size_t t_q, std::size_t t_s, std::size_t cap) {
  if (t_q < 2 || t_s < 2) {
    throw DimensionMismatch("both complexities must be at least 2");
  }
  // binomial(t_q + t_s - 4, t_q - 2), capped.
  std::size_t n = t_q + t_s - 4;
  std::size_t k = std::min(t_q - 2, t_s - 2);
  // Exact integer evaluation; bail out as soon as the cap is exceeded.
  unsigned long long result = 1;
  for (std::size_t d = 1; d <= k; ++d) {
    result = result * (n - k + d);
    result /= d;  // product of d consecutive integers is divisible by d!
    if (result > cap) {
      throw ComplexityTooLarge("valid sequence count exceeds cap " + std::to_string(cap) +
                               " for complexities " + std::to_string(t_q) + " x " +
                               std::to_string(t_s));
    }
  }
  return static_cast<std::size_t>(result);
}

std::vector<CellSequence> enumerate_valid_sequences(std::size_t t_q, std::size_t t_s,
                                                    std::size_t cap) {
  std::size_t total = count_valid_sequences(t_q, t_s, cap);
  const std::size_t rows = t_q - 1;
  const std::size_t cols = t_s - 1;

  std::vector<CellSequence> out;
  out.reserve(total);
  // Lexicographic order over step strings with a column step (0) ordered
  // before a row step (1); next_permutation walks exactly that order.
  std::vector<int> steps;
  steps.insert(steps.end(), cols - 1, 0);
  steps.insert(steps.end(), rows - 1, 1);
  do {
    CellSequence seq{rows, cols, {}};
    seq.cells.reserve(steps.size() + 1);
    std::size_t i = 1, j = 1;
    seq.cells.push_back(Cell{i, j});
    for (int st : steps) {
      if (st == 0) {
        ++j;
      } else {
        ++i;
      }
      seq.cells.push_back(Cell{i, j});
    }
    out.push_back(std::move(seq));
  } while (std::next_permutation(steps.begin(), steps.end()));
  assert(out.size() == total);
  return out;
}

namespace {

struct Run {
  std::size_t fixed = 0;  // the coordinate shared by the run
  std::size_t lo = 0;     // first varying coordinate
  std::size_t hi = 0;     // last varying coordinate
};

// Maximal runs of cells sharing their row (by_row) or column coordinate.
std::vector<Run> runs_of(const CellSequence& seq, bool by_row) {
  std::vector<Run> out;
  for (const Cell& c : seq.cells) {
    std::size_t fixed = by_row ? c.i : c.j;
    std::size_t var = by_row ? c.j : c.i;
    if (!out.empty() && out.back().fixed == fixed) {
      out.back().hi = var;
    } else {
      out.push_back(Run{fixed, var, var});
    }
  }
  // A staircase revisits no row or column after leaving it, so runs sharing a
  // fixed coordinate are already contiguous.
  return out;
}

}  // namespace

std::vector<PredicateId> induced_predicates(const CellSequence& seq) {
  if (!seq.valid()) {
    throw DimensionMismatch("cell sequence is not a valid monotone staircase");
  }
  std::vector<PredicateId> out;
  out.push_back({PredicateKind::endpoint_start, 1, 0, 0});
  out.push_back({PredicateKind::endpoint_end, seq.rows + 1, 0, 0});

  for (const Run& run : runs_of(seq, true)) {
    // Row i fixed, columns run.lo..run.hi: each column step entered row i at
    // stored vertex boundaries; pairs give the ordered sweep constraints.
    std::size_t i = run.fixed;
    for (std::size_t j = run.lo + 1; j <= run.hi; ++j) {
      out.push_back({PredicateKind::stored_vertex_on_query_edge, i, j, 0});
    }
    for (std::size_t j = run.lo + 1; j <= run.hi; ++j) {
      for (std::size_t k = j; k <= run.hi; ++k) {
        out.push_back({PredicateKind::monotone_pair_on_query_edge, i, j, k});
      }
    }
  }
  for (const Run& run : runs_of(seq, false)) {
    std::size_t j = run.fixed;
    for (std::size_t i = run.lo + 1; i <= run.hi; ++i) {
      out.push_back({PredicateKind::query_vertex_on_stored_edge, i, j, 0});
    }
    // Same-index pairs are trivially true and dropped.
    for (std::size_t i = run.lo + 1; i <= run.hi; ++i) {
      for (std::size_t l = i + 1; l <= run.hi; ++l) {
        out.push_back({PredicateKind::monotone_pair_on_stored_edge, i, l, j});
      }
    }
  }
  return out;
}

bool ReachRequirement::dominated_by(const ReachProfile& profile) const {
  assert(forward.size() == backward.size());
  if (profile.forward.size() < forward.size()) return false;
  for (std::size_t i = 2; i < forward.size(); ++i) {
    if (profile.forward[i] < forward[i]) return false;
    if (profile.backward[i] < backward[i]) return false;
  }
  return true;
}

ReachRequirement sequence_reach_requirements(const CellSequence& seq, Shape second_shape) {
  if (!seq.valid()) {
    throw DimensionMismatch("cell sequence is not a valid monotone staircase");
  }
  const std::size_t t = seq.rows + 1;
  ReachRequirement req;
  req.forward.assign(t, 0);
  req.backward.assign(t, 0);
  for (std::size_t i = 2; i <= seq.rows; ++i) {
    req.forward[i] = i;
    req.backward[i] = i;
  }
  // Each row step i-1 -> i happens inside exactly one column run; the profile
  // must reach that run's end. Column parity says whether the stored edge
  // ascends (forward) or descends (backward) for the given second-curve shape.
  for (const Run& run : runs_of(seq, false)) {
    for (std::size_t i = run.lo + 1; i <= run.hi && i <= seq.rows; ++i) {
      if (edge_ascending(second_shape, run.fixed)) {
        req.forward[i] = run.hi;
      } else {
        req.backward[i] = run.hi;
      }
    }
  }
  // requirement indices above rows never arise: the run into the final row
  // ends at most at rows, and index rows+1 is the final vertex.
  return req;
}

namespace {

void apply_constraints(Rect& rect, const std::vector<VertexConstraint>& cs) {
  for (const VertexConstraint& c : cs) {
    assert(c.vertex >= 1 && c.vertex <= rect.sides.size());
    rect.sides[c.vertex - 1] = rect.sides[c.vertex - 1].intersect(c.range);
  }
}

/// Constraints on first-curve vertices induced by `seq` against the second
/// curve `other`. `first_shape` fixes which way each first-curve edge points.
Rect constraint_rectangle(const CellSequence& seq, const CanonicalSeries& other,
                          Radius rho, Shape first_shape) {
  if (!seq.valid()) {
    throw DimensionMismatch("cell sequence is not a valid monotone staircase");
  }
  if (seq.cols + 1 != other.complexity()) {
    throw DimensionMismatch("sequence columns do not match series complexity");
  }
  Rect rect;
  rect.sides.assign(seq.rows + 1, Interval{});
  for (const PredicateId& p : induced_predicates(seq)) {
    switch (p.kind) {
      case PredicateKind::monotone_pair_on_query_edge:
        apply_constraints(rect, monotone_pair_intervals(p.a, p.b, p.c, other, rho, first_shape));
        break;
      case PredicateKind::monotone_pair_on_stored_edge:
        break;  // covered by the reach requirements
      default:
        apply_constraints(rect, simple_predicate_intervals(p, other, rho, first_shape));
        break;
    }
  }
  return rect;
}

}  // namespace

Rect build_rectangle(const CellSequence& seq, const CanonicalSeries& s, Radius rho,
                     Shape query_shape) {
  if (s.shape != Shape::M) {
    throw ShapeViolation("stored series must be M-shaped; mirror W-shaped input first");
  }
  return constraint_rectangle(seq, s, rho, query_shape);
}

Rect query_rectangle(const CellSequence& seq, const CanonicalSeries& q, Radius rho,
                     Shape stored_shape) {
  return constraint_rectangle(seq, q, rho, stored_shape);
}

}  // namespace frq
