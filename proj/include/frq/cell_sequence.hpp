#pragma once

#include <cstddef>
#include <vector>

#include "frq/interval.hpp"
#include "frq/predicates.hpp"
#include "frq/series.hpp"

namespace frq {

/// Cell of the free-space grid between a curve with `rows + 1` vertices and a
/// curve with `cols + 1` vertices. Cell (i, j) spans parameter square
/// [i, i+1] x [j, j+1], 1-based.
struct Cell {
  std::size_t i = 0;
  std::size_t j = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
};

/// Monotone staircase of cells from (1, 1) to (rows, cols): each step
/// increments exactly one coordinate by one.
struct CellSequence {
  std::size_t rows = 0;  // number of first-curve edges
  std::size_t cols = 0;  // number of second-curve edges
  std::vector<Cell> cells;

  std::size_t length() const { return cells.size(); }
  bool valid() const;

  friend bool operator==(const CellSequence&, const CellSequence&) = default;
};

inline constexpr std::size_t kDefaultSequenceCap = 1'000'000;

/// Number of monotone staircases on a (t_q - 1) x (t_s - 1) grid:
/// binomial(t_q + t_s - 4, t_q - 2). Throws ComplexityTooLarge if it
/// exceeds `cap`.
std::size_t count_valid_sequences(std::size_t t_q, std::size_t t_s, std::size_t cap);

/// All valid sequences for curves of complexity t_q (first) and t_s (second),
/// in lexicographic order of their step strings with a column step ('j')
/// ordered before a row step ('i'). Throws ComplexityTooLarge past `cap`.
std::vector<CellSequence> enumerate_valid_sequences(std::size_t t_q, std::size_t t_s,
                                                    std::size_t cap = kDefaultSequenceCap);

/// Predicates whose conjunction is equivalent to feasibility of `seq`.
/// Endpoint predicates always; one stored_vertex_on_query_edge per column step;
/// one query_vertex_on_stored_edge per row step; ordered-pair predicates over
/// every ordered pair inside a run (same-index pairs on stored edges are
/// dropped as trivially true). Deterministic order, no duplicates.
std::vector<PredicateId> induced_predicates(const CellSequence& seq);

/// Per-vertex reach requirements of a sequence. For first-curve index i in
/// 2..rows, the step into row i happens inside exactly one column run; if that
/// run lies on a non-decreasing second-curve edge the forward number must
/// reach the run's end, otherwise the backward number must. Which parity means
/// non-decreasing is fixed by the second curve's shape.
struct ReachRequirement {
  std::vector<std::size_t> forward;   // index 0 and 1 unused; entries 2..rows
  std::vector<std::size_t> backward;

  bool dominated_by(const ReachProfile& profile) const;
};

ReachRequirement sequence_reach_requirements(const CellSequence& seq,
                                             Shape second_shape = Shape::M);

/// Rectangle over query-vertex space (dimension rows + 1) whose membership,
/// together with the reach requirements, is equivalent to feasibility of `seq`
/// between a query of the given shape and the stored series `s`.
/// `s` must be M-shaped (mirror W-shaped input first); throws ShapeViolation.
Rect build_rectangle(const CellSequence& seq, const CanonicalSeries& s, Radius rho,
                     Shape query_shape);

/// Role-swapped variant for the point store: rectangle over stored-vertex
/// space (dimension rows + 1, where rows counts stored edges) computed from
/// the query values. `stored_shape` fixes the branch for stored edges.
Rect query_rectangle(const CellSequence& seq, const CanonicalSeries& q, Radius rho,
                     Shape stored_shape);

}  // namespace frq
