#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>
#include <vector>

#include "doctest.h"
#include "frq/cell_sequence.hpp"
#include "frq/error.hpp"
#include "frq/freespace.hpp"
#include "frq/predicates.hpp"
#include "frq/series.hpp"
#include "support.hpp"

using namespace frq;

namespace {

// Lattice-path count by Pascal recursion, independent of the closed form.
std::size_t path_count(std::size_t rows, std::size_t cols) {
  std::vector<std::vector<std::size_t>> c(rows + 1, std::vector<std::size_t>(cols + 1, 0));
  c[1][1] = 1;
  for (std::size_t i = 1; i <= rows; ++i) {
    for (std::size_t j = 1; j <= cols; ++j) {
      if (i == 1 && j == 1) continue;
      c[i][j] = (i > 1 ? c[i - 1][j] : 0) + (j > 1 ? c[i][j - 1] : 0);
    }
  }
  return c[rows][cols];
}

std::vector<double> shaped_grid_values(Rng& rng, std::size_t len, Shape shape) {
  std::vector<double> v(len);
  v[0] = static_cast<double>(rng.uniform_int(-3, 3));
  for (std::size_t e = 1; e < len; ++e) {
    double step = static_cast<double>(rng.uniform_int(1, 4));
    v[e] = edge_ascending(shape, e) ? v[e - 1] + step : v[e - 1] - step;
  }
  return v;
}

}  // namespace

TEST_CASE("staircase validity") {
  CHECK(CellSequence{2, 2, {{1, 1}, {1, 2}, {2, 2}}}.valid());
  CHECK(CellSequence{1, 1, {{1, 1}}}.valid());
  CHECK_FALSE(CellSequence{2, 2, {{1, 1}, {2, 2}}}.valid());        // diagonal step
  CHECK_FALSE(CellSequence{2, 2, {{1, 2}, {2, 2}}}.valid());        // wrong start
  CHECK_FALSE(CellSequence{2, 2, {{1, 1}, {2, 1}}}.valid());        // wrong end
  CHECK_FALSE(CellSequence{2, 2, {{1, 1}, {1, 2}, {1, 1}}}.valid());
  CHECK_FALSE(CellSequence{0, 0, {}}.valid());
}

TEST_CASE("sequence counts match lattice paths") {
  CHECK(count_valid_sequences(2, 2, 1000000) == 1);
  CHECK(count_valid_sequences(3, 3, 1000000) == 2);
  CHECK(count_valid_sequences(4, 5, 1000000) == 10);
  CHECK(count_valid_sequences(8, 8, 1000000) == 924);
  for (std::size_t tq = 2; tq <= 8; ++tq) {
    for (std::size_t ts = 2; ts <= 8; ++ts) {
      std::size_t want = path_count(tq - 1, ts - 1);
      CHECK(count_valid_sequences(tq, ts, 1000000) == want);
      auto all = enumerate_valid_sequences(tq, ts);
      CHECK(all.size() == want);
    }
  }
  CHECK_THROWS_AS(count_valid_sequences(8, 8, 900), ComplexityTooLarge);
  CHECK_THROWS_AS(enumerate_valid_sequences(9, 9, 100), ComplexityTooLarge);
  CHECK_THROWS_AS(count_valid_sequences(1, 4, 100), DimensionMismatch);
}

TEST_CASE("enumeration order is lexicographic, complete and duplicate-free") {
  auto two = enumerate_valid_sequences(3, 3);
  REQUIRE(two.size() == 2);
  CHECK(two[0].cells == std::vector<Cell>{{1, 1}, {1, 2}, {2, 2}});
  CHECK(two[1].cells == std::vector<Cell>{{1, 1}, {2, 1}, {2, 2}});

  auto all = enumerate_valid_sequences(5, 4);
  std::set<std::vector<std::pair<std::size_t, std::size_t>>> seen;
  for (const CellSequence& seq : all) {
    CHECK(seq.valid());
    CHECK(seq.rows == 4);
    CHECK(seq.cols == 3);
    std::vector<std::pair<std::size_t, std::size_t>> key;
    for (const Cell& c : seq.cells) key.emplace_back(c.i, c.j);
    seen.insert(key);
  }
  CHECK(seen.size() == all.size());
  // First sequence walks all columns, last walks all rows first.
  CHECK(all.front().cells[1] == Cell{1, 2});
  CHECK(all.back().cells[1] == Cell{2, 1});
}

TEST_CASE("induced predicate fixture") {
  CellSequence seq{2, 2, {{1, 1}, {1, 2}, {2, 2}}};
  auto preds = induced_predicates(seq);
  std::vector<PredicateId> want{
      {PredicateKind::endpoint_start, 1, 0, 0},
      {PredicateKind::endpoint_end, 3, 0, 0},
      {PredicateKind::stored_vertex_on_query_edge, 1, 2, 0},
      {PredicateKind::monotone_pair_on_query_edge, 1, 2, 2},
      {PredicateKind::query_vertex_on_stored_edge, 2, 2, 0},
  };
  CHECK(preds == want);

  CellSequence col{3, 1, {{1, 1}, {2, 1}, {3, 1}}};
  auto cp = induced_predicates(col);
  std::vector<PredicateId> cwant{
      {PredicateKind::endpoint_start, 1, 0, 0},
      {PredicateKind::endpoint_end, 4, 0, 0},
      {PredicateKind::query_vertex_on_stored_edge, 2, 1, 0},
      {PredicateKind::query_vertex_on_stored_edge, 3, 1, 0},
      {PredicateKind::monotone_pair_on_stored_edge, 2, 3, 1},
  };
  CHECK(cp == cwant);

  CHECK_THROWS_AS(induced_predicates(CellSequence{2, 2, {{1, 1}}}), DimensionMismatch);
}

TEST_CASE("reach requirement fixture") {
  CellSequence col{3, 1, {{1, 1}, {2, 1}, {3, 1}}};
  ReachRequirement m = sequence_reach_requirements(col, Shape::M);
  CHECK(m.forward == std::vector<std::size_t>{0, 0, 3, 3});
  CHECK(m.backward == std::vector<std::size_t>{0, 0, 2, 3});
  ReachRequirement w = sequence_reach_requirements(col, Shape::W);
  CHECK(w.forward == std::vector<std::size_t>{0, 0, 2, 3});
  CHECK(w.backward == std::vector<std::size_t>{0, 0, 3, 3});

  ReachProfile ok;
  ok.forward = {0, 3, 3, 3, 4};
  ok.backward = {0, 1, 2, 3, 4};
  CHECK(m.dominated_by(ok));
  ReachProfile low;
  low.forward = {0, 3, 2, 3};
  low.backward = {0, 1, 2, 3};
  CHECK_FALSE(m.dominated_by(low));
  ReachProfile tiny;
  tiny.forward = {0, 1};
  tiny.backward = {0, 1};
  CHECK_FALSE(m.dominated_by(tiny));
}

TEST_CASE("rectangle fixtures") {
  CanonicalSeries s = canonicalize(make_series("s", {0, 10}), 2);
  CellSequence col{3, 1, {{1, 1}, {2, 1}, {3, 1}}};
  Rect r = build_rectangle(col, s, Radius(1), Shape::M);
  REQUIRE(r.dimension() == 4);
  CHECK(r.sides[0] == Interval{-1, 1});
  CHECK(r.sides[1] == Interval{-1, 11});
  CHECK(r.sides[2] == Interval{-1, 11});
  CHECK(r.sides[3] == Interval{9, 11});

  CHECK_THROWS_AS(build_rectangle(col, mirror(s), Radius(1), Shape::M), ShapeViolation);
  CanonicalSeries s3 = canonicalize(make_series("s3", {0, 10, 0}), 3);
  CHECK_THROWS_AS(build_rectangle(col, s3, Radius(1), Shape::M), DimensionMismatch);

  CanonicalSeries q2 = canonicalize(make_series("q2", {0, 10}), 2);
  CellSequence one{1, 1, {{1, 1}}};
  Rect qr = query_rectangle(one, q2, Radius(1), Shape::M);
  REQUIRE(qr.dimension() == 2);
  CHECK(qr.sides[0] == Interval{-1, 1});
  CHECK(qr.sides[1] == Interval{9, 11});
}

TEST_CASE("rectangle and requirements decide feasibility") {
  Rng rng(301);
  for (int round = 0; round < 1200; ++round) {
    bool grid = round % 2 == 0;
    std::size_t tq = static_cast<std::size_t>(rng.uniform_int(2, 5));
    std::size_t ts = static_cast<std::size_t>(rng.uniform_int(2, 5));
    Shape qshape = rng.coin() ? Shape::M : Shape::W;

    std::size_t core = static_cast<std::size_t>(rng.uniform_int(2, static_cast<std::int64_t>(tq)));
    std::vector<double> qv = grid ? shaped_grid_values(rng, core, qshape)
                                  : frq::test::random_shaped_values(rng, core, qshape, 8.0);
    qv.resize(tq, qv.back());
    TimeSeries q = make_series("q", qv);

    std::vector<double> sv = grid ? shaped_grid_values(rng, ts, Shape::M)
                                  : frq::test::random_shaped_values(rng, ts, Shape::M, 8.0);
    CanonicalSeries s = canonicalize(make_series("s", sv), ts);
    double rho = grid ? static_cast<double>(rng.uniform_int(0, 5)) : rng.uniform(0.0, 6.0);

    ReachProfile profile = reach_profile(q, Radius(rho));
    for (const CellSequence& seq : enumerate_valid_sequences(tq, ts)) {
      bool feas = feasible_for_sequence(seq, q.values, s.values, rho);

      bool preds = true;
      for (const PredicateId& p : induced_predicates(seq)) {
        preds = preds && eval_predicate(p, q, make_series("sv", s.values), Radius(rho));
      }
      CHECK(feas == preds);

      Rect rect = build_rectangle(seq, s, Radius(rho), qshape);
      bool boxed = rect.contains(q.values) &&
                   sequence_reach_requirements(seq, Shape::M).dominated_by(profile);
      CHECK(feas == boxed);
    }
  }
}

TEST_CASE("swapped roles: stored-point rectangle decides feasibility") {
  Rng rng(302);
  for (int round = 0; round < 1200; ++round) {
    bool grid = round % 2 == 0;
    // First curve of the diagram is now the stored series.
    std::size_t tstored = static_cast<std::size_t>(rng.uniform_int(2, 5));
    std::size_t tquery = static_cast<std::size_t>(rng.uniform_int(2, 5));
    Shape qshape = rng.coin() ? Shape::M : Shape::W;

    std::size_t core =
        static_cast<std::size_t>(rng.uniform_int(2, static_cast<std::int64_t>(tstored)));
    std::vector<double> stv = grid ? shaped_grid_values(rng, core, Shape::M)
                                   : frq::test::random_shaped_values(rng, core, Shape::M, 8.0);
    stv.resize(tstored, stv.back());
    TimeSeries stored = make_series("s", stv);

    std::vector<double> qv = grid ? shaped_grid_values(rng, tquery, qshape)
                                  : frq::test::random_shaped_values(rng, tquery, qshape, 8.0);
    CanonicalSeries qc = canonicalize(make_series("q", qv), tquery);
    double rho = grid ? static_cast<double>(rng.uniform_int(0, 5)) : rng.uniform(0.0, 6.0);

    ReachProfile sprofile = reach_profile(stored, Radius(rho));
    for (const CellSequence& seq : enumerate_valid_sequences(tstored, tquery)) {
      bool feas = feasible_for_sequence(seq, stored.values, qc.values, rho);
      Rect rect = query_rectangle(seq, qc, Radius(rho), Shape::M);
      bool boxed = rect.contains(stored.values) &&
                   sequence_reach_requirements(seq, qshape).dominated_by(sprofile);
      CHECK(feas == boxed);
    }
  }
}
