#include "frq/predicates.hpp"

#include <algorithm>
#include <cassert>

#include "frq/error.hpp"
#include "frq/freespace.hpp"

namespace frq {

namespace {

void check_vertex(std::size_t v, std::size_t t, const char* what) {
  if (v < 1 || v > t) {
    throw IndexOutOfRange(std::string(what) + " index " + std::to_string(v) +
                          " outside 1.." + std::to_string(t));
  }
}

void check_edge(std::size_t e, std::size_t t, const char* what) {
  if (e < 1 || e + 1 > t) {
    throw IndexOutOfRange(std::string(what) + " edge " + std::to_string(e) +
                          " outside 1.." + std::to_string(t - 1));
  }
}

/// Does the directed edge a -> b pass within rho of c1 at some parameter, and
/// within rho of c2 at the same or a later parameter?
bool ordered_pair_on_edge(double a, double b, double c1, double c2, double rho) {
  if (a <= b) {
    bool hit1 = c1 - rho <= b && a <= c1 + rho;
    bool hit2 = c2 - rho <= b && a <= c2 + rho;
    // Earliest value within reach of c1 must not exceed the latest value
    // within reach of c2; on an ascending edge parameter order is value order.
    return hit1 && hit2 && std::max(a, c1 - rho) <= std::min(b, c2 + rho);
  }
  bool hit1 = c1 - rho <= a && b <= c1 + rho;
  bool hit2 = c2 - rho <= a && b <= c2 + rho;
  return hit1 && hit2 && std::min(a, c1 + rho) >= std::max(b, c2 - rho);
}

}  // namespace

std::string to_string(const PredicateId& p) {
  switch (p.kind) {
    case PredicateKind::endpoint_start:
      return "start";
    case PredicateKind::endpoint_end:
      return "end";
    case PredicateKind::stored_vertex_on_query_edge:
      return "sv(qedge=" + std::to_string(p.a) + ",s=" + std::to_string(p.b) + ")";
    case PredicateKind::query_vertex_on_stored_edge:
      return "qv(q=" + std::to_string(p.a) + ",sedge=" + std::to_string(p.b) + ")";
    case PredicateKind::monotone_pair_on_query_edge:
      return "mq(qedge=" + std::to_string(p.a) + ",s=" + std::to_string(p.b) + ".." +
             std::to_string(p.c) + ")";
    case PredicateKind::monotone_pair_on_stored_edge:
      return "ms(q=" + std::to_string(p.a) + ".." + std::to_string(p.b) +
             ",sedge=" + std::to_string(p.c) + ")";
  }
  return "?";
}

bool eval_predicate(const PredicateId& p, const TimeSeries& q, const TimeSeries& s,
                    Radius rho) {
  validate(q);
  validate(s);
  const auto& Q = q.values;
  const auto& S = s.values;
  const double r = rho.value;
  switch (p.kind) {
    case PredicateKind::endpoint_start:
      return S.front() - r <= Q.front() && Q.front() <= S.front() + r;
    case PredicateKind::endpoint_end:
      return S.back() - r <= Q.back() && Q.back() <= S.back() + r;
    case PredicateKind::stored_vertex_on_query_edge: {
      check_edge(p.a, Q.size(), "query");
      check_vertex(p.b, S.size(), "stored vertex");
      double a = Q[p.a - 1], b = Q[p.a];
      double c = S[p.b - 1];
      return std::min(a, b) <= c + r && c - r <= std::max(a, b);
    }
    case PredicateKind::query_vertex_on_stored_edge: {
      check_vertex(p.a, Q.size(), "query vertex");
      check_edge(p.b, S.size(), "stored");
      double a = S[p.b - 1], b = S[p.b];
      double c = Q[p.a - 1];
      return std::min(a, b) <= c + r && c - r <= std::max(a, b);
    }
    case PredicateKind::monotone_pair_on_query_edge: {
      check_edge(p.a, Q.size(), "query");
      check_vertex(p.b, S.size(), "stored vertex");
      check_vertex(p.c, S.size(), "stored vertex");
      return ordered_pair_on_edge(Q[p.a - 1], Q[p.a], S[p.b - 1], S[p.c - 1], r);
    }
    case PredicateKind::monotone_pair_on_stored_edge: {
      check_vertex(p.a, Q.size(), "query vertex");
      check_vertex(p.b, Q.size(), "query vertex");
      check_edge(p.c, S.size(), "stored");
      return ordered_pair_on_edge(S[p.c - 1], S[p.c], Q[p.a - 1], Q[p.b - 1], r);
    }
  }
  throw UnsupportedKind("unknown predicate kind");
}

std::vector<VertexConstraint> simple_predicate_intervals(const PredicateId& p,
                                                         const CanonicalSeries& s,
                                                         Radius rho, Shape query_shape) {
  const auto& S = s.values;
  const double r = rho.value;
  const double inf = std::numeric_limits<double>::infinity();
  switch (p.kind) {
    case PredicateKind::endpoint_start:
      return {{1, Interval{S.front() - r, S.front() + r}}};
    case PredicateKind::endpoint_end: {
      if (p.a < 1) throw IndexOutOfRange("end predicate needs its vertex index");
      return {{p.a, Interval{S.back() - r, S.back() + r}}};
    }
    case PredicateKind::stored_vertex_on_query_edge: {
      check_vertex(p.b, S.size(), "stored vertex");
      double c = S[p.b - 1];
      if (edge_ascending(query_shape, p.a)) {
        return {{p.a, Interval{-inf, c + r}}, {p.a + 1, Interval{c - r, inf}}};
      }
      return {{p.a, Interval{c - r, inf}}, {p.a + 1, Interval{-inf, c + r}}};
    }
    case PredicateKind::query_vertex_on_stored_edge: {
      check_edge(p.b, S.size(), "stored");
      double lo = std::min(S[p.b - 1], S[p.b]);
      double hi = std::max(S[p.b - 1], S[p.b]);
      return {{p.a, Interval{lo - r, hi + r}}};
    }
    default:
      throw UnsupportedKind("interval form only covers the simple predicate kinds");
  }
}

std::vector<VertexConstraint> monotone_pair_intervals(std::size_t edge, std::size_t j,
                                                      std::size_t k,
                                                      const CanonicalSeries& s, Radius rho,
                                                      Shape query_shape) {
  const auto& S = s.values;
  check_vertex(j, S.size(), "stored vertex");
  check_vertex(k, S.size(), "stored vertex");
  const double r = rho.value;
  const double inf = std::numeric_limits<double>::infinity();

  auto out = simple_predicate_intervals(
      PredicateId{PredicateKind::stored_vertex_on_query_edge, edge, j, 0}, s, rho,
      query_shape);
  auto more = simple_predicate_intervals(
      PredicateId{PredicateKind::stored_vertex_on_query_edge, edge, k, 0}, s, rho,
      query_shape);
  out.insert(out.end(), more.begin(), more.end());

  // When the target balls are disjoint the edge must sweep from one to the
  // other, pinning its endpoints on opposite sides.
  double vj = S[j - 1], vk = S[k - 1];
  if (vj + r < vk - r) {
    out.push_back({edge, Interval{-inf, vj + r}});
    out.push_back({edge + 1, Interval{vk - r, inf}});
  } else if (vk + r < vj - r) {
    out.push_back({edge, Interval{vj - r, inf}});
    out.push_back({edge + 1, Interval{-inf, vk + r}});
  }
  return out;
}

ReachProfile reach_profile(std::span<const double> values, double rho) {
  const std::size_t t = values.size();
  ReachProfile out;
  out.forward.assign(t + 1, 0);
  out.backward.assign(t + 1, 0);
  for (std::size_t i = 1; i <= t; ++i) {
    // k == i always qualifies: a single vertex stays within rho of the ramp
    // between its own value shifted down and up by rho.
    std::size_t f = i;
    for (std::size_t k = i + 1; k <= t; ++k) {
      double lo = values[i - 1] - rho;
      double hi = values[k - 1] + rho;
      double ramp[2] = {lo, hi};
      if (!(lo <= hi) ||
          !decide_frechet(values.subspan(i - 1, k - i + 1), std::span<const double>(ramp, 2),
                          rho)) {
        break;
      }
      f = k;
    }
    out.forward[i] = f;

    std::size_t b = i;
    for (std::size_t k = i + 1; k <= t; ++k) {
      double lo = values[i - 1] + rho;
      double hi = values[k - 1] - rho;
      double ramp[2] = {lo, hi};
      if (!(lo >= hi) ||
          !decide_frechet(values.subspan(i - 1, k - i + 1), std::span<const double>(ramp, 2),
                          rho)) {
        break;
      }
      b = k;
    }
    out.backward[i] = b;
  }
  return out;
}

ReachProfile reach_profile(const TimeSeries& q, Radius rho) {
  validate(q);
  return reach_profile(std::span<const double>(q.values), rho.value);
}

bool monotone_run_check(std::size_t i, std::size_t l, std::size_t j, const TimeSeries& q,
                        const TimeSeries& s, Radius rho) {
  validate(q);
  validate(s);
  if (!(i < l)) {
    throw IndexOutOfRange("run check requires i < l");
  }
  check_vertex(l, q.values.size(), "query vertex");
  check_edge(j, s.values.size(), "stored");

  for (std::size_t x = i; x <= l; ++x) {
    if (!eval_predicate(PredicateId{PredicateKind::query_vertex_on_stored_edge, x, j, 0},
                        q, s, rho)) {
      return false;
    }
  }
  ReachProfile profile = reach_profile(q, rho);
  if (s.values[j - 1] <= s.values[j]) {
    return profile.forward[i] >= l;
  }
  return profile.backward[i] >= l;
}

}  // namespace frq
