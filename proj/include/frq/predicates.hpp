#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "frq/interval.hpp"
#include "frq/series.hpp"

namespace frq {

/// The six predicate families whose conjunction, instantiated per monotone
/// cell sequence, characterizes feasibility of that sequence.
///
/// Throughout, q is the first curve of the free-space diagram (the one whose
/// vertices the interval constraints land on) and s the second.
enum class PredicateKind {
  endpoint_start,          // |s_1 - q_1| <= rho
  endpoint_end,            // |s_last - q_last| <= rho
  stored_vertex_on_query_edge,   // some point of q-edge i is within rho of s_j
  query_vertex_on_stored_edge,   // some point of s-edge j is within rho of q_i
  monotone_pair_on_query_edge,   // ordered pair on q-edge i near s_j then s_k
  monotone_pair_on_stored_edge,  // ordered pair on s-edge j near q_i then q_l
};

struct PredicateId {
  PredicateKind kind;
  // Meaning by kind (1-based indices):
  //   endpoint_start / endpoint_end: a = q-vertex (1, resp. t_q)
  //   stored_vertex_on_query_edge:   a = q-edge i,  b = s-vertex j
  //   query_vertex_on_stored_edge:   a = q-vertex i, b = s-edge j
  //   monotone_pair_on_query_edge:   a = q-edge i,  b = s-vertex j, c = s-vertex k (j <= k)
  //   monotone_pair_on_stored_edge:  a = q-vertex i, b = q-vertex l, c = s-edge j (i <= l)
  std::size_t a = 0;
  std::size_t b = 0;
  std::size_t c = 0;

  friend bool operator==(const PredicateId&, const PredicateId&) = default;
};

std::string to_string(const PredicateId& p);

/// Direct existential evaluation of one predicate on concrete curves.
/// Throws IndexOutOfRange for indices outside the curves.
bool eval_predicate(const PredicateId& p, const TimeSeries& q, const TimeSeries& s,
                    Radius rho);

/// Interval constraint on a single q-vertex.
struct VertexConstraint {
  std::size_t vertex = 0;  // 1-based q-vertex index
  Interval range;
};

/// Translates one of the four simple predicate kinds into constraints on
/// q-vertices, valid for every query of the given shape. The branch taken for
/// stored_vertex_on_query_edge follows the shape's edge parity; tie edges
/// satisfy both branches identically. Throws UnsupportedKind for the monotone
/// pair kinds.
std::vector<VertexConstraint> simple_predicate_intervals(const PredicateId& p,
                                                         const CanonicalSeries& s,
                                                         Radius rho, Shape query_shape);

/// Constraints equivalent to the ordered-pair predicate on q-edge `edge`
/// against s-vertices j then k. When the two target balls overlap, the two
/// single-vertex predicates suffice; otherwise one extra one-sided constraint
/// per q-edge endpoint forces the edge to sweep across both balls in order.
std::vector<VertexConstraint> monotone_pair_intervals(std::size_t edge, std::size_t j,
                                                      std::size_t k,
                                                      const CanonicalSeries& s, Radius rho,
                                                      Shape query_shape);

/// Largest reachable indices for prefix matchings against widening and
/// narrowing ramps. forward[i] is the largest k such that the sub-curve
/// q_i..q_k stays within rho of the segment from q_i - rho to q_k + rho
/// (oriented forward); backward[i] uses q_i + rho down to q_k - rho. Both are
/// at least i, and the set of admissible k is a prefix, so a linear scan per i
/// is exact.
struct ReachProfile {
  std::vector<std::size_t> forward;   // index 0 unused; entries 1..t
  std::vector<std::size_t> backward;

  std::size_t complexity() const { return forward.empty() ? 0 : forward.size() - 1; }
};

ReachProfile reach_profile(const TimeSeries& q, Radius rho);
ReachProfile reach_profile(std::span<const double> values, double rho);

/// Decides the full bundle of ordered-pair predicates on stored edge j over
/// q-vertices i..l (all ordered pairs at once) using the reach profile plus
/// the per-vertex constraints. Requires i < l.
bool monotone_run_check(std::size_t i, std::size_t l, std::size_t j, const TimeSeries& q,
                        const TimeSeries& s, Radius rho);

}  // namespace frq
