#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "frq/backend.hpp"
#include "frq/cell_sequence.hpp"
#include "frq/range_index.hpp"
#include "frq/series.hpp"
#include "frq/stab_index.hpp"

namespace frq {

struct BuildOptions {
  Backend backend = Backend::tree;
  std::size_t sequence_cap = kDefaultSequenceCap;
};

/// Reference answer: one Frechet decision per stored series, ids sorted.
std::vector<std::string> naive_query(const std::vector<TimeSeries>& data,
                                     const TimeSeries& q, Radius rho);

/// Reports every stored series within Frechet distance rho of the query by
/// stabbing precomputed rectangles with the query's vertex tuple.
///
/// Stored series are canonicalized to complexity t_s and grouped by shape
/// (the descending-first group is mirrored, so rectangles are always built
/// against ascending-first curves). Per monotone cell sequence and per query
/// shape there is one stabbing structure; a query consults only the sequences
/// whose reach requirements its own reach profile satisfies.
///
/// Queries must canonicalize to at most t_q vertices; CanonicalTooLong
/// otherwise. Stored series violating t_s fail the same way at build.
class FrechetIndex {
 public:
  FrechetIndex(std::vector<TimeSeries> data, Radius rho, std::size_t t_q,
               std::size_t t_s, BuildOptions opts = {});
  ~FrechetIndex();
  FrechetIndex(FrechetIndex&&) noexcept;
  FrechetIndex& operator=(FrechetIndex&&) noexcept;

  std::vector<std::string> query(const TimeSeries& q) const;

  std::size_t size() const { return ids_.size(); }
  double rho() const { return rho_; }
  std::size_t t_q() const { return t_q_; }
  std::size_t t_s() const { return t_s_; }
  Backend backend() const { return backend_; }
  std::size_t sequence_count() const { return sequences_.size(); }
  std::size_t structure_count() const {
    return (group_used_[0] + group_used_[1]) * 2 * sequences_.size();
  }

 private:
  std::vector<std::string> ids_;  // dataset order; stab ids are positions here
  double rho_;
  std::size_t t_q_;
  std::size_t t_s_;
  Backend backend_;
  std::vector<CellSequence> sequences_;
  std::vector<ReachRequirement> requirements_;
  // [stored shape][query shape][sequence]; stored shape W means the group was
  // mirrored and the query must be mirrored to match.
  std::array<std::array<std::vector<StabIndex>, 2>, 2> tables_;
  std::array<bool, 2> group_used_ = {false, false};
};

/// Role-swapped engine: stored series become points (their padded canonical
/// vertex tuples), the query becomes a box per cell sequence. Stored-side
/// reach requirements are resolved at build time by filtering which points
/// enter each structure; query-side requirements are baked into the box.
class PointStoreIndex {
 public:
  PointStoreIndex(std::vector<TimeSeries> data, Radius rho, std::size_t t_q,
                  std::size_t t_s, BuildOptions opts = {});
  ~PointStoreIndex();
  PointStoreIndex(PointStoreIndex&&) noexcept;
  PointStoreIndex& operator=(PointStoreIndex&&) noexcept;

  std::vector<std::string> query(const TimeSeries& q) const;

  std::size_t size() const { return ids_.size(); }
  double rho() const { return rho_; }
  std::size_t t_q() const { return t_q_; }
  std::size_t t_s() const { return t_s_; }
  Backend backend() const { return backend_; }
  std::size_t sequence_count() const { return sequences_.size(); }
  std::size_t structure_count() const {
    return (group_used_[0] + group_used_[1]) * 2 * sequences_.size();
  }

 private:
  std::vector<std::string> ids_;
  double rho_;
  std::size_t t_q_;
  std::size_t t_s_;
  Backend backend_;
  std::vector<CellSequence> sequences_;  // grid: stored edges x query edges
  std::array<std::array<std::vector<RangeIndex>, 2>, 2> tables_;
  std::array<bool, 2> group_used_ = {false, false};
};

}  // namespace frq
