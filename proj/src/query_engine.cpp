#include "frq/query_engine.hpp"

#include <algorithm>
#include <utility>

#include "frq/error.hpp"
#include "frq/freespace.hpp"

namespace frq {

namespace {

void ensure_unique_ids(std::vector<std::string> ids) {
  std::sort(ids.begin(), ids.end());
  auto dup = std::adjacent_find(ids.begin(), ids.end());
  if (dup != ids.end()) throw DuplicateId("duplicate series id '" + *dup + "'");
}

std::size_t group_of(Shape shape) { return shape == Shape::W ? 1 : 0; }

// Canonical forms per shape group, descending-first group mirrored so every
// retained form is ascending-first. members holds dataset positions.
struct Grouped {
  std::array<std::vector<std::size_t>, 2> members;
  std::array<std::vector<CanonicalSeries>, 2> forms;
};

Grouped group_by_shape(const std::vector<TimeSeries>& data, std::size_t target) {
  Grouped g;
  for (std::size_t pos = 0; pos < data.size(); ++pos) {
    CanonicalSeries cs = canonicalize(data[pos], target);
    std::size_t k = group_of(cs.shape);
    if (k == 1) cs = mirror(cs);
    g.members[k].push_back(pos);
    g.forms[k].push_back(std::move(cs));
  }
  return g;
}

std::vector<std::string> positions_to_ids(std::vector<std::size_t> hits,
                                          const std::vector<std::string>& ids) {
  std::sort(hits.begin(), hits.end());
  hits.erase(std::unique(hits.begin(), hits.end()), hits.end());
  std::vector<std::string> out;
  out.reserve(hits.size());
  for (std::size_t pos : hits) out.push_back(ids[pos]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<std::string> naive_query(const std::vector<TimeSeries>& data,
                                     const TimeSeries& q, Radius rho) {
  std::vector<std::string> out;
  for (const TimeSeries& s : data) {
    if (decide_frechet(q, s, rho)) out.push_back(s.id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

FrechetIndex::FrechetIndex(std::vector<TimeSeries> data, Radius rho, std::size_t t_q,
                           std::size_t t_s, BuildOptions opts)
    : rho_(rho.value), t_q_(t_q), t_s_(t_s), backend_(opts.backend) {
  ids_.reserve(data.size());
  for (const TimeSeries& ts : data) ids_.push_back(ts.id);
  ensure_unique_ids(ids_);

  sequences_ = enumerate_valid_sequences(t_q, t_s, opts.sequence_cap);
  requirements_.reserve(sequences_.size());
  for (const CellSequence& seq : sequences_) {
    requirements_.push_back(sequence_reach_requirements(seq, Shape::M));
  }

  Grouped grouped = group_by_shape(data, t_s);
  for (std::size_t g = 0; g < 2; ++g) {
    if (grouped.members[g].empty()) continue;
    group_used_[g] = true;
    for (std::size_t sig = 0; sig < 2; ++sig) {
      Shape query_shape = sig == 0 ? Shape::M : Shape::W;
      std::vector<StabIndex>& table = tables_[g][sig];
      table.reserve(sequences_.size());
      for (const CellSequence& seq : sequences_) {
        StabIndex index(t_q, backend_);
        for (std::size_t n = 0; n < grouped.forms[g].size(); ++n) {
          Rect rect = build_rectangle(seq, grouped.forms[g][n], rho, query_shape);
          if (!rect.empty()) index.insert(grouped.members[g][n], std::move(rect));
        }
        index.build();
        table.push_back(std::move(index));
      }
    }
  }
}

FrechetIndex::~FrechetIndex() = default;
FrechetIndex::FrechetIndex(FrechetIndex&&) noexcept = default;
FrechetIndex& FrechetIndex::operator=(FrechetIndex&&) noexcept = default;

std::vector<std::string> FrechetIndex::query(const TimeSeries& q) const {
  CanonicalSeries base = canonicalize(q, t_q_);
  std::vector<std::size_t> hits;
  for (std::size_t g = 0; g < 2; ++g) {
    if (!group_used_[g]) continue;
    CanonicalSeries eff = g == 0 ? base : mirror(base);
    ReachProfile profile = reach_profile(eff.values, rho_);
    const std::vector<StabIndex>& table = tables_[g][group_of(eff.shape)];
    for (std::size_t k = 0; k < sequences_.size(); ++k) {
      if (!requirements_[k].dominated_by(profile)) continue;
      std::vector<std::size_t> got = table[k].query(eff.values);
      hits.insert(hits.end(), got.begin(), got.end());
    }
  }
  return positions_to_ids(std::move(hits), ids_);
}

PointStoreIndex::PointStoreIndex(std::vector<TimeSeries> data, Radius rho,
                                 std::size_t t_q, std::size_t t_s, BuildOptions opts)
    : rho_(rho.value), t_q_(t_q), t_s_(t_s), backend_(opts.backend) {
  ids_.reserve(data.size());
  for (const TimeSeries& ts : data) ids_.push_back(ts.id);
  ensure_unique_ids(ids_);

  // Grid rows follow the stored curve here, so enumeration swaps the targets.
  sequences_ = enumerate_valid_sequences(t_s, t_q, opts.sequence_cap);

  Grouped grouped = group_by_shape(data, t_s);
  for (std::size_t g = 0; g < 2; ++g) {
    if (grouped.members[g].empty()) continue;
    group_used_[g] = true;
    std::vector<ReachProfile> profiles;
    profiles.reserve(grouped.forms[g].size());
    for (const CanonicalSeries& cs : grouped.forms[g]) {
      profiles.push_back(reach_profile(cs.values, rho_));
    }
    for (std::size_t sig = 0; sig < 2; ++sig) {
      Shape query_shape = sig == 0 ? Shape::M : Shape::W;
      std::vector<RangeIndex>& table = tables_[g][sig];
      table.reserve(sequences_.size());
      for (const CellSequence& seq : sequences_) {
        ReachRequirement req = sequence_reach_requirements(seq, query_shape);
        RangeIndex index(t_s, backend_);
        for (std::size_t n = 0; n < grouped.forms[g].size(); ++n) {
          if (!req.dominated_by(profiles[n])) continue;
          index.insert(grouped.members[g][n], grouped.forms[g][n].values);
        }
        index.build();
        table.push_back(std::move(index));
      }
    }
  }
}

PointStoreIndex::~PointStoreIndex() = default;
PointStoreIndex::PointStoreIndex(PointStoreIndex&&) noexcept = default;
PointStoreIndex& PointStoreIndex::operator=(PointStoreIndex&&) noexcept = default;

std::vector<std::string> PointStoreIndex::query(const TimeSeries& q) const {
  CanonicalSeries base = canonicalize(q, t_q_);
  std::vector<std::size_t> hits;
  for (std::size_t g = 0; g < 2; ++g) {
    if (!group_used_[g]) continue;
    CanonicalSeries eff = g == 0 ? base : mirror(base);
    const std::vector<RangeIndex>& table = tables_[g][group_of(eff.shape)];
    for (std::size_t k = 0; k < sequences_.size(); ++k) {
      Rect box = query_rectangle(sequences_[k], eff, Radius(rho_), Shape::M);
      if (box.empty()) continue;
      std::vector<std::size_t> got = table[k].query(box);
      hits.insert(hits.end(), got.begin(), got.end());
    }
  }
  return positions_to_ids(std::move(hits), ids_);
}

}  // namespace frq
