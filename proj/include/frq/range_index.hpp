#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "frq/backend.hpp"
#include "frq/interval.hpp"

namespace frq {

namespace detail {
class RangeTree;
}

/// Stores points and reports the ids of all points inside a query box.
/// The tree backend is a nested range tree (one level per dimension, the
/// last dimension a sorted array); subtrees of at most `bucket` points
/// degenerate to flat lists scanned per query.
class RangeIndex {
 public:
  static constexpr std::size_t kDefaultBucket = 64;

  RangeIndex(std::size_t dimension, Backend backend, std::size_t bucket = kDefaultBucket);
  ~RangeIndex();
  RangeIndex(RangeIndex&&) noexcept;
  RangeIndex& operator=(RangeIndex&&) noexcept;
  RangeIndex(const RangeIndex&) = delete;
  RangeIndex& operator=(const RangeIndex&) = delete;

  /// Throws DimensionMismatch on wrong-dimension points and Error after build().
  void insert(std::size_t id, Point p);

  /// Freezes the index. Throws DuplicateId on repeated ids.
  void build();

  /// Sorted ids of all points inside the box. Throws before build().
  std::vector<std::size_t> query(const Rect& box) const;

  std::size_t size() const { return ids_.size(); }
  std::size_t dimension() const { return dimension_; }
  Backend backend() const { return backend_; }

 private:
  std::size_t dimension_;
  Backend backend_;
  std::size_t bucket_;
  bool built_ = false;
  std::vector<std::size_t> ids_;
  std::vector<Point> points_;
  std::unique_ptr<detail::RangeTree> tree_;
};

}  // namespace frq
