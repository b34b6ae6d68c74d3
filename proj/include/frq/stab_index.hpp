#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "frq/backend.hpp"
#include "frq/interval.hpp"

namespace frq {

namespace detail {
class StabTree;
}

/// Stores axis-aligned boxes (sides may be one-sided via +-infinity) and
/// reports the ids of all boxes containing a query point. The tree backend
/// nests one segment tree per dimension over the elementary intervals of the
/// box endpoints; subtrees holding at most `bucket` boxes degenerate to flat
/// lists scanned per query.
class StabIndex {
 public:
  static constexpr std::size_t kDefaultBucket = 256;

  StabIndex(std::size_t dimension, Backend backend, std::size_t bucket = kDefaultBucket);
  ~StabIndex();
  StabIndex(StabIndex&&) noexcept;
  StabIndex& operator=(StabIndex&&) noexcept;
  StabIndex(const StabIndex&) = delete;
  StabIndex& operator=(const StabIndex&) = delete;

  /// Throws DimensionMismatch on wrong-dimension boxes and Error after build().
  void insert(std::size_t id, Rect rect);

  /// Freezes the index. Throws DuplicateId on repeated ids.
  void build();

  /// Sorted ids of all boxes containing p. Throws before build().
  std::vector<std::size_t> query(const Point& p) const;

  std::size_t size() const { return ids_.size(); }
  std::size_t dimension() const { return dimension_; }
  Backend backend() const { return backend_; }

 private:
  std::size_t dimension_;
  Backend backend_;
  std::size_t bucket_;
  bool built_ = false;
  std::vector<std::size_t> ids_;
  std::vector<Rect> rects_;
  std::unique_ptr<detail::StabTree> tree_;
};

}  // namespace frq
