#include "frq/range_index.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "frq/error.hpp"

namespace frq {

namespace detail {

// Dimensions past this many carry no node tree: their sorted order plus an
// explicit check of the remaining sides answers queries in bucket-like time,
// while nested trees there would multiply memory for little gain.
constexpr std::size_t kMaxNodeLevels = 2;

class RangeTree {
 public:
  RangeTree(const Point* pts, std::vector<std::uint32_t> member, std::size_t level,
            std::size_t levels, std::size_t bucket)
      : pts_(pts),
        level_(level),
        levels_(levels),
        bucket_(bucket),
        member_(std::move(member)) {
    std::sort(member_.begin(), member_.end(), [&](std::uint32_t a, std::uint32_t b) {
      double va = pts_[a][level_], vb = pts_[b][level_];
      return va < vb || (va == vb && a < b);
    });
    vals_.resize(member_.size());
    for (std::size_t n = 0; n < member_.size(); ++n) vals_[n] = pts_[member_[n]][level_];
    if (member_.size() > bucket_ && level_ + 1 < levels_ && level_ < kMaxNodeLevels) {
      build_node(0, member_.size());
    }
  }

  void query(const Rect& box, std::vector<std::uint32_t>& out) const {
    const Interval& side = box.sides[level_];
    std::size_t i0 = std::lower_bound(vals_.begin(), vals_.end(), side.lo) - vals_.begin();
    std::size_t i1 = std::upper_bound(vals_.begin(), vals_.end(), side.hi) - vals_.begin();
    if (i0 >= i1) return;
    if (nodes_.empty()) {
      // Flat tail: either the last dimension (membership in [i0, i1) is the
      // whole test) or a small bucket checked explicitly.
      if (level_ + 1 == levels_) {
        for (std::size_t n = i0; n < i1; ++n) out.push_back(member_[n]);
      } else {
        for (std::size_t n = i0; n < i1; ++n) {
          if (contains_from(member_[n], box, level_ + 1)) out.push_back(member_[n]);
        }
      }
      return;
    }
    query_node(0, 0, member_.size(), i0, i1, box, out);
  }

 private:
  struct Node {
    std::int32_t left = -1;
    std::int32_t right = -1;
    std::unique_ptr<RangeTree> nested;  // next dimension over this node's slice
  };

  bool contains_from(std::uint32_t it, const Rect& box, std::size_t from) const {
    for (std::size_t d = from; d < levels_; ++d) {
      if (!box.sides[d].contains(pts_[it][d])) return false;
    }
    return true;
  }

  std::int32_t build_node(std::size_t a, std::size_t b) {
    std::int32_t idx = static_cast<std::int32_t>(nodes_.size());
    nodes_.emplace_back();
    if (b - a > bucket_) {
      // Only internal nodes carry a nested tree; a covered leaf is cheaper
      // to scan than to recurse into.
      std::vector<std::uint32_t> slice(member_.begin() + a, member_.begin() + b);
      auto nested = std::make_unique<RangeTree>(pts_, std::move(slice), level_ + 1,
                                                levels_, bucket_);
      std::size_t mid = a + (b - a) / 2;
      std::int32_t l = build_node(a, mid);
      std::int32_t r = build_node(mid, b);
      Node& node = nodes_[static_cast<std::size_t>(idx)];
      node.left = l;
      node.right = r;
      node.nested = std::move(nested);
    }
    return idx;
  }

  void query_node(std::int32_t idx, std::size_t a, std::size_t b, std::size_t i0,
                  std::size_t i1, const Rect& box, std::vector<std::uint32_t>& out) const {
    if (idx < 0 || b <= i0 || i1 <= a) return;
    const Node& node = nodes_[static_cast<std::size_t>(idx)];
    if (i0 <= a && b <= i1) {
      if (node.nested) {
        node.nested->query(box, out);
      } else {
        for (std::size_t n = a; n < b; ++n) {
          if (contains_from(member_[n], box, level_ + 1)) out.push_back(member_[n]);
        }
      }
      return;
    }
    if (node.left < 0) {
      // Partially covered leaf: indices within [i0, i1) already satisfy this
      // dimension, the rest is checked explicitly.
      for (std::size_t n = std::max(a, i0); n < std::min(b, i1); ++n) {
        if (contains_from(member_[n], box, level_ + 1)) out.push_back(member_[n]);
      }
      return;
    }
    std::size_t mid = a + (b - a) / 2;
    query_node(node.left, a, mid, i0, i1, box, out);
    query_node(node.right, mid, b, i0, i1, box, out);
  }

  const Point* pts_;
  std::size_t level_;
  std::size_t levels_;
  std::size_t bucket_;
  std::vector<std::uint32_t> member_;
  std::vector<double> vals_;
  std::vector<Node> nodes_;
};

}  // namespace detail

RangeIndex::RangeIndex(std::size_t dimension, Backend backend, std::size_t bucket)
    : dimension_(dimension), backend_(backend), bucket_(bucket) {
  if (dimension == 0) throw DimensionMismatch("range index needs dimension >= 1");
  if (bucket == 0) bucket_ = 1;
}

RangeIndex::~RangeIndex() = default;
RangeIndex::RangeIndex(RangeIndex&&) noexcept = default;
RangeIndex& RangeIndex::operator=(RangeIndex&&) noexcept = default;

void RangeIndex::insert(std::size_t id, Point p) {
  if (built_) throw Error("range index already built");
  if (p.size() != dimension_) {
    throw DimensionMismatch("point dimension " + std::to_string(p.size()) +
                            " does not match index dimension " +
                            std::to_string(dimension_));
  }
  ids_.push_back(id);
  points_.push_back(std::move(p));
}

void RangeIndex::build() {
  if (built_) throw Error("range index already built");
  built_ = true;
  std::vector<std::size_t> sorted = ids_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DuplicateId("range index ids must be unique");
  }
  if (backend_ == Backend::tree && !points_.empty()) {
    std::vector<std::uint32_t> all(points_.size());
    for (std::size_t n = 0; n < all.size(); ++n) all[n] = static_cast<std::uint32_t>(n);
    tree_ = std::make_unique<detail::RangeTree>(points_.data(), std::move(all), 0,
                                                dimension_, bucket_);
  }
}

std::vector<std::size_t> RangeIndex::query(const Rect& box) const {
  if (!built_) throw Error("range index not built");
  if (box.dimension() != dimension_) {
    throw DimensionMismatch("query box dimension mismatch");
  }
  std::vector<std::size_t> out;
  if (box.empty()) return out;
  if (backend_ == Backend::naive) {
    for (std::size_t n = 0; n < points_.size(); ++n) {
      if (box.contains(points_[n])) out.push_back(ids_[n]);
    }
  } else if (tree_) {
    std::vector<std::uint32_t> hits;
    tree_->query(box, hits);
    out.reserve(hits.size());
    for (std::uint32_t n : hits) out.push_back(ids_[n]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace frq
