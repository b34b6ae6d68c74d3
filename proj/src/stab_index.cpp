#include "frq/stab_index.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "frq/error.hpp"

namespace frq {

namespace detail {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Dimensions past this many are handled by explicit side checks instead of
// nested trees; deep nesting multiplies memory for little practical gain.
constexpr std::size_t kMaxNestedLevels = 2;

// Inclusive range of elementary slots. With m distinct finite endpoint
// coordinates there are 2m + 1 slots: odd slots are the coordinates
// themselves, even slots the open gaps between them (slot 0 below all
// coordinates, slot 2m above).
struct SlotRange {
  std::uint32_t lo = 0;
  std::uint32_t hi = 0;
};

}  // namespace

class StabTree {
 public:
  StabTree(const Rect* rects, std::vector<std::uint32_t> member, std::size_t level,
           std::size_t levels, std::size_t bucket)
      : rects_(rects), level_(level), levels_(levels), bucket_(bucket) {
    // Sides that are empty or pinned at an infinity can never contain a
    // finite coordinate; their boxes drop out here.
    std::vector<std::uint32_t> live;
    live.reserve(member.size());
    for (std::uint32_t it : member) {
      const Interval& s = rects_[it].sides[level_];
      if (s.empty() || s.lo == kInf || s.hi == -kInf) continue;
      live.push_back(it);
      if (s.lo != -kInf) coords_.push_back(s.lo);
      if (s.hi != kInf) coords_.push_back(s.hi);
    }
    std::sort(coords_.begin(), coords_.end());
    coords_.erase(std::unique(coords_.begin(), coords_.end()), coords_.end());

    slots_ = static_cast<std::uint32_t>(2 * coords_.size() + 1);
    std::vector<SlotRange> ranges(live.size());
    for (std::size_t n = 0; n < live.size(); ++n) {
      const Interval& s = rects_[live[n]].sides[level_];
      ranges[n] = SlotRange{slot_floor(s.lo, true), slot_floor(s.hi, false)};
    }
    build_node(0, slots_, std::move(live), ranges);
  }

  void query(const Point& p, std::vector<std::uint32_t>& out) const {
    if (nodes_.empty()) return;
    std::uint32_t x = query_slot(p[level_]);
    std::int32_t idx = 0;
    std::uint32_t lo = 0, hi = slots_;
    while (idx >= 0) {
      const Node& node = nodes_[static_cast<std::size_t>(idx)];
      for (std::uint32_t it : node.bucket_items) {
        if (contains_from(it, p, level_)) out.push_back(it);
      }
      if (node.nested) {
        node.nested->query(p, out);
      } else {
        out.insert(out.end(), node.canonical.begin(), node.canonical.end());
      }
      std::uint32_t mid = lo + (hi - lo) / 2;
      if (hi - lo <= 1) break;
      if (x < mid) {
        idx = node.left;
        hi = mid;
      } else {
        idx = node.right;
        lo = mid;
      }
    }
  }

 private:
  struct Node {
    std::int32_t left = -1;
    std::int32_t right = -1;
    std::vector<std::uint32_t> canonical;      // cover this node entirely
    std::unique_ptr<StabTree> nested;          // canonical items, next dimension
    std::vector<std::uint32_t> bucket_items;   // flat leaf, checked explicitly
  };

  bool contains_from(std::uint32_t it, const Point& p, std::size_t from) const {
    const Rect& r = rects_[it];
    for (std::size_t d = from; d < levels_; ++d) {
      if (!r.sides[d].contains(p[d])) return false;
    }
    return true;
  }

  // Slot of an interval endpoint. Finite endpoints were all registered, so
  // the lookup is exact.
  std::uint32_t slot_floor(double v, bool is_lo) const {
    if (is_lo && v == -kInf) return 0;
    if (!is_lo && v == kInf) return slots_ - 1;
    auto it = std::lower_bound(coords_.begin(), coords_.end(), v);
    return static_cast<std::uint32_t>(2 * (it - coords_.begin()) + 1);
  }

  std::uint32_t query_slot(double x) const {
    auto it = std::lower_bound(coords_.begin(), coords_.end(), x);
    std::size_t i = static_cast<std::size_t>(it - coords_.begin());
    if (it != coords_.end() && *it == x) return static_cast<std::uint32_t>(2 * i + 1);
    return static_cast<std::uint32_t>(2 * i);
  }

  std::int32_t build_node(std::uint32_t lo, std::uint32_t hi,
                          std::vector<std::uint32_t>&& mem,
                          const std::vector<SlotRange>& ranges) {
    if (mem.empty()) return -1;
    std::int32_t idx = static_cast<std::int32_t>(nodes_.size());
    nodes_.emplace_back();

    if (mem.size() <= bucket_) {
      nodes_[static_cast<std::size_t>(idx)].bucket_items = std::move(mem);
      return idx;
    }

    std::vector<std::uint32_t> canonical;
    if (hi - lo <= 1) {
      // Every interval reaching a single slot covers it.
      canonical = std::move(mem);
    } else {
      std::uint32_t mid = lo + (hi - lo) / 2;
      std::vector<std::uint32_t> left_mem, right_mem;
      std::vector<SlotRange> left_r, right_r;
      for (std::size_t n = 0; n < mem.size(); ++n) {
        const SlotRange& r = ranges[n];
        if (r.lo <= lo && hi - 1 <= r.hi) {
          canonical.push_back(mem[n]);
          continue;
        }
        if (r.lo < mid && r.hi >= lo) {
          left_mem.push_back(mem[n]);
          left_r.push_back(r);
        }
        if (r.hi >= mid && r.lo < hi) {
          right_mem.push_back(mem[n]);
          right_r.push_back(r);
        }
      }
      std::int32_t l = build_node(lo, mid, std::move(left_mem), left_r);
      std::int32_t rch = build_node(mid, hi, std::move(right_mem), right_r);
      nodes_[static_cast<std::size_t>(idx)].left = l;
      nodes_[static_cast<std::size_t>(idx)].right = rch;
    }

    Node& node = nodes_[static_cast<std::size_t>(idx)];
    if (canonical.empty()) return idx;
    if (level_ + 1 == levels_) {
      node.canonical = std::move(canonical);
    } else if (canonical.size() <= bucket_ || level_ + 1 >= kMaxNestedLevels) {
      // Too few covering items to justify a nested tree, or past the nesting
      // budget. They cover this node's slots, so the explicit check only
      // really tests later sides.
      node.bucket_items.insert(node.bucket_items.end(), canonical.begin(),
                               canonical.end());
    } else {
      node.nested =
          std::make_unique<StabTree>(rects_, std::move(canonical), level_ + 1, levels_,
                                     bucket_);
    }
    return idx;
  }

  const Rect* rects_;
  std::size_t level_;
  std::size_t levels_;
  std::size_t bucket_;
  std::vector<double> coords_;
  std::uint32_t slots_ = 1;
  std::vector<Node> nodes_;
};

}  // namespace detail

StabIndex::StabIndex(std::size_t dimension, Backend backend, std::size_t bucket)
    : dimension_(dimension), backend_(backend), bucket_(bucket) {
  if (dimension == 0) throw DimensionMismatch("stab index needs dimension >= 1");
  if (bucket == 0) bucket_ = 1;
}

StabIndex::~StabIndex() = default;
StabIndex::StabIndex(StabIndex&&) noexcept = default;
StabIndex& StabIndex::operator=(StabIndex&&) noexcept = default;

void StabIndex::insert(std::size_t id, Rect rect) {
  if (built_) throw Error("stab index already built");
  if (rect.dimension() != dimension_) {
    throw DimensionMismatch("box dimension " + std::to_string(rect.dimension()) +
                            " does not match index dimension " +
                            std::to_string(dimension_));
  }
  ids_.push_back(id);
  rects_.push_back(std::move(rect));
}

void StabIndex::build() {
  if (built_) throw Error("stab index already built");
  built_ = true;
  std::vector<std::size_t> sorted = ids_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DuplicateId("stab index ids must be unique");
  }
  if (backend_ == Backend::tree && !rects_.empty()) {
    std::vector<std::uint32_t> all(rects_.size());
    for (std::uint32_t n = 0; n < all.size(); ++n) all[n] = n;
    tree_ = std::make_unique<detail::StabTree>(rects_.data(), std::move(all), 0,
                                               dimension_, bucket_);
  }
}

std::vector<std::size_t> StabIndex::query(const Point& p) const {
  if (!built_) throw Error("stab index not built");
  if (p.size() != dimension_) {
    throw DimensionMismatch("query point dimension mismatch");
  }
  std::vector<std::size_t> out;
  if (backend_ == Backend::naive) {
    for (std::size_t n = 0; n < rects_.size(); ++n) {
      if (rects_[n].contains(p)) out.push_back(ids_[n]);
    }
  } else if (tree_) {
    std::vector<std::uint32_t> hits;
    tree_->query(p, hits);
    out.reserve(hits.size());
    for (std::uint32_t n : hits) out.push_back(ids_[n]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace frq
