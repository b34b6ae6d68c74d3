#pragma once

namespace frq {

/// Storage strategy of the geometric indexes. `naive` scans every item per
/// query; `tree` builds nested segment trees with flat leaf buckets.
enum class Backend { naive, tree };

inline const char* to_string(Backend b) { return b == Backend::naive ? "naive" : "tree"; }

}  // namespace frq
