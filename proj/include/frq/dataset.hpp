#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "frq/backend.hpp"
#include "frq/series.hpp"

namespace frq {

/// One JSON object per line: {"id": string, "values": [numbers]}. Lines of
/// pure whitespace are skipped. Malformed lines raise Error naming the
/// 1-based line number.
std::vector<TimeSeries> read_jsonl(std::istream& in);
std::vector<TimeSeries> read_jsonl_file(const std::string& path);

/// Round-trip-precise serialization, one record per line, keys sorted.
void write_jsonl(std::ostream& out, const std::vector<TimeSeries>& data);

enum class EngineKind { stab, pointstore };

const char* to_string(EngineKind e);

/// Persisted index: parameters plus the dataset itself. Loading rebuilds the
/// in-memory structures from the payload, which is deterministic given the
/// same parameters, so the file stays valid across internal layout changes.
struct IndexFile {
  EngineKind engine = EngineKind::stab;
  Backend backend = Backend::tree;
  double rho = 0.0;
  std::size_t t_q = 0;
  std::size_t t_s = 0;
  std::vector<TimeSeries> data;
};

/// Versioned binary container; loading a file with a different magic or
/// format version is a hard Error.
void save_index_file(const std::string& path, const IndexFile& file);
IndexFile load_index_file(const std::string& path);

}  // namespace frq
