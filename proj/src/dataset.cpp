#include "frq/dataset.hpp"

#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include <json.hpp>

#include "frq/error.hpp"

namespace frq {

namespace {

using nlohmann::json;

constexpr char kMagic[8] = {'F', 'R', 'Q', 'I', 'D', 'X', '0', '\n'};
constexpr std::uint32_t kFormatVersion = 1;

[[noreturn]] void bad_line(std::size_t line_no, const std::string& why) {
  throw Error("line " + std::to_string(line_no) + ": " + why);
}

TimeSeries parse_record(const std::string& line, std::size_t line_no) {
  json j = json::parse(line, nullptr, false);
  if (j.is_discarded()) bad_line(line_no, "not valid JSON");
  if (!j.is_object()) bad_line(line_no, "record is not a JSON object");
  if (!j.contains("id") || !j["id"].is_string()) {
    bad_line(line_no, "missing string field 'id'");
  }
  if (!j.contains("values") || !j["values"].is_array()) {
    bad_line(line_no, "missing array field 'values'");
  }
  std::vector<double> values;
  values.reserve(j["values"].size());
  for (const json& v : j["values"]) {
    if (!v.is_number()) bad_line(line_no, "'values' must contain only numbers");
    values.push_back(v.get<double>());
  }
  try {
    return make_series(j["id"].get<std::string>(), std::move(values));
  } catch (const InvalidSeries& e) {
    bad_line(line_no, e.what());
  }
}

template <typename T>
void put(std::ostream& out, const T& v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(v));
}

template <typename T>
T get(std::istream& in) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof(v));
  if (!in) throw Error("index file truncated");
  return v;
}

}  // namespace

std::vector<TimeSeries> read_jsonl(std::istream& in) {
  std::vector<TimeSeries> data;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    data.push_back(parse_record(line, line_no));
  }
  return data;
}

std::vector<TimeSeries> read_jsonl_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return read_jsonl(in);
}

void write_jsonl(std::ostream& out, const std::vector<TimeSeries>& data) {
  for (const TimeSeries& ts : data) {
    json j;
    j["id"] = ts.id;
    j["values"] = ts.values;
    out << j.dump() << '\n';
  }
}

const char* to_string(EngineKind e) {
  return e == EngineKind::stab ? "stab" : "pointstore";
}

void save_index_file(const std::string& path, const IndexFile& file) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out.write(kMagic, sizeof(kMagic));
  put(out, kFormatVersion);
  put(out, static_cast<std::uint8_t>(file.engine));
  put(out, static_cast<std::uint8_t>(file.backend));
  put(out, file.rho);
  put(out, static_cast<std::uint64_t>(file.t_q));
  put(out, static_cast<std::uint64_t>(file.t_s));
  put(out, static_cast<std::uint64_t>(file.data.size()));
  for (const TimeSeries& ts : file.data) {
    put(out, static_cast<std::uint64_t>(ts.id.size()));
    out.write(ts.id.data(), static_cast<std::streamsize>(ts.id.size()));
    put(out, static_cast<std::uint64_t>(ts.values.size()));
    out.write(reinterpret_cast<const char*>(ts.values.data()),
              static_cast<std::streamsize>(ts.values.size() * sizeof(double)));
  }
  if (!out) throw Error("failed writing '" + path + "'");
}

IndexFile load_index_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  char magic[sizeof(kMagic)];
  in.read(magic, sizeof(magic));
  if (!in || std::string(magic, sizeof(magic)) != std::string(kMagic, sizeof(kMagic))) {
    throw Error("'" + path + "' is not an index file");
  }
  std::uint32_t version = get<std::uint32_t>(in);
  if (version != kFormatVersion) {
    throw Error("index format version " + std::to_string(version) +
                " unsupported (expected " + std::to_string(kFormatVersion) + ")");
  }
  IndexFile file;
  std::uint8_t engine = get<std::uint8_t>(in);
  std::uint8_t backend = get<std::uint8_t>(in);
  if (engine > 1) throw Error("unknown engine tag");
  if (backend > 1) throw Error("unknown backend tag");
  file.engine = static_cast<EngineKind>(engine);
  file.backend = static_cast<Backend>(backend);
  file.rho = get<double>(in);
  file.t_q = static_cast<std::size_t>(get<std::uint64_t>(in));
  file.t_s = static_cast<std::size_t>(get<std::uint64_t>(in));
  std::uint64_t count = get<std::uint64_t>(in);
  file.data.reserve(static_cast<std::size_t>(count));
  for (std::uint64_t n = 0; n < count; ++n) {
    std::uint64_t id_len = get<std::uint64_t>(in);
    std::string id(static_cast<std::size_t>(id_len), '\0');
    in.read(id.data(), static_cast<std::streamsize>(id_len));
    std::uint64_t val_count = get<std::uint64_t>(in);
    std::vector<double> values(static_cast<std::size_t>(val_count));
    in.read(reinterpret_cast<char*>(values.data()),
            static_cast<std::streamsize>(val_count * sizeof(double)));
    if (!in) throw Error("index file truncated");
    file.data.push_back(TimeSeries{std::move(id), std::move(values)});
  }
  return file;
}

}  // namespace frq
