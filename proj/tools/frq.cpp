#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "frq/dataset.hpp"
#include "frq/error.hpp"
#include "frq/query_engine.hpp"
#include "frq/reductions.hpp"
#include "frq/rng.hpp"
#include "frq/series.hpp"

using nlohmann::json;

namespace {

// Set by --engine / index files; chooses which of the two engines runs.
struct Engine {
  std::optional<frq::FrechetIndex> stab;
  std::optional<frq::PointStoreIndex> store;

  std::vector<std::string> query(const frq::TimeSeries& q) const {
    return stab ? stab->query(q) : store->query(q);
  }
};

std::size_t sequence_cap() {
  const char* raw = std::getenv("FRECHET_STAB_SEQ_CAP");
  if (raw == nullptr || *raw == '\0') return frq::kDefaultSequenceCap;
  char* end = nullptr;
  unsigned long long v = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0) {
    throw frq::Error("FRECHET_STAB_SEQ_CAP must be a positive integer");
  }
  return static_cast<std::size_t>(v);
}

frq::EngineKind parse_engine(const std::string& name) {
  if (name == "stab") return frq::EngineKind::stab;
  if (name == "pointstore") return frq::EngineKind::pointstore;
  throw frq::Error("unknown engine '" + name + "' (expected stab or pointstore)");
}

frq::Backend parse_backend(const std::string& name) {
  if (name == "naive") return frq::Backend::naive;
  if (name == "tree") return frq::Backend::tree;
  throw frq::Error("unknown backend '" + name + "' (expected naive or tree)");
}

// Smallest complexity every stored series canonicalizes into.
std::size_t choose_t_s(const std::vector<frq::TimeSeries>& data) {
  std::size_t t_s = 2;
  for (const frq::TimeSeries& ts : data) {
    t_s = std::max(t_s, frq::canonicalize(ts, ts.complexity()).canonical_len);
  }
  return t_s;
}

Engine build_engine(frq::EngineKind kind, std::vector<frq::TimeSeries> data, double rho,
                    std::size_t t_q, std::size_t t_s, frq::Backend backend) {
  frq::BuildOptions opts{backend, sequence_cap()};
  Engine e;
  if (kind == frq::EngineKind::stab) {
    e.stab.emplace(std::move(data), frq::Radius(rho), t_q, t_s, opts);
  } else {
    e.store.emplace(std::move(data), frq::Radius(rho), t_q, t_s, opts);
  }
  return e;
}

json series_json(const frq::TimeSeries& ts) {
  return json{{"id", ts.id}, {"values", ts.values}};
}

int cmd_build(const std::string& input, double rho, std::size_t t_q,
              const std::string& engine_name, const std::string& backend_name,
              std::size_t t_s_flag, const std::string& out_path) {
  frq::EngineKind kind = parse_engine(engine_name);
  frq::Backend backend = parse_backend(backend_name);
  std::vector<frq::TimeSeries> data = frq::read_jsonl_file(input);
  std::size_t t_s = t_s_flag != 0 ? t_s_flag : choose_t_s(data);

  Engine engine = build_engine(kind, data, rho, t_q, t_s, backend);
  frq::save_index_file(out_path,
                       frq::IndexFile{kind, backend, rho, t_q, t_s, std::move(data)});

  std::size_t sequences =
      engine.stab ? engine.stab->sequence_count() : engine.store->sequence_count();
  std::size_t structures =
      engine.stab ? engine.stab->structure_count() : engine.store->structure_count();
  json summary{{"engine", frq::to_string(kind)},   {"backend", frq::to_string(backend)},
               {"n", engine.stab ? engine.stab->size() : engine.store->size()},
               {"rho", rho},                       {"t_q", t_q},
               {"t_s", t_s},                       {"sequences", sequences},
               {"structures", structures},         {"index", out_path}};
  std::cout << summary.dump() << '\n';
  return 0;
}

int cmd_query(const std::string& index_path, const std::string& queries_path) {
  frq::IndexFile file = frq::load_index_file(index_path);
  Engine engine =
      build_engine(file.engine, file.data, file.rho, file.t_q, file.t_s, file.backend);
  std::vector<frq::TimeSeries> queries = frq::read_jsonl_file(queries_path);
  for (const frq::TimeSeries& q : queries) {
    json line{{"query_id", q.id}};
    try {
      line["matches"] = engine.query(q);
    } catch (const frq::CanonicalTooLong& e) {
      line["error"] = e.what();
    }
    std::cout << line.dump() << '\n';
  }
  return 0;
}

frq::TimeSeries random_walk_series(frq::Rng& rng, std::size_t max_len, double lo,
                                   double hi, const std::string& id) {
  std::size_t len = static_cast<std::size_t>(rng.uniform_int(2, static_cast<std::int64_t>(max_len)));
  std::vector<double> values;
  values.reserve(len);
  for (std::size_t k = 0; k < len; ++k) values.push_back(rng.uniform(lo, hi));
  return frq::make_series(id, std::move(values));
}

int report_mismatch(const std::string& stage, std::size_t trial, const json& instance,
                    const std::vector<std::string>& expected,
                    const std::vector<std::string>& got) {
  json out{{"result", "mismatch"}, {"stage", stage}, {"trial", trial},
           {"instance", instance}, {"expected", expected}, {"got", got}};
  std::cout << out.dump() << '\n';
  return 1;
}

int cmd_verify(const std::string& input, double rho, std::size_t t_q, std::size_t trials,
               std::uint64_t seed) {
  std::size_t checked = 0;
  std::size_t skipped = 0;

  // Stage one: the provided dataset, each record doubling as a query.
  std::vector<frq::TimeSeries> data =
      input.empty() ? std::vector<frq::TimeSeries>{} : frq::read_jsonl_file(input);
  if (!data.empty()) {
    std::size_t t_s = choose_t_s(data);
    for (frq::Backend backend : {frq::Backend::naive, frq::Backend::tree}) {
      frq::BuildOptions opts{backend, sequence_cap()};
      frq::FrechetIndex stab(data, frq::Radius(rho), t_q, t_s, opts);
      frq::PointStoreIndex store(data, frq::Radius(rho), t_q, t_s, opts);
      for (const frq::TimeSeries& q : data) {
        if (frq::canonicalize(q, q.complexity()).canonical_len > t_q) {
          ++skipped;
          continue;
        }
        std::vector<std::string> want = frq::naive_query(data, q, frq::Radius(rho));
        json instance{{"input", input},       {"rho", rho},
                      {"t_q", t_q},           {"backend", frq::to_string(backend)},
                      {"query", series_json(q)}};
        std::vector<std::string> got = stab.query(q);
        if (got != want) return report_mismatch("dataset-stab", 0, instance, want, got);
        got = store.query(q);
        if (got != want) return report_mismatch("dataset-pointstore", 0, instance, want, got);
        ++checked;
      }
    }
  }

  // Stage two: seeded random instances, engines against the naive scan.
  for (std::size_t t = 0; t < trials; ++t) {
    frq::Rng rng(seed + 0x9e3779b97f4a7c15ull * (t + 1));
    std::size_t tq = static_cast<std::size_t>(rng.uniform_int(2, 6));
    std::size_t ts = static_cast<std::size_t>(rng.uniform_int(2, 6));
    double r = rng.uniform(0.0, 30.0);
    if (r == 0.0) r = 0.5;
    frq::Backend backend = t % 2 == 0 ? frq::Backend::naive : frq::Backend::tree;
    std::vector<frq::TimeSeries> inst;
    std::size_t count = static_cast<std::size_t>(rng.uniform_int(0, 40));
    for (std::size_t i = 0; i < count; ++i) {
      inst.push_back(random_walk_series(rng, ts, 0.0, 100.0, "s" + std::to_string(i)));
    }
    frq::BuildOptions opts{backend, sequence_cap()};
    frq::FrechetIndex stab(inst, frq::Radius(r), tq, ts, opts);
    frq::PointStoreIndex store(inst, frq::Radius(r), tq, ts, opts);
    for (int probe = 0; probe < 4; ++probe) {
      frq::TimeSeries q = random_walk_series(rng, tq, 0.0, 100.0, "q");
      std::vector<std::string> want = frq::naive_query(inst, q, frq::Radius(r));
      json instance{{"seed", seed},   {"rho", r},
                    {"t_q", tq},      {"t_s", ts},
                    {"backend", frq::to_string(backend)},
                    {"dataset", json::array()},
                    {"query", series_json(q)}};
      for (const frq::TimeSeries& s : inst) instance["dataset"].push_back(series_json(s));
      std::vector<std::string> got = stab.query(q);
      if (got != want) return report_mismatch("random-stab", t, instance, want, got);
      got = store.query(q);
      if (got != want) return report_mismatch("random-pointstore", t, instance, want, got);
      ++checked;
    }
  }

  // Stage three: reduction round-trips against direct containment.
  for (std::size_t t = 0; t < trials; ++t) {
    frq::Rng rng(seed ^ (0xc2b2ae3d27d4eb4full + t));
    std::size_t d = static_cast<std::size_t>(rng.uniform_int(1, 3));
    frq::Backend backend = t % 2 == 0 ? frq::Backend::tree : frq::Backend::naive;
    std::vector<frq::UnitBox> boxes;
    std::size_t count = static_cast<std::size_t>(rng.uniform_int(0, 20));
    for (std::size_t i = 0; i < count; ++i) {
      frq::UnitBox box;
      box.id = "b" + std::to_string(i);
      for (std::size_t k = 0; k < d; ++k) {
        double a = rng.uniform(0.0, 1.0);
        double b = rng.uniform(0.0, 1.0);
        box.lo.push_back(std::min(a, b));
        box.hi.push_back(std::max(a, b));
      }
      boxes.push_back(std::move(box));
    }
    std::vector<std::vector<double>> points;
    for (int i = 0; i < 6; ++i) {
      std::vector<double> p;
      for (std::size_t k = 0; k < d; ++k) p.push_back(rng.uniform(0.0, 1.0));
      points.push_back(std::move(p));
    }
    auto stab_rows = frq::solve_stabbing_via_frechet(boxes, points, backend);
    for (std::size_t r = 0; r < points.size(); ++r) {
      std::vector<std::string> want;
      for (const frq::UnitBox& box : boxes) {
        if (box.contains(points[r])) want.push_back(box.id);
      }
      std::sort(want.begin(), want.end());
      if (stab_rows[r] != want) {
        json instance{{"seed", seed}, {"dimension", d}, {"point", points[r]}};
        return report_mismatch("reduction-stab", t, instance, want, stab_rows[r]);
      }
      ++checked;
    }
  }

  json summary{{"result", "pass"}, {"checked", checked}, {"skipped", skipped}};
  std::cout << summary.dump() << '\n';
  return 0;
}

// Strictly alternating walk on an integer lattice. Lattice spacing comparable
// to rho keeps query selectivity low but not vanishing.
frq::TimeSeries bench_series(frq::Rng& rng, std::size_t t, const std::string& id) {
  std::vector<double> values;
  values.reserve(t);
  double x = static_cast<double>(rng.uniform_int(0, 100));
  bool up = rng.coin();
  values.push_back(x);
  for (std::size_t k = 1; k < t; ++k) {
    x += (up ? 1.0 : -1.0) * static_cast<double>(rng.uniform_int(1, 15));
    up = !up;
    values.push_back(x);
  }
  return frq::make_series(id, std::move(values));
}

int cmd_bench(const std::vector<std::size_t>& n_list, std::size_t t_q, std::size_t t_s,
              double rho, const std::vector<std::string>& backend_names,
              std::uint64_t seed, std::size_t query_count, const std::string& out_csv) {
  if (n_list.empty()) throw frq::Error("--n requires at least one size");
  if (t_q < 2 || t_s < 2) throw frq::Error("complexities must be at least 2");
  std::vector<frq::Backend> backends;
  for (const std::string& name : backend_names) backends.push_back(parse_backend(name));

  std::ostringstream csv;
  csv << "engine,backend,n,tq,ts,rho,build_ms,mean_query_us,output_size\n";
  using clock = std::chrono::steady_clock;

  for (std::size_t n : n_list) {
    frq::Rng rng(seed);
    std::vector<frq::TimeSeries> data;
    data.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      data.push_back(bench_series(rng, t_s, "s" + std::to_string(i)));
    }
    std::vector<frq::TimeSeries> queries;
    for (std::size_t i = 0; i < query_count; ++i) {
      queries.push_back(bench_series(rng, t_q, "q" + std::to_string(i)));
    }

    std::size_t naive_hits = 0;
    auto t0 = clock::now();
    for (const frq::TimeSeries& q : queries) {
      naive_hits += frq::naive_query(data, q, frq::Radius(rho)).size();
    }
    auto naive_us = std::chrono::duration<double, std::micro>(clock::now() - t0).count();
    csv << "naive,scan," << n << ',' << t_q << ',' << t_s << ',' << rho << ",0,"
        << naive_us / static_cast<double>(queries.size()) << ',' << naive_hits << '\n';

    for (frq::Backend backend : backends) {
      for (frq::EngineKind kind : {frq::EngineKind::stab, frq::EngineKind::pointstore}) {
        auto b0 = clock::now();
        Engine engine = build_engine(kind, data, rho, t_q, t_s, backend);
        auto build_ms = std::chrono::duration<double, std::milli>(clock::now() - b0).count();
        std::size_t hits = 0;
        auto q0 = clock::now();
        for (const frq::TimeSeries& q : queries) hits += engine.query(q).size();
        auto query_us = std::chrono::duration<double, std::micro>(clock::now() - q0).count();
        csv << frq::to_string(kind) << ',' << frq::to_string(backend) << ',' << n << ','
            << t_q << ',' << t_s << ',' << rho << ',' << build_ms << ','
            << query_us / static_cast<double>(queries.size()) << ',' << hits << '\n';
      }
    }
  }

  if (out_csv.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream out(out_csv);
    if (!out) throw frq::Error("cannot write '" + out_csv + "'");
    out << csv.str();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Range reporting for one-dimensional time series under the Frechet distance"};
  app.require_subcommand(1);

  std::string input, out_path, engine_name = "stab", backend_name = "tree";
  std::string index_path, queries_path, out_csv;
  double rho = 1.0;
  std::size_t t_q = 4, t_s_flag = 0, trials = 100, query_count = 50;
  std::uint64_t seed = 1;
  std::vector<std::size_t> n_list;
  std::vector<std::string> backend_names = {"tree"};

  CLI::App* build = app.add_subcommand("build", "Build an index from a JSON-lines dataset");
  build->add_option("--input", input, "dataset path (JSON lines)")->required();
  build->add_option("--rho", rho, "query radius")->required();
  build->add_option("--tq", t_q, "query complexity budget")->required();
  build->add_option("--engine", engine_name, "stab | pointstore");
  build->add_option("--backend", backend_name, "naive | tree");
  build->add_option("--ts", t_s_flag, "stored complexity budget (default: fit dataset)");
  build->add_option("--out", out_path, "index file to write")->required();

  CLI::App* query = app.add_subcommand("query", "Run queries against a saved index");
  query->add_option("--index", index_path, "index file")->required();
  query->add_option("--queries", queries_path, "queries path (JSON lines)")->required();

  CLI::App* verify = app.add_subcommand("verify", "Check engines against the naive scan");
  verify->add_option("--input", input, "dataset path (optional)");
  verify->add_option("--rho", rho, "query radius");
  verify->add_option("--tq", t_q, "query complexity budget");
  verify->add_option("--trials", trials, "random instances per stage");
  verify->add_option("--seed", seed, "random seed");

  CLI::App* bench = app.add_subcommand("bench", "Benchmark engines on synthetic data");
  bench->add_option("--n", n_list, "dataset sizes")->required();
  bench->add_option("--tq", t_q, "query complexity");
  bench->add_option("--ts", t_s_flag, "stored complexity")->check(CLI::PositiveNumber);
  bench->add_option("--rho", rho, "query radius");
  bench->add_option("--backends", backend_names, "backends to measure");
  bench->add_option("--seed", seed, "workload seed");
  bench->add_option("--queries", query_count, "queries per configuration");
  bench->add_option("--csv", out_csv, "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (build->parsed()) {
      return cmd_build(input, rho, t_q, engine_name, backend_name, t_s_flag, out_path);
    }
    if (query->parsed()) return cmd_query(index_path, queries_path);
    if (verify->parsed()) return cmd_verify(input, rho, t_q, trials, seed);
    return cmd_bench(n_list, t_q, t_s_flag == 0 ? 4 : t_s_flag, rho, backend_names, seed,
                     query_count, out_csv);
  } catch (const frq::CanonicalTooLong& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
