#include "frq/series.hpp"

#include <cmath>
#include <utility>

#include "frq/error.hpp"

namespace frq {

void validate(const TimeSeries& ts) {
  if (ts.values.size() < 2) {
    throw InvalidSeries("series '" + ts.id + "': needs at least 2 samples, got " +
                        std::to_string(ts.values.size()));
  }
  for (double v : ts.values) {
    if (!std::isfinite(v)) {
      throw InvalidSeries("series '" + ts.id + "': non-finite sample");
    }
  }
}

TimeSeries make_series(std::string id, std::vector<double> values) {
  TimeSeries ts{std::move(id), std::move(values)};
  validate(ts);
  return ts;
}

Radius::Radius(double v) : value(v) {
  if (!(std::isfinite(v) && v >= 0.0)) {
    throw Error("radius must be finite and non-negative");
  }
}

namespace detail {

std::vector<double> canonical_values(std::span<const double> values) {
  std::vector<double> out;
  out.reserve(values.size());
  for (double x : values) {
    // Drop the middle of any weakly monotone triple. Runs of equal values
    // collapse the same way since a tie is weakly monotone in both directions.
    while (out.size() >= 2) {
      double a = out[out.size() - 2];
      double b = out.back();
      if ((a <= b && b <= x) || (a >= b && b >= x)) {
        out.pop_back();
      } else {
        break;
      }
    }
    out.push_back(x);
  }
  return out;
}

}  // namespace detail

CanonicalSeries canonicalize(const TimeSeries& ts, std::size_t target_complexity) {
  validate(ts);
  if (target_complexity < 2) {
    throw Error("target complexity must be at least 2");
  }
  std::vector<double> core = detail::canonical_values(ts.values);
  if (core.size() > target_complexity) {
    throw CanonicalTooLong(ts.id, core.size(), target_complexity);
  }

  CanonicalSeries cs;
  cs.source_id = ts.id;
  cs.canonical_len = core.size();
  cs.shape = (core[0] <= core[1]) ? Shape::M : Shape::W;
  core.resize(target_complexity, core.back());
  cs.values = std::move(core);
  return cs;
}

TimeSeries mirror(const TimeSeries& ts) {
  TimeSeries out = ts;
  for (double& v : out.values) v = -v;
  return out;
}

CanonicalSeries mirror(const CanonicalSeries& cs) {
  CanonicalSeries out = cs;
  for (double& v : out.values) v = -v;
  if (!cs.flat()) {
    out.shape = (cs.shape == Shape::M) ? Shape::W : Shape::M;
  }
  return out;
}

}  // namespace frq
