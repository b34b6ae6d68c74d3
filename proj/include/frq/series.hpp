#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace frq {

/// One-dimensional polygonal curve: the piecewise linear interpolation of
/// `values`, sampled at integer parameters 1..values.size().
struct TimeSeries {
  std::string id;
  std::vector<double> values;

  std::size_t complexity() const { return values.size(); }
};

/// Validates length >= 2 and finite values. Throws InvalidSeries.
void validate(const TimeSeries& ts);

/// Validated construction.
TimeSeries make_series(std::string id, std::vector<double> values);

/// Non-negative finite query radius.
struct Radius {
  explicit Radius(double v);
  double value;
};

/// Alternation pattern of a canonical series. M means odd edges are
/// non-decreasing and even edges non-increasing; W is the reverse.
/// All-flat series classify as M by convention.
enum class Shape { M, W };

/// True when edge `edge` (1-based) of a series with the given shape is
/// non-decreasing. Tie edges satisfy both patterns; this picks the parity one.
inline bool edge_ascending(Shape shape, std::size_t edge) {
  return (edge % 2 == 1) == (shape == Shape::M);
}

/// Minimal equivalent vertex sequence padded to a fixed complexity.
///
/// `values` always has exactly the target complexity requested from
/// canonicalize(); positions canonical_len..size()-1 repeat the last canonical
/// value. The underlying curve is unchanged up to reparameterization, so all
/// Frechet decisions are preserved.
struct CanonicalSeries {
  std::string source_id;
  std::vector<double> values;
  Shape shape = Shape::M;
  std::size_t canonical_len = 0;

  std::size_t complexity() const { return values.size(); }
  bool flat() const { return canonical_len == 2 && values[0] == values[1]; }
};

/// Drops interior vertices of weakly monotone runs (ties removable), then pads
/// by repeating the final value up to target_complexity.
/// Throws InvalidSeries on bad input, CanonicalTooLong if the minimal form has
/// more than target_complexity vertices.
CanonicalSeries canonicalize(const TimeSeries& ts, std::size_t target_complexity);

/// Reflection through zero. Frechet distances between mirrored pairs are
/// unchanged.
TimeSeries mirror(const TimeSeries& ts);

/// Mirror of a canonical series. Shape flips M<->W except for all-flat series,
/// which stay M per the classification convention.
CanonicalSeries mirror(const CanonicalSeries& cs);

namespace detail {
/// Stack pass retaining only vertices where the direction strictly changes.
std::vector<double> canonical_values(std::span<const double> values);
}  // namespace detail

}  // namespace frq
