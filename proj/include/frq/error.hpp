#pragma once

#include <stdexcept>
#include <string>

namespace frq {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A series failed basic validation (fewer than two samples, non-finite values).
struct InvalidSeries : Error {
  using Error::Error;
};

// Canonical form of a series has more vertices than the declared complexity budget.
struct CanonicalTooLong : Error {
  CanonicalTooLong(std::string id, std::size_t canonical_len, std::size_t target)
      : Error("series '" + id + "': canonical length " + std::to_string(canonical_len) +
              " exceeds target complexity " + std::to_string(target)),
        series_id(std::move(id)) {}
  std::string series_id;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

// A predicate kind was passed to a routine that does not handle it.
struct UnsupportedKind : Error {
  using Error::Error;
};

// A canonical series did not have the shape a routine requires.
struct ShapeViolation : Error {
  using Error::Error;
};

// Enumerating monotone cell sequences would exceed the configured cap.
struct ComplexityTooLarge : Error {
  using Error::Error;
};

struct DuplicateId : Error {
  using Error::Error;
};

// Reduction input coordinates must lie in the closed unit box.
struct OutOfUnitBox : Error {
  using Error::Error;
};

}  // namespace frq
