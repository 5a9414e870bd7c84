#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trackeval {

// Base class for every error this library raises on bad input or bad data.
// Configuration mistakes (bad flag values, unusable output paths) use
// ConfigError so the CLI can map them to a distinct exit code.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigError : Error {
  using Error::Error;
};

// geometry
struct GeometryError : Error {
  using Error::Error;
};
struct NonConvexPolygon : GeometryError {
  using GeometryError::GeometryError;
};

// ingest
struct ParseError : Error {
  ParseError(std::size_t line_number, std::string parse_reason,
             std::string source_file = "")
      : Error((source_file.empty() ? "" : source_file + ": ") + "line " +
              std::to_string(line_number) + ": " + parse_reason),
        line(line_number),
        reason(std::move(parse_reason)),
        file(std::move(source_file)) {}
  std::size_t line;
  std::string reason;
  std::string file;
};
struct ManifestError : Error {
  using Error::Error;
};
struct AlignmentError : Error {
  using Error::Error;
};

// metrics
struct EmptySeries : Error {
  using Error::Error;
};
struct EmptyInput : Error {
  using Error::Error;
};

// ranking
struct DuplicateSequence : Error {
  using Error::Error;
};
struct MissingSequence : Error {
  using Error::Error;
};
struct TaskSetMismatch : Error {
  using Error::Error;
};
struct NotAPermutation : Error {
  using Error::Error;
};
struct TooFewTasks : Error {
  using Error::Error;
};

}  // namespace trackeval
