#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace chartforge {

/// Machine-readable failure categories shared by every module. The names
/// double as the `kind` field of CLI and HTTP error payloads.
enum class ErrorKind {
  MalformedJson,
  SchemaViolation,
  PoolViolation,
  RaggedRow,
  EmptyTable,
  InvalidNumber,
  UnknownSubtype,
  UnrecognizedPrompt,
  UnknownTarget,
  AmbiguousPrompt,
  TargetMissing,
  DuplicateSeries,
  EmptyResult,
  InvalidForChartType,
  DimensionMismatch,
  EmptyBatch,
  NoTablesFound,
  TooManySeries,
  PredictorUnavailable,
  Timeout,
  ProtocolViolation,
  Io,
  InvalidConfig,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::string path = {})
      : std::runtime_error(std::move(message)), kind_(kind), path_(std::move(path)) {}

  ErrorKind kind() const noexcept { return kind_; }
  /// Offending location (attribute path, row index, file); may be empty.
  const std::string& path() const noexcept { return path_; }

 private:
  ErrorKind kind_;
  std::string path_;
};

}  // namespace chartforge
