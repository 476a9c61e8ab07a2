#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace regress_bench {

enum class ErrorKind {
  MissingHeader,
  RowArity,
  ParseError,
  EmptyInput,
  UnknownColumn,
  TypeMismatch,
  SchemaMismatch,
  BadRatio,
  DimensionMismatch,
  RankDeficient,
  BadHyperparam,
  ZeroVariance,
  BadK,
  VersionMismatch,
  Io,
  Config,
};

std::string_view to_string(ErrorKind kind);

// All library failures are reported through this type. Row-level ingest
// errors carry the 1-based data row (the header is not counted).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::optional<std::size_t> row = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> row() const noexcept { return row_; }
  // The message without the kind and row prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> row_;
  std::string detail_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

}  // namespace regress_bench
