#include "regress_bench/error.hpp"

namespace regress_bench {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MissingHeader: return "MissingHeader";
    case ErrorKind::RowArity: return "RowArity";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::UnknownColumn: return "UnknownColumn";
    case ErrorKind::TypeMismatch: return "TypeMismatch";
    case ErrorKind::SchemaMismatch: return "SchemaMismatch";
    case ErrorKind::BadRatio: return "BadRatio";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::RankDeficient: return "RankDeficient";
    case ErrorKind::BadHyperparam: return "BadHyperparam";
    case ErrorKind::ZeroVariance: return "ZeroVariance";
    case ErrorKind::BadK: return "BadK";
    case ErrorKind::VersionMismatch: return "VersionMismatch";
    case ErrorKind::Io: return "Io";
    case ErrorKind::Config: return "Config";
  }
  return "Unknown";
}

namespace {

std::string decorate(ErrorKind kind, const std::string& message, std::optional<std::size_t> row) {
  std::string out(to_string(kind));
  if (row) out += " at row " + std::to_string(*row);
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorKind kind, const std::string& message, std::optional<std::size_t> row)
    : std::runtime_error(decorate(kind, message, row)), kind_(kind), row_(row), detail_(message) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

}  // namespace regress_bench
