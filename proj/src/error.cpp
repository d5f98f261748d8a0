#include "chartforge/error.hpp"

namespace chartforge {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedJson: return "MalformedJson";
    case ErrorKind::SchemaViolation: return "SchemaViolation";
    case ErrorKind::PoolViolation: return "PoolViolation";
    case ErrorKind::RaggedRow: return "RaggedRow";
    case ErrorKind::EmptyTable: return "EmptyTable";
    case ErrorKind::InvalidNumber: return "InvalidNumber";
    case ErrorKind::UnknownSubtype: return "UnknownSubtype";
    case ErrorKind::UnrecognizedPrompt: return "UnrecognizedPrompt";
    case ErrorKind::UnknownTarget: return "UnknownTarget";
    case ErrorKind::AmbiguousPrompt: return "AmbiguousPrompt";
    case ErrorKind::TargetMissing: return "TargetMissing";
    case ErrorKind::DuplicateSeries: return "DuplicateSeries";
    case ErrorKind::EmptyResult: return "EmptyResult";
    case ErrorKind::InvalidForChartType: return "InvalidForChartType";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::EmptyBatch: return "EmptyBatch";
    case ErrorKind::NoTablesFound: return "NoTablesFound";
    case ErrorKind::TooManySeries: return "TooManySeries";
    case ErrorKind::PredictorUnavailable: return "PredictorUnavailable";
    case ErrorKind::Timeout: return "Timeout";
    case ErrorKind::ProtocolViolation: return "ProtocolViolation";
    case ErrorKind::Io: return "Io";
    case ErrorKind::InvalidConfig: return "InvalidConfig";
  }
  return "Unknown";
}

}  // namespace chartforge
