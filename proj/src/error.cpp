#include "quasiline/error.hpp"

namespace quasiline {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DegreeTooLow: return "DegreeTooLow";
    case ErrorKind::UnknownId: return "UnknownId";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::BadElement: return "BadElement";
    case ErrorKind::InvalidMove: return "InvalidMove";
    case ErrorKind::NotDisjoint: return "NotDisjoint";
    case ErrorKind::PlanMismatch: return "PlanMismatch";
    case ErrorKind::InvalidDiagram: return "InvalidDiagram";
    case ErrorKind::NotGeneralized: return "NotGeneralized";
    case ErrorKind::DuplicateLine: return "DuplicateLine";
    case ErrorKind::UnresolvableChart: return "UnresolvableChart";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::CyclicInput: return "CyclicInput";
    case ErrorKind::NotAdmissible: return "NotAdmissible";
    case ErrorKind::NoSuchFace: return "NoSuchFace";
    case ErrorKind::HasDigons: return "HasDigons";
    case ErrorKind::NotTwoConnected: return "NotTwoConnected";
    case ErrorKind::WireWithoutPoint: return "WireWithoutPoint";
    case ErrorKind::InvalidScheme: return "InvalidScheme";
    case ErrorKind::Disconnected: return "Disconnected";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

ParseError::ParseError(const std::string& message, std::size_t line, std::size_t column)
    : Error(ErrorKind::ParseError,
            message + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
      line_(line),
      column_(column) {}

}  // namespace quasiline
