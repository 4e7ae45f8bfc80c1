#include "gramtok/error.hpp"

namespace gramtok {

std::string_view error_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::ParserUnavailable: return "ParserUnavailable";
    case ErrorCode::TreeHasErrors: return "TreeHasErrors";
    case ErrorCode::FormatError: return "FormatError";
    case ErrorCode::NotByteComplete: return "NotByteComplete";
    case ErrorCode::VersionMismatch: return "VersionMismatch";
    case ErrorCode::EmptyCorpus: return "EmptyCorpus";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::SyntaxInvalid: return "SyntaxInvalid";
    case ErrorCode::UnknownProduction: return "UnknownProduction";
    case ErrorCode::IncompleteSequence: return "IncompleteSequence";
    case ErrorCode::InvalidToken: return "InvalidToken";
    case ErrorCode::ModeUnsupported: return "ModeUnsupported";
    case ErrorCode::DegenerateTable: return "DegenerateTable";
    case ErrorCode::MissingOutcome: return "MissingOutcome";
    case ErrorCode::InsufficientPairs: return "InsufficientPairs";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> position)
    : std::runtime_error(std::string(error_name(code)) + ": " + message),
      code_(code),
      position_(position) {}

}  // namespace gramtok
