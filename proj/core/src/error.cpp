#include "pcp/error.hpp"

namespace pcp {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::SlotOutOfRange: return "SlotOutOfRange";
    case ErrorCode::ProductOnWidthOne: return "ProductOnWidthOne";
    case ErrorCode::UnbalancedSequence: return "UnbalancedSequence";
    case ErrorCode::MalformedPrograph: return "MalformedPrograph";
    case ErrorCode::InvalidPath: return "InvalidPath";
    case ErrorCode::InvalidDominance: return "InvalidDominance";
    case ErrorCode::InvalidTableau: return "InvalidTableau";
    case ErrorCode::StackUnderflow: return "StackUnderflow";
    case ErrorCode::ResidualStack: return "ResidualStack";
    case ErrorCode::InvalidPermutation: return "InvalidPermutation";
    case ErrorCode::NotInFamily: return "NotInFamily";
    case ErrorCode::OddLength: return "OddLength";
    case ErrorCode::PatternViolation: return "PatternViolation";
    case ErrorCode::InvalidParkingFunction: return "InvalidParkingFunction";
    case ErrorCode::SlotIndexOutOfRange: return "SlotIndexOutOfRange";
    case ErrorCode::NotSinglePeak: return "NotSinglePeak";
    case ErrorCode::ValleysNotInitialSegment: return "ValleysNotInitialSegment";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::BoundaryError: return "BoundaryError";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownSuite: return "UnknownSuite";
    case ErrorCode::SizeLimit: return "SizeLimit";
  }
  return "Unknown";
}

namespace {

std::string decorate(ErrorCode code, const std::string& message,
                     std::optional<std::size_t> position) {
  std::string out{to_string(code)};
  if (position) out += " at " + std::to_string(*position);
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> position)
    : std::runtime_error(decorate(code, message, position)),
      code_(code),
      position_(position) {}

}  // namespace pcp
