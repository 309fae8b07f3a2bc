#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pcp {

enum class ErrorCode {
  // prograph construction and traversal
  SlotOutOfRange,
  ProductOnWidthOne,
  UnbalancedSequence,
  MalformedPrograph,
  // weighted paths
  InvalidPath,
  // tableaux
  InvalidDominance,
  InvalidTableau,
  StackUnderflow,
  ResidualStack,
  // permutations
  InvalidPermutation,
  NotInFamily,
  OddLength,
  // insertion bijections
  PatternViolation,
  InvalidParkingFunction,
  SlotIndexOutOfRange,
  NotSinglePeak,
  ValleysNotInitialSegment,
  // expression language
  SyntaxError,
  ArityMismatch,
  BoundaryError,
  // text formats and front end
  ParseError,
  UnknownSuite,
  SizeLimit,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `position()` is a character offset
/// into the offending text for parse errors, or a step/label index for
/// structural errors, when one is meaningful.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> position = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> position_;
};

}  // namespace pcp
