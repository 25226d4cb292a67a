#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sidonplex {

enum class ErrorKind {
  InvalidArgument,
  ModulusTooSmall,
  InputNotSidon,
  NotSidonModN,
  BadBijection,
  IndexOutOfRange,
  NoExtension,
  NotUnique,
  SizeLimitExceeded,
  MalformedPath,
  MalformedWord,
  IncompleteStar,
  Coverage,
  InvalidSpec,
  LinkEmbedding,
  InsufficientNeighborhood,
  ParityNotWellDefined,
  OutOfBall,
  SpecNotOdd,
  Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for every recoverable failure in the library; the
/// kind lets callers (and the CLI exit-code mapping) branch without parsing
/// messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace sidonplex
