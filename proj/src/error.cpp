#include "sidonplex/error.hpp"

namespace sidonplex {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::ModulusTooSmall: return "modulus too small";
    case ErrorKind::InputNotSidon: return "input not Sidon";
    case ErrorKind::NotSidonModN: return "not Sidon modulo N";
    case ErrorKind::BadBijection: return "bad bijection";
    case ErrorKind::IndexOutOfRange: return "index out of range";
    case ErrorKind::NoExtension: return "no extension";
    case ErrorKind::NotUnique: return "extension not unique";
    case ErrorKind::SizeLimitExceeded: return "size limit exceeded";
    case ErrorKind::MalformedPath: return "malformed path";
    case ErrorKind::MalformedWord: return "malformed word";
    case ErrorKind::IncompleteStar: return "incomplete star";
    case ErrorKind::Coverage: return "coverage";
    case ErrorKind::InvalidSpec: return "invalid complex spec";
    case ErrorKind::LinkEmbedding: return "link embedding failure";
    case ErrorKind::InsufficientNeighborhood: return "insufficient neighborhood";
    case ErrorKind::ParityNotWellDefined: return "parity not well defined";
    case ErrorKind::OutOfBall: return "out of ball";
    case ErrorKind::SpecNotOdd: return "spec not odd";
    case ErrorKind::Parse: return "parse error";
  }
  return "unknown";
}

}  // namespace sidonplex
