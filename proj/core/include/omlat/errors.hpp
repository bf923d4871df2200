#ifndef OMLAT_ERRORS_HPP
#define OMLAT_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace omlat {

enum class ErrorKind {
  NotAPoset,
  MissingMeetOrJoin,
  OrthoNotInvolutive,
  OrthoNotAntitone,
  ComplementLawFails,
  NotOrthomodular,
  IdOutOfRange,
  SizeBoundExceeded,
  NotJoinPreserving,
  DomainMismatch,
  EnumerationBoundExceeded,
  PreconditionFailed,
  EquivalenceMismatch,
  NotAntitone,
  GaloisConditionFails,
  SyntaxError,
  UnknownName,
  ValidationError,
};

const char* to_string(ErrorKind kind);

/// Every validation failure carries the offending element ids so callers can
/// report a concrete witness, not just a message.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message,
        std::vector<std::uint32_t> witness = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind),
        witness_(std::move(witness)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::vector<std::uint32_t>& witness() const noexcept { return witness_; }

private:
  ErrorKind kind_;
  std::vector<std::uint32_t> witness_;
};

} // namespace omlat

#endif
