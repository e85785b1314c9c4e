#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace resnum {

enum class ErrorKind {
  InvalidEdge,
  IndexOutOfRange,
  Disconnected,
  TooLarge,
  InvalidPermutation,
  DegeneratePair,
  EmptySet,
  InvalidFamilyParam,
  TheoremViolation,
  CatalogMissing,
  NotApplicable,
  InvalidPartition,
  MalformedGraph6,
  MalformedLine,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it onto an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] void raise(ErrorKind kind, const std::string& what);

}  // namespace resnum
