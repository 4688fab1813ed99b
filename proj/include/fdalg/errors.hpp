#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fdalg {

enum class ErrorKind {
  bad_parameter,
  ambient_mismatch,
  parent_mismatch,
  not_a_group,
  not_idempotent,
  syntax_error,
  not_parallel,
  unknown_symbol,
  not_admissible,
  not_split,
  split_undecided,
  not_basic,
  not_full,
  char_zero,
  not_local,
  generator_failed,
  too_large,
  invalid_algebra,
  io_error,
  internal,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries one of the kinds above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace fdalg
