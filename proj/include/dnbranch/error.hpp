#ifndef DNBRANCH_ERROR_HPP
#define DNBRANCH_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace dnbranch {

enum class Errc {
  invalid_e,
  invalid_argument,
  not_removable,
  size_mismatch,
  resource_limit,
  not_kleshchev,
  shift_replay_failed,
  multiple_special_nodes,
  invariant_violation,
  not_semisimple,
  parse_error,
  schema_mismatch,
  io_error,
};

inline constexpr std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_e: return "INVALID_E";
    case Errc::invalid_argument: return "INVALID_ARGUMENT";
    case Errc::not_removable: return "NOT_REMOVABLE";
    case Errc::size_mismatch: return "SIZE_MISMATCH";
    case Errc::resource_limit: return "RESOURCE_LIMIT";
    case Errc::not_kleshchev: return "NOT_KLESHCHEV";
    case Errc::shift_replay_failed: return "SHIFT_REPLAY_FAILED";
    case Errc::multiple_special_nodes: return "MULTIPLE_SPECIAL_NODES";
    case Errc::invariant_violation: return "INVARIANT_VIOLATION";
    case Errc::not_semisimple: return "NOT_SEMISIMPLE";
    case Errc::parse_error: return "PARSE_ERROR";
    case Errc::schema_mismatch: return "SCHEMA_MISMATCH";
    case Errc::io_error: return "IO_ERROR";
  }
  return "UNKNOWN";
}

/// Every failure raised by the library carries one of the codes above; the
/// message is prefixed with the code name so it survives a plain what().
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace dnbranch

#endif  // DNBRANCH_ERROR_HPP
