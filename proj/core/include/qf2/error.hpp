#pragma once

#include <stdexcept>
#include <string>

namespace qf2 {

enum class ErrorKind {
  precondition,  // input is well formed but violates an operation's contract
  malformed,     // input cannot be interpreted at all
  internal,      // an identity that must hold was found broken
};

/// Every failure raised by the library. `code` is a stable machine-readable
/// tag (e.g. "not_regular", "division_by_zero") used by the CLI error object.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string code, const std::string& message,
        int extension_degree = 0)
      : std::runtime_error(message),
        kind_(kind),
        code_(std::move(code)),
        extension_degree_(extension_degree) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& code() const noexcept { return code_; }
  /// Relative extension degree that would lift the obstruction, or 0.
  int extension_degree() const noexcept { return extension_degree_; }

 private:
  ErrorKind kind_;
  std::string code_;
  int extension_degree_;
};

[[noreturn]] inline void fail(std::string code, const std::string& message,
                              int extension_degree = 0) {
  throw Error(ErrorKind::precondition, std::move(code), message,
              extension_degree);
}

[[noreturn]] inline void fail_malformed(std::string code,
                                        const std::string& message) {
  throw Error(ErrorKind::malformed, std::move(code), message);
}

[[noreturn]] inline void fail_internal(const std::string& message) {
  throw Error(ErrorKind::internal, "internal_consistency", message);
}

}  // namespace qf2
