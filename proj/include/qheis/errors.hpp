#pragma once

#include <stdexcept>
#include <string>

namespace qheis {

enum class Errc {
  invalid_q,
  mode_mismatch,
  non_commuting,
  zero_order,
  constant_polynomial,
  zero_element,
  symbolic_mode_unsupported,
  degenerate_window,
  duplicate_root,
  constant_element,
  syntax_error,
  non_integer_exponent,
  not_divisible,
  bad_argument,
};

/// Library-wide exception carrying a machine-checkable error code.
class Error : public std::runtime_error {
public:
  Error(Errc c, const std::string& msg) : std::runtime_error(msg), code_(c) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc c, const std::string& msg) { throw Error(c, msg); }

} // namespace qheis
