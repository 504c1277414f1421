#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hcms {

/// Failure categories. Each maps to a stable upper-case token that the
/// command-line tool prints so scripts can match on it.
enum class Errc {
  dimension_mismatch,
  singular,
  no_solution,
  overflow,
  budget_exceeded,
  not_in_image,
  not_compressible,
  not_hamming_partition,
  r_not_invertible,
  height_negative,
  syndrome_not_decodable,
  not_perfect,
  decomposition_invalid,
  not_a_subspace,
  params_not_perfect,
  precondition_violation,
  malformed_input,
  internal,
};

std::string_view token(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }
  std::string_view token() const noexcept { return hcms::token(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

inline void require(bool condition, Errc code, const std::string& what) {
  if (!condition) fail(code, what);
}

}  // namespace hcms
