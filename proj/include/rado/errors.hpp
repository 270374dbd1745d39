#pragma once

#include <stdexcept>
#include <string>

namespace rado {

enum class errc {
  zero_coefficient,
  duplicate_slot,
  empty_side,
  parameter_below_validity,
  out_of_range,
  overflow,
  enumeration_limit_exceeded,
  parse_error,
  ambiguous_row,
  non_integral_formula,
  arity_too_small,
  domain_error,
  unsupported_family_shape,
  cap_exceeded,
  budget_exceeded,
  invalid_argument,
};

class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace rado
