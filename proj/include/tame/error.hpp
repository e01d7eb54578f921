#pragma once

#include <stdexcept>
#include <string>

namespace tame {

enum class errc {
  characteristic_two,
  not_prime,
  reducible_modulus,
  bad_modulus,
  division_by_zero,
  field_mismatch,
  zero_element,
  infinite_field,
  arity_mismatch,
  exponent_overflow,
  degree_cap_exceeded,
  self_dependent_p,
  constant_term_present,
  singular_matrix,
  shape_mismatch,
  unknown_tag,
  not_elementary,
  unsupported_shape,
  index_out_of_range,
  self_target,
  axes_collision,
  bad_monomial_support,
  not_bad,
  zero_pivot_exponent,
  constant_monomial,
  involves_target,
  zero_entry,
  field_too_small,
  not_in_commutant,
  zero_beta,
  no_solution,
  singular_input,
  enumeration_too_large,
  empty_generator_set,
  parse_error,
  invalid_argument,
};

const char* errc_name(errc code);

/// All library failures carry a stable code plus a human-readable message.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

 private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

}  // namespace tame
