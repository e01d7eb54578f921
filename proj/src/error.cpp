#include "tame/error.hpp"

namespace tame {

const char* errc_name(errc code) {
  switch (code) {
    case errc::characteristic_two: return "CharacteristicTwo";
    case errc::not_prime: return "NotPrime";
    case errc::reducible_modulus: return "ReducibleModulus";
    case errc::bad_modulus: return "BadModulus";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::field_mismatch: return "FieldMismatch";
    case errc::zero_element: return "ZeroElement";
    case errc::infinite_field: return "InfiniteField";
    case errc::arity_mismatch: return "ArityMismatch";
    case errc::exponent_overflow: return "ExponentOverflow";
    case errc::degree_cap_exceeded: return "DegreeCapExceeded";
    case errc::self_dependent_p: return "SelfDependentP";
    case errc::constant_term_present: return "ConstantTermPresent";
    case errc::singular_matrix: return "SingularMatrix";
    case errc::shape_mismatch: return "ShapeMismatch";
    case errc::unknown_tag: return "UnknownTag";
    case errc::not_elementary: return "NotElementary";
    case errc::unsupported_shape: return "UnsupportedShape";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::self_target: return "SelfTarget";
    case errc::axes_collision: return "AxesCollision";
    case errc::bad_monomial_support: return "BadMonomialSupport";
    case errc::not_bad: return "NotBad";
    case errc::zero_pivot_exponent: return "ZeroPivotExponent";
    case errc::constant_monomial: return "ConstantMonomial";
    case errc::involves_target: return "InvolvesTarget";
    case errc::zero_entry: return "ZeroEntry";
    case errc::field_too_small: return "FieldTooSmall";
    case errc::not_in_commutant: return "NotInCommutant";
    case errc::zero_beta: return "ZeroBeta";
    case errc::no_solution: return "NoSolution";
    case errc::singular_input: return "SingularInput";
    case errc::enumeration_too_large: return "EnumerationTooLarge";
    case errc::empty_generator_set: return "EmptyGeneratorSet";
    case errc::parse_error: return "ParseError";
    case errc::invalid_argument: return "InvalidArgument";
  }
  return "UnknownError";
}

}  // namespace tame
