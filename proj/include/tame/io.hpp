#pragma once

#include <string>
#include <string_view>

#include "tame/endo.hpp"
#include "tame/field.hpp"
#include "tame/poly.hpp"

namespace tame {
namespace io {

/// Monomial grammar: "x<i>^<e>" factors joined by "*", "^1" omissible, "1"
/// for the unit monomial.
Monomial parse_monomial(std::string_view text, std::uint32_t nvars);

/// Scalar literals: decimal residue, "a/b" fraction, or "[c0,c1,..]" for
/// extension coefficients.
Scalar parse_scalar(std::string_view text, const FieldPtr& f);

/// Polynomial text: terms "c*x1^a1*..*xn^an" joined by "+"; the coefficient
/// may be omitted when it is 1. Round-trips the canonical renderer exactly.
Polynomial parse_polynomial(std::string_view text, const FieldPtr& f, std::uint32_t nvars);

/// Structured form: JSON list of {"exps": [a1..an], "coeff": "..."} records
/// in the same graded-lex order. Bit-exact alongside the text form.
std::string render_polynomial_structured(const Polynomial& p);
Polynomial parse_polynomial_structured(std::string_view json_text, const FieldPtr& f,
                                       std::uint32_t nvars);

/// JSON endomorphism file: field descriptor, nvars, image list.
std::string render_endomorphism(const Endomorphism& e);
Endomorphism parse_endomorphism(std::string_view json_text);

std::string render_word(const GeneratorWord& w);  // JSON [[tag, exp], ..]
GeneratorWord parse_word(std::string_view json_text);

/// Certificate: generator images by tag, the word, and its evaluation.
std::string render_certificate(const GeneratorSet& gens, const GeneratorWord& w,
                               const Endomorphism& evaluated);

std::string field_json(const FieldPtr& f);

}  // namespace io
}  // namespace tame
