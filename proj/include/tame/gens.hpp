#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "tame/endo.hpp"

namespace tame {
namespace gens {

/// Good/bad verdict for one nonconstant monomial free of x_1, over odd p.
/// Good: some positive exponent k has k+1 nonzero mod p (least such index is
/// the witness). Bad: every positive exponent is congruent to -1 mod p.
struct MonomialClass {
  bool good = false;
  std::uint32_t witness_index = 0;  // 1-based, set when good
  std::uint32_t witness_exp = 0;
  Monomial monomial;
  std::uint64_t p = 0;
};

MonomialClass classify_monomial(const Monomial& m, std::uint64_t p);

/// x1 -> x1 + x2*x3, everything else fixed. Requires n >= 4.
Endomorphism psi(const FieldPtr& f, std::uint32_t nvars);

/// x_i -> x_i + x_{i+1} x_{i+2} with cyclic labelling.
Endomorphism psi_i(const FieldPtr& f, std::uint32_t nvars, std::uint32_t i);

/// x_i -> x_i + beta * x_j^k, everything else fixed.
Endomorphism phi_ijk(std::uint32_t i, std::uint32_t j, std::uint32_t k, const Scalar& beta,
                     std::uint32_t nvars);

struct Axes {
  std::uint32_t x = 2;
  std::uint32_t y = 3;
  std::uint32_t z = 1;
};

/// Word certificate whose evaluation equals the named closed form.
struct Certificate {
  GeneratorSet gens;
  GeneratorWord word;
  Endomorphism expected;
};

/// Builds a word over {one transvection, the y/z swap, psi on the given
/// axes} evaluating to z -> z + b*x^m. Base case m = 1 is the transvection;
/// each step conjugates the previous word and cancels against psi.
Certificate build_phi_m_word(const Scalar& b, std::uint32_t m, Axes axes, std::uint32_t nvars);

/// Word a^-1 t^-1 psi t a with a: x2 -> x2 + x3^k and t: x3 -> x3 + m'.
/// Evaluates to x1 -> x1 + (x2 - x3^k)(x3 - m'), everything else fixed.
/// m' must be a nonconstant monomial in x4..xn.
Certificate good_special_composite(std::uint32_t k, const Monomial& m_prime, const FieldPtr& f,
                                   std::uint32_t nvars);

/// Word psi^-1 t^-1 psi t, evaluating to x1 -> x1 - x2*m'.
Certificate commutator_phi1(const Monomial& m_prime, const FieldPtr& f, std::uint32_t nvars);

struct DeltaExpansion {
  Endomorphism delta;        // x1 -> x1 + (x2 + m')^(k+1)
  Scalar coeff_of_target;    // coefficient of x2^k * m', equals k+1 mod p
  Monomial target_monomial;  // x2^k * m'
  GeneratorSet gens;
  GeneratorWord word;        // phi1 . alpha . phi1^-1
};

/// delta = phi1 o alpha o phi1^-1 with alpha: x1 -> x1 + x2^(k+1) and
/// phi1: x2 -> x2 + m'. m' must be a nonconstant monomial in x3..xn.
DeltaExpansion delta_conjugation(std::uint32_t k, const Monomial& m_prime, const FieldPtr& f,
                                 std::uint32_t nvars);

struct BadToGood {
  Endomorphism conjugated;  // L o phi o L^-1, whole (split it if needed)
  Scalar good_coeff;        // coefficient of the designated good monomial
  Monomial good_monomial;   // pivot exponent lowered by 1, partner raised by 1
  std::pair<std::uint32_t, std::uint32_t> pivot;
  GeneratorSet gens;
  GeneratorWord word;  // Lambda . phi . Lambda^-1
};

/// Conjugates a bad elementary x1 -> x1 + b*M by the triangular map
/// x_i -> x_i + lambda*x_j. The designated good coefficient equals
/// -lambda*b. Default pivot: least i with positive exponent, j cyclic next
/// within 2..n.
BadToGood bad_to_good(const Endomorphism& phi, const Scalar& lambda,
                      std::optional<std::pair<std::uint32_t, std::uint32_t>> pivot = {});

}  // namespace gens
}  // namespace tame
