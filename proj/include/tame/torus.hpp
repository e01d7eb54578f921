#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tame/endo.hpp"

namespace tame {
namespace torus {

/// Point of the standard torus: x_i -> lambda_i x_i with all entries
/// nonzero. Composition is the entrywise product.
class TorusPoint {
 public:
  TorusPoint() = default;
  explicit TorusPoint(std::vector<Scalar> lambdas);

  static TorusPoint identity(const FieldPtr& f, std::uint32_t n);
  static TorusPoint homothety(const FieldPtr& f, std::uint32_t n, const Scalar& ratio);

  const FieldPtr& field() const { return field_; }
  std::uint32_t nvars() const { return static_cast<std::uint32_t>(lambdas_.size()); }
  const Scalar& entry(std::uint32_t i) const;  // 1-based
  const std::vector<Scalar>& entries() const { return lambdas_; }

  TorusPoint composed(const TorusPoint& o) const;  // entrywise product
  TorusPoint inverse() const;
  Endomorphism as_endomorphism() const;

  bool operator==(const TorusPoint& o) const { return lambdas_ == o.lambdas_; }

 private:
  FieldPtr field_;
  std::vector<Scalar> lambdas_;
};

/// Weights i_2..i_n of the T^(n-1) action that scales x_1 by
/// lambda_2^(i_2) .. lambda_n^(i_n) and x_j by lambda_j. The weight sum must
/// exceed 1; individual zero weights are allowed.
struct WeightVector {
  std::vector<std::uint32_t> weights;  // size n-1, index 0 is the x_2 weight
  std::uint32_t nvars = 0;
};

WeightVector make_weights(std::vector<std::uint32_t> weights, std::uint32_t nvars);

WeightVector quadratic_weights(std::uint32_t nvars);  // (1,1,0,..,0)

/// Closed-form alpha o phi o beta for diagonal alpha, beta: each coefficient
/// a_{iJ} becomes beta_i * alpha_J * a_{iJ}. Computed term by term; this
/// never calls general composition, so it can serve as its oracle.
Endomorphism conjugation_formula(const TorusPoint& alpha, const Endomorphism& phi,
                                 const TorusPoint& beta);

/// Torus point of the weighted action at parameters lambda_2..lambda_n.
TorusPoint weighted_action_point(const WeightVector& w, std::span<const Scalar> lambdas);

/// Shape test: x_1 -> a_1 x_1 + beta * (weight monomial), x_j -> a_j x_j
/// with every a nonzero; beta may vanish.
bool in_commutant_form(const Endomorphism& phi, const WeightVector& w);

/// Samples deterministic points of the weighted action (entries are powers
/// of the primitive element) and tests conjugation-invariance at each. The
/// required count is max(8, deg+2, samples); smaller fields throw
/// field_too_small rather than passing vacuously.
bool commutes_with_action(const Endomorphism& phi, const WeightVector& w, std::uint32_t samples);

struct CommutatorShape {
  Endomorphism commutator;  // f^-1 g^-1 f g
  bool in_shape = false;    // x1 -> x1 + beta x2 x3, rest identity
  Scalar beta;
};

/// Both inputs must be in commutant form for the quadratic action.
CommutatorShape commutator_shape_check(const Endomorphism& f, const Endomorphism& g);

/// A torus point L with L o (x1 -> x1 + m) o L^-1 = (x1 -> x1 + beta*m).
/// Uses the single-coordinate rescale when some exponent is 1 (x2 -> beta*x2
/// in the quadratic case); otherwise solves the weight equation in the
/// exponent lattice, reporting no_solution when beta is not reachable.
TorusPoint torus_rescale_conjugacy(const Scalar& beta, const Monomial& m);

/// True iff phi commutes with the homothety of a high-order element, which
/// characterizes linearity once the order exceeds deg(phi).
bool linearity_via_homothety(const Endomorphism& phi);

}  // namespace torus
}  // namespace tame
