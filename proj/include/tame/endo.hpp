#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tame/lingrp.hpp"
#include "tame/poly.hpp"

namespace tame {

/// Algebra endomorphism of K[x_1..x_n] given by the n-tuple of generator
/// images. Values are immutable; composition allocates fresh results.
class Endomorphism {
 public:
  Endomorphism() = default;

  static Endomorphism identity(const FieldPtr& f, std::uint32_t nvars);
  static Endomorphism from_images(std::vector<Polynomial> images);

  const FieldPtr& field() const { return field_; }
  std::uint32_t nvars() const { return nvars_; }
  const std::vector<Polynomial>& images() const { return images_; }
  const Polynomial& image(std::uint32_t i) const;  // 1-based

  bool is_identity() const;
  /// True iff every image has zero constant term.
  bool is_origin_preserving() const;
  /// Max total degree over the images; identity has degree 1.
  int degree() const;

  bool operator==(const Endomorphism& o) const;
  bool operator!=(const Endomorphism& o) const { return !(*this == o); }

  /// Canonical serialization of the image tuple; equal keys iff equal maps.
  std::string canonical_key() const;

 private:
  FieldPtr field_;
  std::uint32_t nvars_ = 0;
  std::vector<Polynomial> images_;
};

/// (f o g)(x_i) = f(g(x_i)): each image of g is evaluated at f's images.
Endomorphism compose(const Endomorphism& f, const Endomorphism& g);

/// x_i -> x_i + p, all other generators fixed. p must not involve x_i and
/// must have zero constant term.
Endomorphism make_elementary(std::uint32_t i, const Polynomial& p);

/// Linear automorphism x_i -> sum_j a[i][j] x_j; a must be invertible.
Endomorphism make_linear(const Matrix& a);

/// Inverts the matrix embedding; nullopt when some image is not homogeneous
/// linear.
std::optional<Matrix> as_matrix(const Endomorphism& e);

/// Detects the elementary shape; on success reports the moved index and p.
bool elementary_parts(const Endomorphism& e, std::uint32_t& index, Polynomial& p);

/// Exact inverse for elementary, linear, and diagonal maps. General tame
/// elements are not supported here; invert those by reversing their words.
Endomorphism invert(const Endomorphism& e);

bool verify_inverse_pair(const Endomorphism& f, const Endomorphism& g);

/// One elementary factor per monomial of p; the factors commute and
/// recompose to e in any order.
std::vector<Endomorphism> split_elementary(const Endomorphism& e);

struct Letter {
  std::string tag;
  std::int64_t exp = 1;
  bool operator==(const Letter&) const = default;
};

/// Certificate word over a named generator set; the empty word is the
/// identity.
using GeneratorWord = std::vector<Letter>;

GeneratorWord inverted_word(const GeneratorWord& w);

/// Named invertible generators with stored exact inverses. Frozen by use:
/// build it up, then treat as const.
class GeneratorSet {
 public:
  struct Entry {
    std::string tag;
    Endomorphism forward;
    Endomorphism inverse;
  };

  GeneratorSet() = default;
  GeneratorSet(FieldPtr f, std::uint32_t nvars) : field_(std::move(f)), nvars_(nvars) {}

  const FieldPtr& field() const { return field_; }
  std::uint32_t nvars() const { return nvars_; }

  /// Inverse computed via invert(); use the two-argument form for shapes it
  /// does not cover.
  void add(const std::string& tag, const Endomorphism& g);
  void add_with_inverse(const std::string& tag, Endomorphism g, Endomorphism g_inv);

  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  const Entry& at(const std::string& tag) const;
  const Entry& at(std::size_t idx) const { return entries_.at(idx); }
  bool contains(const std::string& tag) const;

 private:
  FieldPtr field_;
  std::uint32_t nvars_ = 0;
  std::vector<Entry> entries_;
};

/// Left-to-right evaluation: eval([l1, .., lk]) = l1 o l2 o .. o lk.
Endomorphism eval_word(const GeneratorWord& w, const GeneratorSet& gens);

}  // namespace tame
