#include "tame/lingrp.hpp"

#include <algorithm>
#include <numeric>

#include "tame/error.hpp"

namespace tame {

Matrix::Matrix(const FieldPtr& f, std::uint32_t n)
    : field_(f), n_(n), m_(static_cast<std::size_t>(n) * n, Scalar::zero(f)) {}

Matrix Matrix::identity(const FieldPtr& f, std::uint32_t n) {
  Matrix a(f, n);
  for (std::uint32_t i = 0; i < n; ++i) a.set(i, i, Scalar::one(f));
  return a;
}

Matrix Matrix::diagonal(const std::vector<Scalar>& entries) {
  if (entries.empty()) fail(errc::shape_mismatch, "empty diagonal");
  Matrix a(entries[0].field(), static_cast<std::uint32_t>(entries.size()));
  for (std::uint32_t i = 0; i < a.n_; ++i) a.set(i, i, entries[i]);
  return a;
}

Matrix Matrix::from_entries(const FieldPtr& f, std::uint32_t n, std::vector<Scalar> entries) {
  if (entries.size() != static_cast<std::size_t>(n) * n) {
    fail(errc::shape_mismatch, "entry count must be n*n");
  }
  Matrix a(f, n);
  a.m_ = std::move(entries);
  return a;
}

const Scalar& Matrix::at(std::uint32_t r, std::uint32_t c) const {
  if (r >= n_ || c >= n_) fail(errc::index_out_of_range, "matrix index out of range");
  return m_[static_cast<std::size_t>(r) * n_ + c];
}

void Matrix::set(std::uint32_t r, std::uint32_t c, Scalar v) {
  if (r >= n_ || c >= n_) fail(errc::index_out_of_range, "matrix index out of range");
  m_[static_cast<std::size_t>(r) * n_ + c] = std::move(v);
}

void Matrix::require_compatible(const Matrix& o) const {
  if (n_ != o.n_) fail(errc::shape_mismatch, "matrix size mismatch");
  if (!field_ || !o.field_ || !field_->same_as(*o.field_)) {
    fail(errc::field_mismatch, "matrices over different fields");
  }
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_compatible(o);
  Matrix r(field_, n_);
  for (std::uint32_t i = 0; i < n_; ++i) {
    for (std::uint32_t j = 0; j < n_; ++j) {
      Scalar s = Scalar::zero(field_);
      for (std::uint32_t k = 0; k < n_; ++k) s = s + at(i, k) * o.at(k, j);
      r.set(i, j, std::move(s));
    }
  }
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(field_, n_);
  for (std::uint32_t i = 0; i < n_; ++i) {
    for (std::uint32_t j = 0; j < n_; ++j) r.set(j, i, at(i, j));
  }
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  if (n_ != o.n_) return false;
  for (std::size_t i = 0; i < m_.size(); ++i) {
    if (m_[i] != o.m_[i]) return false;
  }
  return true;
}

bool Matrix::is_diagonal() const {
  for (std::uint32_t i = 0; i < n_; ++i) {
    for (std::uint32_t j = 0; j < n_; ++j) {
      if (i != j && !at(i, j).is_zero()) return false;
    }
  }
  return true;
}

namespace {

// Gauss-Jordan over the field; returns determinant and, when wanted, the
// inverse accumulated on an identity block.
struct Elimination {
  Scalar det;
  bool invertible;
  Matrix inverse;
};

Elimination eliminate(const Matrix& a, bool want_inverse) {
  const FieldPtr& f = a.field();
  const std::uint32_t n = a.size();
  std::vector<std::vector<Scalar>> w(n, std::vector<Scalar>());
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) w[i].push_back(a.at(i, j));
  }
  Matrix inv = Matrix::identity(f, n);
  Scalar det = Scalar::one(f);
  for (std::uint32_t col = 0; col < n; ++col) {
    std::uint32_t pivot = col;
    while (pivot < n && w[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return {Scalar::zero(f), false, Matrix()};
    if (pivot != col) {
      std::swap(w[pivot], w[col]);
      if (want_inverse) {
        for (std::uint32_t j = 0; j < n; ++j) {
          Scalar t = inv.at(pivot, j);
          inv.set(pivot, j, inv.at(col, j));
          inv.set(col, j, std::move(t));
        }
      }
      det = det.negated();
    }
    Scalar p = w[col][col];
    det = det * p;
    Scalar pinv = p.inverse();
    for (std::uint32_t j = 0; j < n; ++j) {
      w[col][j] = w[col][j] * pinv;
      if (want_inverse) inv.set(col, j, inv.at(col, j) * pinv);
    }
    for (std::uint32_t r = 0; r < n; ++r) {
      if (r == col || w[r][col].is_zero()) continue;
      Scalar factor = w[r][col];
      for (std::uint32_t j = 0; j < n; ++j) {
        w[r][j] = w[r][j] - factor * w[col][j];
        if (want_inverse) inv.set(r, j, inv.at(r, j) - factor * inv.at(col, j));
      }
    }
  }
  return {det, true, want_inverse ? inv : Matrix()};
}

}  // namespace

Scalar Matrix::det() const {
  // elimination normalizes pivots, so the determinant is tracked separately
  const std::uint32_t n = n_;
  std::vector<std::vector<Scalar>> w(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) w[i].push_back(at(i, j));
  }
  Scalar det = Scalar::one(field_);
  for (std::uint32_t col = 0; col < n; ++col) {
    std::uint32_t pivot = col;
    while (pivot < n && w[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return Scalar::zero(field_);
    if (pivot != col) {
      std::swap(w[pivot], w[col]);
      det = det.negated();
    }
    det = det * w[col][col];
    Scalar pinv = w[col][col].inverse();
    for (std::uint32_t r = col + 1; r < n; ++r) {
      if (w[r][col].is_zero()) continue;
      Scalar factor = w[r][col] * pinv;
      for (std::uint32_t j = col; j < n; ++j) w[r][j] = w[r][j] - factor * w[col][j];
    }
  }
  return det;
}

bool Matrix::is_invertible() const { return !det().is_zero(); }

Matrix Matrix::inverse() const {
  Elimination e = eliminate(*this, true);
  if (!e.invertible) fail(errc::singular_matrix, "matrix is singular");
  return e.inverse;
}

std::string Matrix::str() const {
  std::string s = "[";
  for (std::uint32_t i = 0; i < n_; ++i) {
    if (i) s += ",";
    s += "[";
    for (std::uint32_t j = 0; j < n_; ++j) {
      if (j) s += ",";
      s += at(i, j).str();
    }
    s += "]";
  }
  return s + "]";
}

// --- standard form ---

StandardAuto make_standard_auto(bool transpose_inverse, Matrix conjugator,
                                std::uint32_t frobenius_exp, std::uint64_t det_character_exp) {
  const FieldPtr& f = conjugator.field();
  if (!conjugator.is_invertible()) fail(errc::singular_matrix, "conjugator must be invertible");
  StandardAuto a;
  a.transpose_inverse = transpose_inverse;
  a.frobenius_exp = f->is_finite() ? frobenius_exp % f->extension_degree() : 0;
  a.det_character_exp = f->is_finite() ? det_character_exp % (f->order() - 1) : det_character_exp;
  a.conjugator = std::move(conjugator);
  return a;
}

StandardAuto identity_standard_auto(const FieldPtr& f, std::uint32_t n) {
  return make_standard_auto(false, Matrix::identity(f, n), 0, 0);
}

namespace {

Scalar frobenius(const Scalar& s, std::uint32_t e) {
  if (e == 0) return s;
  Scalar r = s;
  std::uint64_t p = s.field()->characteristic();
  for (std::uint32_t i = 0; i < e; ++i) r = r.pow(static_cast<std::int64_t>(p));
  return r;
}

Matrix map_entries_frobenius(const Matrix& a, std::uint32_t e) {
  if (e == 0) return a;
  Matrix r(a.field(), a.size());
  for (std::uint32_t i = 0; i < a.size(); ++i) {
    for (std::uint32_t j = 0; j < a.size(); ++j) r.set(i, j, frobenius(a.at(i, j), e));
  }
  return r;
}

}  // namespace

Matrix apply_standard(const StandardAuto& phi, const Matrix& a) {
  if (!a.is_invertible()) fail(errc::singular_input, "standard automorphisms act on GL_n only");
  // radial factor
  Matrix r = a;
  if (phi.det_character_exp != 0) {
    Scalar chi = a.det().pow(static_cast<std::int64_t>(phi.det_character_exp));
    for (std::uint32_t i = 0; i < r.size(); ++i) {
      for (std::uint32_t j = 0; j < r.size(); ++j) r.set(i, j, r.at(i, j) * chi);
    }
  }
  // entrywise field automorphism, then conjugation
  r = map_entries_frobenius(r, phi.frobenius_exp);
  r = phi.conjugator * r * phi.conjugator.inverse();
  if (phi.transpose_inverse) r = r.inverse().transpose();
  return r;
}

StandardAuto compose_standard(const StandardAuto& phi1, const StandardAuto& phi2) {
  const FieldPtr& f = phi1.conjugator.field();
  if (!f->same_as(*phi2.conjugator.field())) {
    fail(errc::field_mismatch, "standard automorphisms over different fields");
  }
  if (phi1.conjugator.size() != phi2.conjugator.size()) {
    fail(errc::shape_mismatch, "standard automorphisms of different rank");
  }
  const std::uint32_t n = phi1.conjugator.size();
  const std::uint32_t k = f->extension_degree();
  const std::uint64_t group = f->is_finite() ? f->order() - 1 : 0;

  // The radial factor commutes with every other piece, radials compose as
  // c = c1 + c2 + n*c1*c2; the twist slides through the flip unchanged and
  // through a conjugation by twisting S; the flip turns Ad_S into
  // Ad_{(S^t)^{-1}}.
  std::uint64_t c;
  if (f->is_finite()) {
    unsigned __int128 cc = (unsigned __int128)phi1.det_character_exp + phi2.det_character_exp +
                           (unsigned __int128)n * phi1.det_character_exp % group *
                               phi2.det_character_exp;
    c = static_cast<std::uint64_t>(cc % group);
  } else {
    c = phi1.det_character_exp + phi2.det_character_exp +
        static_cast<std::uint64_t>(n) * phi1.det_character_exp * phi2.det_character_exp;
  }

  Matrix s1 = phi2.transpose_inverse ? phi1.conjugator.inverse().transpose() : phi1.conjugator;
  Matrix s2 = map_entries_frobenius(phi2.conjugator, phi1.frobenius_exp);
  StandardAuto r;
  r.transpose_inverse = phi1.transpose_inverse != phi2.transpose_inverse;
  r.conjugator = s1 * s2;
  r.frobenius_exp = k ? (phi1.frobenius_exp + phi2.frobenius_exp) % k : 0;
  r.det_character_exp = c;
  return r;
}

bool radial_is_bijective(const FieldPtr& f, std::uint32_t n, std::uint64_t c) {
  if (!f->is_finite()) fail(errc::infinite_field, "bijectivity criterion is for finite fields");
  std::uint64_t group = f->order() - 1;
  std::uint64_t a = (static_cast<unsigned __int128>(n) * (c % group) + 1) % group;
  return std::gcd(a, group) == 1;
}

std::vector<Matrix> all_invertible_diagonals(const FieldPtr& f, std::uint32_t n,
                                             std::uint64_t cap) {
  std::uint64_t q = f->order();
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    count *= q - 1;
    if (count > cap) fail(errc::enumeration_too_large, "diagonal enumeration exceeds cap");
  }
  std::vector<Matrix> out;
  out.reserve(count);
  std::vector<std::uint64_t> idx(n, 1);
  for (;;) {
    std::vector<Scalar> d;
    d.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) d.push_back(Scalar::from_index(f, idx[i]));
    out.push_back(Matrix::diagonal(d));
    std::uint32_t pos = 0;
    while (pos < n) {
      if (++idx[pos] < q) break;
      idx[pos] = 1;
      ++pos;
    }
    if (pos == n) break;
  }
  return out;
}

std::vector<Matrix> all_monomial_matrices(const FieldPtr& f, std::uint32_t n, std::uint64_t cap) {
  std::vector<std::uint32_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::vector<Matrix> diags = all_invertible_diagonals(f, n, cap);
  std::uint64_t total = diags.size();
  for (std::uint32_t i = 2; i <= n; ++i) total *= i;
  if (total > cap) fail(errc::enumeration_too_large, "monomial enumeration exceeds cap");
  std::vector<Matrix> out;
  out.reserve(total);
  do {
    for (const auto& d : diags) {
      Matrix m(f, n);
      for (std::uint32_t i = 0; i < n; ++i) m.set(perm[i], i, d.at(i, i));
      out.push_back(std::move(m));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<Matrix> all_gl_matrices(const FieldPtr& f, std::uint32_t n, std::uint64_t cap) {
  std::uint64_t q = f->order();
  std::uint64_t total = 1;
  for (std::uint32_t i = 0; i < n * n; ++i) {
    total *= q;
    if (total > cap) fail(errc::enumeration_too_large, "GL enumeration exceeds cap");
  }
  std::vector<Matrix> out;
  std::vector<std::uint64_t> idx(static_cast<std::size_t>(n) * n, 0);
  for (;;) {
    std::vector<Scalar> entries;
    entries.reserve(idx.size());
    for (auto v : idx) entries.push_back(Scalar::from_index(f, v));
    Matrix m = Matrix::from_entries(f, n, std::move(entries));
    if (m.is_invertible()) out.push_back(std::move(m));
    std::size_t pos = 0;
    while (pos < idx.size()) {
      if (++idx[pos] < q) break;
      idx[pos] = 0;
      ++pos;
    }
    if (pos == idx.size()) break;
  }
  return out;
}

DiagonalFixingReport diagonal_fixing_analysis(const StandardAuto& phi, std::uint64_t cap) {
  const FieldPtr& f = phi.conjugator.field();
  if (!f->is_finite()) fail(errc::infinite_field, "diagonal enumeration requires a finite field");
  DiagonalFixingReport rep;
  rep.omega_identity = !phi.transpose_inverse;
  rep.frobenius_trivial = phi.frobenius_exp == 0;
  rep.character_trivial = phi.det_character_exp == 0;
  rep.fixes_all_diagonals = true;
  for (const auto& d : all_invertible_diagonals(f, phi.conjugator.size(), cap)) {
    if (apply_standard(phi, d) != d) {
      rep.fixes_all_diagonals = false;
      rep.witness = d;
      break;
    }
  }
  return rep;
}

SurveyReport survey_diagonal_fixers(const FieldPtr& f, std::uint32_t n, std::uint64_t cap,
                                    ConjugatorRange range) {
  SurveyReport rep;
  rep.n = n;
  rep.q = f->order();
  rep.range = range;
  std::vector<Matrix> conjugators = range == ConjugatorRange::full_gl
                                        ? all_gl_matrices(f, n, cap)
                                        : all_monomial_matrices(f, n, cap);
  std::vector<Matrix> diagonals = all_invertible_diagonals(f, n, cap);
  const std::uint32_t k = f->extension_degree();
  const std::uint64_t group = f->order() - 1;
  std::uint64_t combos = static_cast<std::uint64_t>(2) * k * group * conjugators.size();
  if (combos > cap) fail(errc::enumeration_too_large, "survey combination count exceeds cap");
  rep.combos_scanned = combos;

  for (int omega = 0; omega <= 1; ++omega) {
    for (std::uint32_t e = 0; e < k; ++e) {
      for (std::uint64_t c = 0; c < group; ++c) {
        for (const auto& s : conjugators) {
          StandardAuto phi = make_standard_auto(omega != 0, s, e, c);
          bool fixes = true;
          for (const auto& d : diagonals) {
            if (apply_standard(phi, d) != d) {
              fixes = false;
              break;
            }
          }
          if (fixes) {
            rep.fixers.push_back(
                {omega != 0, e, c, s, omega == 0 && e == 0 && c == 0});
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace tame
