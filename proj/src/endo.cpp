#include "tame/endo.hpp"

#include <algorithm>

#include "tame/error.hpp"

namespace tame {

Endomorphism Endomorphism::identity(const FieldPtr& f, std::uint32_t nvars) {
  std::vector<Polynomial> images;
  images.reserve(nvars);
  for (std::uint32_t i = 1; i <= nvars; ++i) images.push_back(Polynomial::variable(f, nvars, i));
  return from_images(std::move(images));
}

Endomorphism Endomorphism::from_images(std::vector<Polynomial> images) {
  if (images.size() < 2) fail(errc::arity_mismatch, "an endomorphism needs at least 2 variables");
  Endomorphism e;
  e.nvars_ = static_cast<std::uint32_t>(images.size());
  e.field_ = images[0].field();
  for (const auto& img : images) {
    if (img.nvars() != e.nvars_) fail(errc::arity_mismatch, "image arity must equal the tuple size");
    if (!img.field()->same_as(*e.field_)) fail(errc::field_mismatch, "images over different fields");
  }
  e.images_ = std::move(images);
  return e;
}

const Polynomial& Endomorphism::image(std::uint32_t i) const {
  if (i < 1 || i > nvars_) fail(errc::index_out_of_range, "generator index out of range");
  return images_[i - 1];
}

bool Endomorphism::is_identity() const {
  for (std::uint32_t i = 1; i <= nvars_; ++i) {
    const auto& t = images_[i - 1].terms();
    if (t.size() != 1 || !t[0].coeff.is_one() || !(t[0].mono == Monomial::var(nvars_, i))) {
      return false;
    }
  }
  return true;
}

bool Endomorphism::is_origin_preserving() const {
  return std::all_of(images_.begin(), images_.end(),
                     [](const Polynomial& p) { return p.constant_term().is_zero(); });
}

int Endomorphism::degree() const {
  int d = -1;
  for (const auto& img : images_) d = std::max(d, img.degree());
  return d;
}

bool Endomorphism::operator==(const Endomorphism& o) const {
  if (nvars_ != o.nvars_) return false;
  for (std::uint32_t i = 0; i < nvars_; ++i) {
    if (images_[i] != o.images_[i]) return false;
  }
  return true;
}

std::string Endomorphism::canonical_key() const {
  std::string key;
  for (std::uint32_t i = 0; i < nvars_; ++i) {
    if (i) key += " | ";
    key += images_[i].str();
  }
  return key;
}

Endomorphism compose(const Endomorphism& f, const Endomorphism& g) {
  if (f.nvars() != g.nvars()) fail(errc::arity_mismatch, "composition arity mismatch");
  if (!f.field()->same_as(*g.field())) fail(errc::field_mismatch, "composition field mismatch");
  std::vector<Polynomial> images;
  images.reserve(g.nvars());
  for (const auto& gi : g.images()) images.push_back(gi.substitute(f.images()));
  return Endomorphism::from_images(std::move(images));
}

Endomorphism make_elementary(std::uint32_t i, const Polynomial& p) {
  const std::uint32_t n = p.nvars();
  if (i < 1 || i > n) fail(errc::index_out_of_range, "target index out of range");
  if (!p.independent_of(i)) fail(errc::self_dependent_p, "p must not involve the moved generator");
  if (!p.constant_term().is_zero()) {
    fail(errc::constant_term_present, "p must have zero constant term");
  }
  std::vector<Polynomial> images;
  images.reserve(n);
  for (std::uint32_t j = 1; j <= n; ++j) {
    Polynomial img = Polynomial::variable(p.field(), n, j);
    if (j == i) img = img + p;
    images.push_back(std::move(img));
  }
  return Endomorphism::from_images(std::move(images));
}

Endomorphism make_linear(const Matrix& a) {
  if (!a.is_invertible()) fail(errc::singular_matrix, "linear automorphism needs an invertible matrix");
  const FieldPtr& f = a.field();
  const std::uint32_t n = a.size();
  std::vector<Polynomial> images;
  images.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    std::vector<Term> terms;
    for (std::uint32_t j = 0; j < n; ++j) {
      if (!a.at(i, j).is_zero()) terms.push_back({Monomial::var(n, j + 1), a.at(i, j)});
    }
    images.push_back(Polynomial::from_terms(f, n, std::move(terms)));
  }
  return Endomorphism::from_images(std::move(images));
}

std::optional<Matrix> as_matrix(const Endomorphism& e) {
  const std::uint32_t n = e.nvars();
  Matrix a(e.field(), n);
  for (std::uint32_t i = 1; i <= n; ++i) {
    const Polynomial& img = e.image(i);
    for (const auto& t : img.terms()) {
      if (t.mono.degree() != 1) return std::nullopt;
      for (std::uint32_t j = 1; j <= n; ++j) {
        if (t.mono.exp(j) == 1) a.set(i - 1, j - 1, t.coeff);
      }
    }
  }
  return a;
}

bool elementary_parts(const Endomorphism& e, std::uint32_t& index, Polynomial& p) {
  const std::uint32_t n = e.nvars();
  std::uint32_t moved = 0;
  for (std::uint32_t i = 1; i <= n; ++i) {
    Polynomial xi = Polynomial::variable(e.field(), n, i);
    if (e.image(i) != xi) {
      if (moved) return false;
      moved = i;
    }
  }
  if (moved == 0) {
    index = 1;
    p = Polynomial::zero(e.field(), n);
    return true;
  }
  Polynomial rest = e.image(moved) - Polynomial::variable(e.field(), n, moved);
  if (!rest.independent_of(moved)) return false;
  index = moved;
  p = std::move(rest);
  return true;
}

Endomorphism invert(const Endomorphism& e) {
  if (auto m = as_matrix(e)) {
    if (!m->is_invertible()) fail(errc::singular_matrix, "linear map is not invertible");
    return make_linear(m->inverse());
  }
  std::uint32_t i = 0;
  Polynomial p;
  if (elementary_parts(e, i, p)) {
    if (!p.constant_term().is_zero()) {
      fail(errc::unsupported_shape, "inverse of a non-origin-preserving elementary");
    }
    return make_elementary(i, p.negated());
  }
  fail(errc::unsupported_shape,
       "only elementary, linear, and diagonal maps invert directly; reverse the word instead");
}

bool verify_inverse_pair(const Endomorphism& f, const Endomorphism& g) {
  if (f.nvars() != g.nvars()) fail(errc::arity_mismatch, "inverse pair arity mismatch");
  Endomorphism id = Endomorphism::identity(f.field(), f.nvars());
  return compose(f, g) == id && compose(g, f) == id;
}

std::vector<Endomorphism> split_elementary(const Endomorphism& e) {
  std::uint32_t i = 0;
  Polynomial p;
  if (!elementary_parts(e, i, p)) fail(errc::not_elementary, "split requires an elementary map");
  std::vector<Endomorphism> parts;
  parts.reserve(p.terms().size());
  for (const auto& t : p.terms()) {
    parts.push_back(make_elementary(i, Polynomial::monomial(t.coeff, t.mono)));
  }
  return parts;
}

GeneratorWord inverted_word(const GeneratorWord& w) {
  GeneratorWord r;
  r.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back({it->tag, -it->exp});
  return r;
}

void GeneratorSet::add(const std::string& tag, const Endomorphism& g) {
  add_with_inverse(tag, g, invert(g));
}

void GeneratorSet::add_with_inverse(const std::string& tag, Endomorphism g, Endomorphism g_inv) {
  if (contains(tag)) fail(errc::invalid_argument, "duplicate generator tag " + tag);
  if (g.nvars() != nvars_ || !g.field()->same_as(*field_)) {
    fail(errc::arity_mismatch, "generator does not match the set's field/arity");
  }
  if (!verify_inverse_pair(g, g_inv)) {
    fail(errc::invalid_argument, "stored inverse fails verification for tag " + tag);
  }
  entries_.push_back({tag, std::move(g), std::move(g_inv)});
}

const GeneratorSet::Entry& GeneratorSet::at(const std::string& tag) const {
  for (const auto& e : entries_) {
    if (e.tag == tag) return e;
  }
  fail(errc::unknown_tag, "unknown generator tag " + tag);
}

bool GeneratorSet::contains(const std::string& tag) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const Entry& e) { return e.tag == tag; });
}

Endomorphism eval_word(const GeneratorWord& w, const GeneratorSet& gens) {
  Endomorphism acc = Endomorphism::identity(gens.field(), gens.nvars());
  for (const auto& letter : w) {
    const auto& entry = gens.at(letter.tag);
    const Endomorphism& step = letter.exp >= 0 ? entry.forward : entry.inverse;
    std::int64_t count = letter.exp >= 0 ? letter.exp : -letter.exp;
    for (std::int64_t i = 0; i < count; ++i) acc = compose(acc, step);
  }
  return acc;
}

}  // namespace tame
