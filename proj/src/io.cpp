#include "tame/io.hpp"

#include <cctype>

#include "tame/error.hpp"

#include "json.hpp"

namespace tame {
namespace io {

namespace {

using nlohmann::json;

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::uint64_t parse_uint(std::string_view s, const char* what) {
  s = trimmed(s);
  if (s.empty()) fail(errc::parse_error, std::string("missing ") + what);
  std::uint64_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') fail(errc::parse_error, std::string("bad ") + what + ": " + std::string(s));
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  int bracket = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '[') ++bracket;
    if (s[i] == ']') --bracket;
    if (s[i] == sep && bracket == 0) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(s.substr(start));
  return parts;
}

}  // namespace

Monomial parse_monomial(std::string_view text, std::uint32_t nvars) {
  text = trimmed(text);
  if (text.empty()) fail(errc::parse_error, "empty monomial");
  std::vector<std::uint16_t> exps(nvars, 0);
  if (text == "1") return Monomial(std::move(exps));
  for (auto factor : split(text, '*')) {
    factor = trimmed(factor);
    if (factor == "1") continue;
    if (factor.empty() || factor[0] != 'x') {
      fail(errc::parse_error, "monomial factor must look like x<i>^<e>: " + std::string(factor));
    }
    factor.remove_prefix(1);
    std::uint64_t var, e = 1;
    auto caret = factor.find('^');
    if (caret == std::string_view::npos) {
      var = parse_uint(factor, "variable index");
    } else {
      var = parse_uint(factor.substr(0, caret), "variable index");
      e = parse_uint(factor.substr(caret + 1), "exponent");
    }
    if (var < 1 || var > nvars) fail(errc::index_out_of_range, "variable index out of range");
    std::uint64_t sum = exps[var - 1] + e;
    if (sum > 0xffff) fail(errc::exponent_overflow, "exponent exceeds 16-bit storage");
    exps[var - 1] = static_cast<std::uint16_t>(sum);
  }
  return Monomial(std::move(exps));
}

Scalar parse_scalar(std::string_view text, const FieldPtr& f) {
  text = trimmed(text);
  if (text.empty()) fail(errc::parse_error, "empty scalar");
  if (text.front() == '[') {
    if (text.back() != ']') fail(errc::parse_error, "unterminated coefficient list");
    auto inner = text.substr(1, text.size() - 2);
    std::vector<std::uint64_t> coeffs;
    for (auto part : split(inner, ',')) coeffs.push_back(parse_uint(part, "coefficient"));
    return Scalar::from_coeffs(f, std::move(coeffs));
  }
  if (!f->is_finite()) return Scalar::from_rational(f, Rational::from_string(text));
  bool neg = text.front() == '-';
  if (neg) text.remove_prefix(1);
  std::uint64_t r = parse_uint(text, "residue") % f->characteristic();
  Scalar s = Scalar::from_int(f, static_cast<std::int64_t>(r));
  return neg ? s.negated() : s;
}

Polynomial parse_polynomial(std::string_view text, const FieldPtr& f, std::uint32_t nvars) {
  text = trimmed(text);
  if (text.empty()) fail(errc::parse_error, "empty polynomial");
  if (text == "0") return Polynomial::zero(f, nvars);
  std::vector<Term> terms;
  for (auto term_text : split(text, '+')) {
    term_text = trimmed(term_text);
    if (term_text.empty()) fail(errc::parse_error, "empty term");
    // split into scalar factor and monomial factors
    Scalar coeff = Scalar::one(f);
    std::vector<std::uint16_t> exps(nvars, 0);
    Monomial mono(exps);
    bool saw_factor = false;
    for (auto factor : split(term_text, '*')) {
      factor = trimmed(factor);
      if (factor.empty()) fail(errc::parse_error, "empty factor");
      if (factor[0] == 'x') {
        mono = mono.times(parse_monomial(factor, nvars));
      } else {
        coeff = coeff * parse_scalar(factor, f);
      }
      saw_factor = true;
    }
    if (!saw_factor) fail(errc::parse_error, "term without factors");
    terms.push_back({std::move(mono), std::move(coeff)});
  }
  return Polynomial::from_terms(f, nvars, std::move(terms));
}

std::string render_polynomial_structured(const Polynomial& p) {
  json arr = json::array();
  for (const auto& t : p.terms()) {
    arr.push_back({{"exps", t.mono.exponents()}, {"coeff", t.coeff.str()}});
  }
  return arr.dump();
}

Polynomial parse_polynomial_structured(std::string_view json_text, const FieldPtr& f,
                                       std::uint32_t nvars) {
  json arr = json::parse(json_text, nullptr, true, true);
  std::vector<Term> terms;
  for (const auto& item : arr) {
    auto exps = item.at("exps").get<std::vector<std::uint16_t>>();
    if (exps.size() != nvars) fail(errc::arity_mismatch, "exponent list must have nvars entries");
    terms.push_back({Monomial(std::move(exps)),
                     parse_scalar(item.at("coeff").get<std::string>(), f)});
  }
  return Polynomial::from_terms(f, nvars, std::move(terms));
}

std::string field_json(const FieldPtr& f) {
  json j;
  j["p"] = f->characteristic();
  j["k"] = f->extension_degree();
  if (f->is_extension()) j["modulus"] = f->modulus();
  return j.dump();
}

namespace {

FieldPtr field_from_json(const json& j) {
  std::uint64_t p = j.at("p").get<std::uint64_t>();
  std::uint32_t k = j.value("k", 1u);
  std::vector<std::uint64_t> modulus;
  if (j.contains("modulus")) modulus = j.at("modulus").get<std::vector<std::uint64_t>>();
  return make_field(p, k, modulus);
}

json endo_to_json(const Endomorphism& e) {
  json j;
  j["field"] = json::parse(field_json(e.field()));
  j["nvars"] = e.nvars();
  json images = json::array();
  for (const auto& img : e.images()) images.push_back(img.str());
  j["images"] = std::move(images);
  return j;
}

}  // namespace

std::string render_endomorphism(const Endomorphism& e) { return endo_to_json(e).dump(2) + "\n"; }

Endomorphism parse_endomorphism(std::string_view json_text) {
  json j = json::parse(json_text, nullptr, true, true);
  FieldPtr f = field_from_json(j.at("field"));
  std::uint32_t nvars = j.at("nvars").get<std::uint32_t>();
  std::vector<Polynomial> images;
  for (const auto& img : j.at("images")) {
    // images may be canonical text or structured term lists
    if (img.is_string()) {
      images.push_back(parse_polynomial(img.get<std::string>(), f, nvars));
    } else {
      images.push_back(parse_polynomial_structured(img.dump(), f, nvars));
    }
  }
  return Endomorphism::from_images(std::move(images));
}

std::string render_word(const GeneratorWord& w) {
  json arr = json::array();
  for (const auto& l : w) arr.push_back(json::array({l.tag, l.exp}));
  return arr.dump();
}

GeneratorWord parse_word(std::string_view json_text) {
  json arr = json::parse(json_text, nullptr, true, true);
  GeneratorWord w;
  for (const auto& item : arr) {
    w.push_back({item.at(0).get<std::string>(), item.at(1).get<std::int64_t>()});
  }
  return w;
}

std::string render_certificate(const GeneratorSet& gens, const GeneratorWord& w,
                               const Endomorphism& evaluated) {
  json j;
  j["field"] = json::parse(field_json(gens.field()));
  j["nvars"] = gens.nvars();
  json g;
  for (const auto& e : gens.entries()) {
    json images = json::array();
    for (const auto& img : e.forward.images()) images.push_back(img.str());
    g[e.tag] = std::move(images);
  }
  j["generators"] = std::move(g);
  j["word"] = json::parse(render_word(w));
  j["evaluates_to"] = endo_to_json(evaluated)["images"];
  return j.dump(2) + "\n";
}

}  // namespace io
}  // namespace tame
