#include "permod/parse.hpp"

#include <sstream>
#include <stdexcept>

namespace permod {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

namespace {

uint64_t parse_u64(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty number literal");
  size_t pos = 0;
  uint64_t v = std::stoull(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("bad number literal: " + s);
  return v;
}

}  // namespace

FieldSpec parse_field_spec(const std::string& text) {
  if (text == "Q" || text == "q" || text == "0") return FieldSpec{true, nullptr};
  auto parts = split(text, '^');
  if (parts.size() == 1) return FieldSpec{false, make_field(parse_u64(parts[0]))};
  if (parts.size() == 2)
    return FieldSpec{false, make_field(parse_u64(parts[0]),
                                       uint32_t(parse_u64(parts[1])))};
  throw std::invalid_argument("bad field spec: " + text);
}

FF parse_element(const std::string& text, const FieldPtr& field) {
  auto digits = split(text, ';');
  if (digits.size() > field->k())
    throw std::invalid_argument("element literal has too many digits: " + text);
  std::vector<uint32_t> rep;
  rep.reserve(field->k());
  for (const auto& d : digits) {
    uint64_t v = parse_u64(d);
    if (v >= field->p())
      throw std::invalid_argument("coefficient out of range: " + d);
    rep.push_back(uint32_t(v));
  }
  return field->from_rep(std::move(rep));
}

Poly<FF> parse_poly(const std::string& text, const FieldPtr& field) {
  std::vector<FF> coeffs;
  for (const auto& tok : split(text, ','))
    coeffs.push_back(parse_element(tok, field));
  return Poly<FF>(std::move(coeffs), field->zero());
}

Poly<Rational> parse_poly_rational(const std::string& text) {
  std::vector<Rational> coeffs;
  for (const auto& tok : split(text, ','))
    coeffs.push_back(Rational::from_string(tok));
  return Poly<Rational>(std::move(coeffs), Rational());
}

std::vector<FF> parse_vector_ff(const std::string& text, const FieldPtr& field,
                                size_t expect_len) {
  std::vector<FF> out;
  for (const auto& tok : split(text, ','))
    out.push_back(parse_element(tok, field));
  if (out.size() != expect_len)
    throw std::invalid_argument("vector length mismatch: expected " +
                                std::to_string(expect_len));
  return out;
}

std::vector<Rational> parse_vector_rational(const std::string& text,
                                            size_t expect_len) {
  std::vector<Rational> out;
  for (const auto& tok : split(text, ','))
    out.push_back(Rational::from_string(tok));
  if (out.size() != expect_len)
    throw std::invalid_argument("vector length mismatch: expected " +
                                std::to_string(expect_len));
  return out;
}

std::string render_element(const FF& x) { return x.str(); }

std::string render_poly(const Poly<FF>& f) { return poly_str(f); }

std::string render_poly_rational(const Poly<Rational>& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) os << ",";
    os << f.coeffs()[i].str();
  }
  return os.str();
}

}  // namespace permod
