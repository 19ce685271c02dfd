#ifndef PERMOD_PARSE_HPP
#define PERMOD_PARSE_HPP

#include <string>
#include <vector>

#include "permod/exact.hpp"
#include "permod/ff.hpp"
#include "permod/poly.hpp"

namespace permod {

/// Coefficient domain named on the command line: `p`, `p^k`, or `Q`.
struct FieldSpec {
  bool rational = false;
  FieldPtr field;  // set unless rational
};

FieldSpec parse_field_spec(const std::string& text);

/// One field element: a prime-subfield digit, or `;`-joined rep digits.
FF parse_element(const std::string& text, const FieldPtr& field);

/// Comma-separated coefficients ascending degree; trailing zeros stripped.
Poly<FF> parse_poly(const std::string& text, const FieldPtr& field);
Poly<Rational> parse_poly_rational(const std::string& text);

std::vector<FF> parse_vector_ff(const std::string& text, const FieldPtr& field,
                                size_t expect_len);
std::vector<Rational> parse_vector_rational(const std::string& text,
                                            size_t expect_len);

std::string render_element(const FF& x);
std::string render_poly(const Poly<FF>& f);
std::string render_poly_rational(const Poly<Rational>& f);

std::vector<std::string> split(const std::string& s, char sep);

}  // namespace permod

#endif
