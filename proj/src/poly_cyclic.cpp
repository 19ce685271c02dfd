#include <algorithm>
#include <numeric>
#include <sstream>

#include "permod/poly.hpp"

namespace permod {

CosetPartition cyclotomic_cosets(uint32_t p, uint64_t q) {
  if (!is_prime_u64(p)) throw std::invalid_argument("p must be prime");
  if (q % p == 0) throw std::invalid_argument("q must be coprime to p");
  const uint64_t qm = q % p;
  CosetPartition part{p, qm, {{0}}};
  std::vector<bool> seen(p, false);
  seen[0] = true;
  for (uint32_t i = 1; i < p; ++i) {
    if (seen[i]) continue;
    std::vector<uint32_t> coset;
    uint64_t j = i;
    while (!seen[j]) {
      seen[j] = true;
      coset.push_back(uint32_t(j));
      j = j * qm % p;
    }
    std::sort(coset.begin(), coset.end());
    part.cosets.push_back(std::move(coset));
  }
  // cosets are discovered by minimal element already; keep the order stable
  return part;
}

std::vector<Poly<FF>> factor_cyclic(uint32_t p, const FieldPtr& field) {
  if (!is_prime_u64(p)) throw std::invalid_argument("p must be prime");
  if (field->p() == p)
    throw std::invalid_argument("characteristic equals p; X^p-1 = (X-1)^p");

  const u128 q = field->order();
  const uint64_t m = multiplicative_order_mod(q, p);
  const CosetPartition cosets = cyclotomic_cosets(p, q);

  // Splitting field GF(q^m), containing a primitive p-th root of unity.
  FieldPtr ext =
      (m == 1) ? field : make_field(field->p(), uint32_t(field->k() * m));
  Embedding emb(field, ext);
  FF zeta = find_element_of_order(*ext, p);

  std::vector<Poly<FF>> factors;
  factors.reserve(cosets.cosets.size());
  for (const auto& coset : cosets.cosets) {
    if (coset.size() == 1 && coset[0] == 0) {
      factors.push_back(Poly<FF>({-field->one(), field->one()}, field->zero()));
      continue;
    }
    // prod_{i in coset} (X - zeta^i) over the extension
    Poly<FF> f = Poly<FF>::x_power(0, ext->zero());
    for (uint32_t i : coset) {
      FF zi = zeta.pow(i);
      f = f * Poly<FF>({-zi, ext->one()}, ext->zero());
    }
    // Coefficients must be fixed by the Frobenius x -> x^q, i.e. lie in the
    // embedded copy of the base field; anything else is an implementation bug.
    std::vector<FF> down;
    down.reserve(f.coeffs().size());
    for (const FF& c : f.coeffs()) {
      if (c.pow(q) != c)
        throw invariant_violation("coset product coefficient not Frobenius-fixed");
      auto b = emb.down(c);
      if (!b)
        throw invariant_violation("coset product coefficient outside base field");
      down.push_back(*b);
    }
    factors.push_back(Poly<FF>(std::move(down), field->zero()));
  }

  // sort by degree, then by coefficients from the top power down (the order
  // the polynomials read when written out)
  std::sort(factors.begin(), factors.end(),
            [](const Poly<FF>& a, const Poly<FF>& b) {
              if (a.degree() != b.degree()) return a.degree() < b.degree();
              for (size_t i = a.coeffs().size(); i-- > 0;) {
                if (a.coeffs()[i] != b.coeffs()[i])
                  return a.coeffs()[i].rep_less(b.coeffs()[i]);
              }
              return false;
            });

  Poly<FF> prod = Poly<FF>::x_power(0, field->zero());
  for (const auto& f : factors) prod = prod * f;
  if (prod != x_pow_minus_one(p, field->zero()))
    throw invariant_violation("factor product does not equal X^p - 1");
  return factors;
}

std::string poly_str(const Poly<FF>& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  const bool ext = f.zero_coeff().field().k() > 1;
  for (size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) os << ",";
    if (ext)
      os << f.coeffs()[i].str();
    else
      os << f.coeffs()[i].rep()[0];
  }
  return os.str();
}

}  // namespace permod
