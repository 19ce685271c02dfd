#include <set>

#include "permod/permod.hpp"

namespace permod {

std::string equality_case_name(EqualityCase c) {
  switch (c) {
    case EqualityCase::BlockEquality: return "block-equality";
    case EqualityCase::Theorem36: return "theorem-3.6";
    case EqualityCase::TOne: return "t=1";
    case EqualityCase::TNMinusOne: return "t=n-1";
    case EqualityCase::None: return "none";
  }
  return "none";
}

MinSupportResult min_support(const SubmoduleBasis<FF>& m, uint64_t cap) {
  if (m.dim() == 0) throw std::invalid_argument("zero submodule");
  const FiniteField& f = m.rows[0][0].field();
  const uint64_t q = uint64_t(f.order());
  uint64_t total = 1;
  for (size_t i = 0; i < m.dim(); ++i) {
    if (total > cap / q + 1) throw std::invalid_argument("min_support cap exceeded");
    total *= q;
  }
  if (total > cap) throw std::invalid_argument("min_support cap exceeded");

  const size_t n = m.rows[0].size();
  size_t best = n + 1;
  std::vector<FF> witness;
  // coefficient tuples over the basis rows, row 0 the least significant digit
  std::vector<uint64_t> digits(m.dim(), 0);
  std::vector<FF> cur(n, f.zero());
  for (uint64_t idx = 1; idx < total; ++idx) {
    size_t pos = 0;
    while (true) {
      uint64_t old = digits[pos];
      digits[pos] = (old + 1) % q;
      FF delta = f.from_index(digits[pos]) - f.from_index(old);
      for (size_t j = 0; j < n; ++j)
        cur[j] = cur[j] + delta * m.rows[pos][j];
      if (digits[pos] != 0) break;
      ++pos;
    }
    size_t t = 0;
    for (const auto& c : cur)
      if (!c.is_zero()) ++t;
    if (t < best && t > 0) {
      best = t;
      witness = cur;
      if (best == 1) break;
    }
  }
  if (witness.empty()) throw invariant_violation("submodule had no nonzero vector");
  return MinSupportResult{best, std::move(witness)};
}

RudioResult rudio_witness(const PermGroup& g, const std::vector<uint32_t>& xs,
                          uint32_t u, uint32_t w) {
  if (xs.empty() || xs.size() >= g.degree())
    throw std::invalid_argument("X must be nonempty and proper");
  if (u == w) throw std::invalid_argument("points must be distinct");
  if (u >= g.degree() || w >= g.degree())
    throw std::invalid_argument("point out of range");

  RudioResult res;
  res.hypotheses_met = is_transitive(g) && g.degree() >= 2 && is_primitive(g);
  for (const auto& el : g.elements()) {
    std::vector<uint32_t> tr;
    tr.reserve(xs.size());
    for (uint32_t x : xs) tr.push_back(el.apply(x));
    std::sort(tr.begin(), tr.end());
    bool has_u = std::binary_search(tr.begin(), tr.end(), u);
    bool has_w = std::binary_search(tr.begin(), tr.end(), w);
    if (!res.separating && (has_u != has_w)) res.separating = tr;
    if (!res.containing_u && has_u && !has_w) res.containing_u = tr;
    if (res.separating && res.containing_u) break;
  }
  if (res.hypotheses_met && (!res.separating || !res.containing_u))
    throw invariant_violation("Rudio witness missing for a primitive action");
  return res;
}

AffineConstruction affine_construction(const FieldPtr& field, const FF& a_gen) {
  const uint64_t q = uint64_t(field->order());
  if (a_gen.is_zero()) throw std::invalid_argument("generator must be a unit");
  if (a_gen.is_one() && q > 2)
    throw std::invalid_argument("trivial multiplier subgroup with q > 2");

  const uint32_t n = uint32_t(q);
  std::vector<Permutation> gens;
  // translations by the monomial basis span all of F^+
  for (uint32_t b = 0; b < field->k(); ++b) {
    FF shift = field->from_rep([&] {
      std::vector<uint32_t> r(field->k(), 0);
      r[b] = 1;
      return r;
    }());
    std::vector<uint32_t> img(n);
    for (uint32_t i = 0; i < n; ++i)
      img[i] = uint32_t((field->from_index(i) + shift).index());
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  if (!a_gen.is_one()) {
    std::vector<uint32_t> img(n);
    for (uint32_t i = 0; i < n; ++i)
      img[i] = uint32_t((field->from_index(i) * a_gen).index());
    gens.push_back(Permutation::from_images(std::move(img)));
  }
  auto group = std::make_shared<PermGroup>(n, std::move(gens));

  ModVector<FF> v{group.get(), std::vector<FF>(n, field->zero())};
  for (uint32_t i = 0; i < n; ++i) v.coeffs[i] = field->from_index(i);

  AffineConstruction out{group, std::move(v), is_primitive(*group), 0, 0};
  out.t = size_t(out.vector.t());
  out.d = dim_generated(out.vector);
  if (out.t != size_t(q - 1))
    throw invariant_violation("affine vector support is not q - 1");
  if (out.d != 2) throw invariant_violation("affine submodule is not 2-dimensional");
  return out;
}

}  // namespace permod
