#ifndef PERMOD_PERMOD_HPP
#define PERMOD_PERMOD_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>

#include "permod/ff.hpp"
#include "permod/linalg.hpp"
#include "permod/permgrp.hpp"
#include "permod/poly.hpp"

namespace permod {

inline uint32_t field_char(const FF& x) { return x.field().p(); }

/// Element of the permutation module F[S]: one coefficient per point of the
/// G-set.  t(v) = |supp v|, d(v) = dim of the submodule generated by v.
template <class K>
struct ModVector {
  const PermGroup* group;
  std::vector<K> coeffs;

  bool is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(),
                       [](const K& c) { return c.is_zero(); });
  }

  int t() const {
    int n = 0;
    for (const auto& c : coeffs)
      if (!c.is_zero()) ++n;
    return n;
  }

  std::vector<uint32_t> support() const {
    std::vector<uint32_t> s;
    for (uint32_t i = 0; i < coeffs.size(); ++i)
      if (!coeffs[i].is_zero()) s.push_back(i);
    return s;
  }

  /// v*g: the coefficient of point i moves to point i*g.
  ModVector translate(const Permutation& g) const {
    ModVector w{group, coeffs};
    for (uint32_t i = 0; i < coeffs.size(); ++i) w.coeffs[g.apply(i)] = coeffs[i];
    return w;
  }
};

/// Echelonized basis of a G-submodule of F[S].
template <class K>
struct SubmoduleBasis {
  const PermGroup* group;
  std::vector<std::vector<K>> rows;  // reduced echelon, sorted by pivot column
  size_t dim() const { return rows.size(); }
};

namespace detail {

// Reduce v against rows (leading 1 at each pivot); if a nonzero residue
// remains, normalize and insert it keeping the basis reduced.
template <class K>
bool reduce_and_insert(std::vector<std::vector<K>>& rows,
                       std::vector<size_t>& pivots, std::vector<K> v) {
  for (size_t r = 0; r < rows.size(); ++r) {
    const K f = v[pivots[r]];
    if (f.is_zero()) continue;
    for (size_t j = 0; j < v.size(); ++j) v[j] = v[j] - f * rows[r][j];
  }
  size_t pivot = v.size();
  for (size_t j = 0; j < v.size(); ++j) {
    if (!v[j].is_zero()) {
      pivot = j;
      break;
    }
  }
  if (pivot == v.size()) return false;
  const K inv = v[pivot].inverse();
  for (size_t j = pivot; j < v.size(); ++j) v[j] = v[j] * inv;
  for (size_t r = 0; r < rows.size(); ++r) {
    const K f = rows[r][pivot];
    if (f.is_zero()) continue;
    for (size_t j = 0; j < v.size(); ++j) rows[r][j] = rows[r][j] - f * v[j];
  }
  size_t at = 0;
  while (at < pivots.size() && pivots[at] < pivot) ++at;
  rows.insert(rows.begin() + at, std::move(v));
  pivots.insert(pivots.begin() + at, pivot);
  return true;
}

template <class K>
SubmoduleBasis<K> close_under_action(const PermGroup& g,
                                     std::vector<std::vector<K>> seed) {
  std::vector<std::vector<K>> rows;
  std::vector<size_t> pivots;
  std::vector<std::vector<K>> work = std::move(seed);
  while (!work.empty()) {
    std::vector<K> w = std::move(work.back());
    work.pop_back();
    if (!reduce_and_insert(rows, pivots, w)) continue;
    for (const auto& gen : g.generators()) {
      std::vector<K> t(w.size(), w[0].zero());
      for (uint32_t i = 0; i < w.size(); ++i) t[gen.apply(i)] = w[i];
      work.push_back(std::move(t));
    }
  }
  return SubmoduleBasis<K>{&g, std::move(rows)};
}

template <class K>
std::vector<std::vector<uint32_t>> translate_supports(const ModVector<K>& v) {
  std::set<std::vector<uint32_t>> seen;
  for (const auto& el : v.group->elements()) {
    std::vector<uint32_t> s;
    for (uint32_t i = 0; i < v.coeffs.size(); ++i)
      if (!v.coeffs[i].is_zero()) s.push_back(el.apply(i));
    std::sort(s.begin(), s.end());
    seen.insert(std::move(s));
  }
  return {seen.begin(), seen.end()};
}

}  // namespace detail

/// Echelon basis of <v>, by worklist closure: translate current basis rows by
/// each generator and insert anything new until stable.
template <class K>
SubmoduleBasis<K> generated_submodule(const ModVector<K>& v) {
  if (v.is_zero()) throw std::invalid_argument("zero vector generates nothing");
  std::vector<std::vector<K>> seed{v.coeffs};
  return detail::close_under_action(*v.group, std::move(seed));
}

template <class K>
size_t dim_generated(const ModVector<K>& v) {
  return generated_submodule(v).dim();
}

enum class EqualityCase { BlockEquality, Theorem36, TOne, TNMinusOne, None };

std::string equality_case_name(EqualityCase c);

struct Theorem36Conclusions {
  bool a = false;  // each point in exactly two members of Omega; pairwise
                   // intersections are single points
  bool b = false;  // action on Omega 2-transitive, on its 2-subsets primitive
  bool c = false;  // d = |Omega| - 1 = t
  bool d = false;  // each member of Omega transitive under its stabilizer
  bool e = false;  // v is a scalar multiple of its support sum
  bool f = false;  // characteristic 2
  bool all() const { return a && b && c && d && e && f; }
};

struct EqualityReport {
  size_t n = 0;
  size_t t = 0;
  size_t d = 0;
  bool holds_B = false;
  bool holds_C = false;       // numeric truth of (t+1)d >= 2n
  bool c_applicable = false;  // primitive and 1 <= t < n
  EqualityCase eq_case = EqualityCase::None;
  std::vector<std::vector<uint32_t>> omega;  // distinct translate supports
  std::optional<Theorem36Conclusions> conclusions;
};

template <class K>
Theorem36Conclusions theorem_3_6_conclusions(
    const ModVector<K>& v, const std::vector<std::vector<uint32_t>>& omega,
    size_t t, size_t d) {
  Theorem36Conclusions out;
  const PermGroup& g = *v.group;
  const size_t n = v.coeffs.size();

  // (a) every point in exactly two members; distinct members meet in one point
  std::vector<int> cover(n, 0);
  for (const auto& x : omega)
    for (uint32_t pt : x) ++cover[pt];
  out.a = std::all_of(cover.begin(), cover.end(), [](int c) { return c == 2; });
  for (size_t i = 0; i < omega.size() && out.a; ++i)
    for (size_t j = i + 1; j < omega.size() && out.a; ++j) {
      std::vector<uint32_t> inter;
      std::set_intersection(omega[i].begin(), omega[i].end(), omega[j].begin(),
                            omega[j].end(), std::back_inserter(inter));
      if (inter.size() != 1) out.a = false;
    }

  // (b) induced action on Omega 2-transitive; on its 2-subsets primitive
  {
    std::map<std::vector<uint32_t>, uint32_t> index;
    for (uint32_t i = 0; i < omega.size(); ++i) index[omega[i]] = i;
    std::vector<Permutation> gens;
    bool ok = true;
    for (const auto& gen : g.generators()) {
      std::vector<uint32_t> img(omega.size());
      for (uint32_t i = 0; i < omega.size(); ++i) {
        std::vector<uint32_t> moved;
        moved.reserve(omega[i].size());
        for (uint32_t pt : omega[i]) moved.push_back(gen.apply(pt));
        std::sort(moved.begin(), moved.end());
        auto it = index.find(moved);
        if (it == index.end()) {
          ok = false;
          break;
        }
        img[i] = it->second;
      }
      if (!ok) break;
      gens.push_back(Permutation::from_images(std::move(img)));
    }
    if (ok && omega.size() >= 2) {
      PermGroup induced(uint32_t(omega.size()), std::move(gens));
      out.b = is_doubly_transitive(induced) &&
              (omega.size() < 3 || is_primitive(pairs_action(induced)));
    }
  }

  // (c) d = |Omega| - 1 = t
  out.c = (d == omega.size() - 1) && (d == t);

  // (d) each member of Omega transitively permuted by its setwise stabilizer
  out.d = true;
  for (const auto& x : omega) {
    auto stab = setwise_stabilizer(g, x);
    std::set<uint32_t> reached;
    for (const auto& s : stab) reached.insert(s.apply(x[0]));
    if (reached.size() != x.size()) {
      out.d = false;
      break;
    }
  }

  // (e) all nonzero coefficients equal
  out.e = true;
  std::optional<K> val;
  for (const auto& c : v.coeffs) {
    if (c.is_zero()) continue;
    if (!val)
      val = c;
    else if (!(c == *val))
      out.e = false;
  }

  // (f) characteristic 2
  out.f = field_char(v.coeffs[0]) == 2;
  return out;
}

/// Computes t, d and n, asserts Theorem B (td >= n) and, for primitive
/// actions with 1 <= t < n, Theorem C ((t+1)d >= 2n); classifies equality.
template <class K>
EqualityReport verify_inequalities(const ModVector<K>& v) {
  if (v.is_zero()) throw std::invalid_argument("zero vector");
  if (!is_transitive(*v.group)) throw std::invalid_argument("group not transitive");
  EqualityReport rep;
  rep.n = v.coeffs.size();
  rep.t = size_t(v.t());
  rep.d = dim_generated(v);
  rep.holds_B = rep.t * rep.d >= rep.n;
  if (!rep.holds_B) throw invariant_violation("Theorem B violated: t*d < n");
  rep.holds_C = (rep.t + 1) * rep.d >= 2 * rep.n;
  rep.c_applicable =
      rep.n >= 2 && rep.t >= 1 && rep.t < rep.n && is_primitive(*v.group);
  if (rep.c_applicable && !rep.holds_C)
    throw invariant_violation("Theorem C violated: (t+1)d < 2n");

  rep.omega = detail::translate_supports(v);
  if (rep.t == 1)
    rep.eq_case = EqualityCase::TOne;
  else if (rep.t == rep.n - 1 && (rep.t + 1) * rep.d == 2 * rep.n)
    rep.eq_case = EqualityCase::TNMinusOne;
  else if (rep.t * rep.d == rep.n)
    rep.eq_case = EqualityCase::BlockEquality;
  else if ((rep.t + 1) * rep.d == 2 * rep.n && rep.t > 1 && rep.t < rep.n - 1)
    rep.eq_case = EqualityCase::Theorem36;
  else
    rep.eq_case = EqualityCase::None;

  if (rep.eq_case == EqualityCase::Theorem36 && rep.c_applicable)
    rep.conclusions = theorem_3_6_conclusions(v, rep.omega, rep.t, rep.d);
  return rep;
}

/// Theorem 3.6 equality analysis; requires a primitive group and
/// (t+1)d = 2n with 1 < t < n-1.
template <class K>
EqualityReport equality_analysis(const ModVector<K>& v) {
  EqualityReport rep = verify_inequalities(v);
  if (!is_primitive(*v.group))
    throw std::invalid_argument("not an equality instance: group imprimitive");
  if (!(rep.t > 1 && rep.t < rep.n - 1 && (rep.t + 1) * rep.d == 2 * rep.n))
    throw std::invalid_argument(
        "not an equality instance: outside Theorem 3.6 window");
  if (!rep.conclusions)
    rep.conclusions = theorem_3_6_conclusions(v, rep.omega, rep.t, rep.d);
  return rep;
}

/// Vector determined by a block, a unit homomorphism on its stabilizer and
/// the scalar 1 at the minimal point of the block; t(v)*d(v) = n is checked.
template <class K>
ModVector<K> block_vector(const PermGroup& g, const std::vector<uint32_t>& delta,
                          const std::function<K(const Permutation&)>& lambda,
                          const K& exemplar) {
  if (!is_block(g, delta)) throw std::invalid_argument("delta is not a block");
  auto stab = setwise_stabilizer(g, delta);
  for (const auto& h1 : stab) {
    if (lambda(h1).is_zero())
      throw std::invalid_argument("lambda takes a zero value");
    for (const auto& h2 : stab)
      if (!(lambda(h1.then(h2)) == lambda(h1) * lambda(h2)))
        throw std::invalid_argument("lambda is not a homomorphism");
  }
  for (uint32_t x : delta)
    for (const auto& h : stab)
      if (h.apply(x) == x && !lambda(h).is_one())
        throw std::invalid_argument("lambda nontrivial on a point stabilizer");

  const uint32_t x0 = *std::min_element(delta.begin(), delta.end());
  ModVector<K> v{&g, std::vector<K>(g.degree(), exemplar.zero())};
  for (const auto& h : stab) {
    uint32_t y = h.apply(x0);
    K val = lambda(h.inverse());
    if (!v.coeffs[y].is_zero() && !(v.coeffs[y] == val))
      throw std::invalid_argument("lambda is inconsistent on the block");
    v.coeffs[y] = val;
  }
  EqualityReport rep = verify_inequalities(v);
  if (rep.t * rep.d != rep.n)
    throw invariant_violation("block vector does not satisfy t*d = n");
  return v;
}

/// Lemma F witness: a nonzero vector of M supported on the first
/// n+1-dim(M) points, with t + d <= n + 1 asserted.
template <class K>
ModVector<K> lemma_f_vector(const SubmoduleBasis<K>& m) {
  if (m.dim() == 0) throw std::invalid_argument("zero submodule");
  const size_t n = m.rows[0].size();
  const size_t xsize = n + 1 - m.dim();
  const K zero = m.rows[0][0].zero();
  const K one = m.rows[0][0].one();
  std::vector<std::vector<K>> coord;
  for (size_t i = 0; i < xsize && i < n; ++i) {
    std::vector<K> e(n, zero);
    e[i] = one;
    coord.push_back(std::move(e));
  }
  auto inter = subspace_intersect(coord, m.rows, zero);
  if (inter.empty())
    throw invariant_violation("coordinate space misses the submodule");
  ModVector<K> v{m.group, inter.front()};
  size_t d = dim_generated(v);
  if (size_t(v.t()) + d > n + 1)
    throw invariant_violation("Lemma F bound t + d <= n + 1 violated");
  return v;
}

struct Lemma41Report {
  size_t t = 0;
  size_t d = 0;
  size_t index_gk = 0;   // |G:K|
  bool a = false;        // t = |K : H O K|
  bool b = false;        // t |G:K| = 2n
  bool c = false;        // d in {|G:K|, |G:K| - 1}
  bool d_char2 = false;  // char 2 => d = |G:K| - 1 (vacuous otherwise)
};

/// Lemma 4.1: v = the K-orbit sum of x.  Preconditions checked against the
/// enumerated subgroup: (1) |H : H O K| = 2, (2) K not contained in H,
/// (3) K intransitive.
template <class K>
std::pair<ModVector<K>, Lemma41Report> lemma_4_1_vector(
    const PermGroup& g, uint32_t x, const std::vector<Permutation>& k_elems,
    const K& exemplar) {
  if (!is_primitive(g)) throw std::invalid_argument("group not primitive");
  if (k_elems.empty()) throw std::invalid_argument("empty subgroup");
  auto h_elems = point_stabilizer(g, x);
  std::set<std::vector<uint32_t>> h_set;
  for (const auto& e : h_elems) h_set.insert(e.images());
  size_t hk = 0;
  bool k_in_h = true;
  for (const auto& e : k_elems) {
    if (h_set.count(e.images()))
      ++hk;
    else
      k_in_h = false;
  }
  if (hk == 0 || h_elems.size() != 2 * hk)
    throw std::invalid_argument("condition 1 fails: |H : H O K| != 2");
  if (k_in_h) throw std::invalid_argument("condition 2 fails: K contained in H");
  std::set<uint32_t> orb0;
  for (const auto& e : k_elems) orb0.insert(e.apply(0));
  if (orb0.size() == g.degree())
    throw std::invalid_argument("condition 3 fails: K transitive");

  std::set<uint32_t> orb;
  for (const auto& e : k_elems) orb.insert(e.apply(x));
  ModVector<K> v{&g, std::vector<K>(g.degree(), exemplar.zero())};
  for (uint32_t pt : orb) v.coeffs[pt] = exemplar.one();

  Lemma41Report rep;
  rep.t = orb.size();
  rep.d = dim_generated(v);
  rep.index_gk = g.order() / k_elems.size();
  rep.a = rep.t == k_elems.size() / hk;
  rep.b = rep.t * rep.index_gk == 2 * g.degree();
  rep.c = rep.d == rep.index_gk || rep.d + 1 == rep.index_gk;
  rep.d_char2 = field_char(exemplar) != 2 || rep.d + 1 == rep.index_gk;
  if (!rep.a || !rep.b || !rep.c || !rep.d_char2)
    throw invariant_violation("Lemma 4.1 conclusion failed");
  return {std::move(v), rep};
}

struct MinSupportResult {
  size_t t;
  std::vector<FF> witness;
};

/// Exhaustive minimum of t over the nonzero vectors of M (finite coefficient
/// field); the witness is the first minimizer in enumeration order.
MinSupportResult min_support(const SubmoduleBasis<FF>& m,
                             uint64_t cap = uint64_t(1) << 24);

struct RudioResult {
  bool hypotheses_met = false;  // primitive, X nonempty proper, u != w
  std::optional<std::vector<uint32_t>> separating;    // exactly one of {u,w}
  std::optional<std::vector<uint32_t>> containing_u;  // u but not w
};

/// Search all translates of X for one containing exactly one of {u,w} and one
/// containing u but not w.  For primitive inputs absence of either falsifies
/// Rudio's lemma; imprimitive inputs are allowed but only flagged.
RudioResult rudio_witness(const PermGroup& g, const std::vector<uint32_t>& xs,
                          uint32_t u, uint32_t w);

/// Affine group {x -> ax + b : a in A, b in F} acting on F, together with
/// v = sum_x x*s_x; checks t = q-1 and d = 2 (q > 2).  The group is heap
/// allocated so the vector's back-pointer survives moves.
struct AffineConstruction {
  std::shared_ptr<PermGroup> group;
  ModVector<FF> vector;
  bool primitive;
  size_t t;
  size_t d;
};

AffineConstruction affine_construction(const FieldPtr& field, const FF& a_gen);

}  // namespace permod

#endif
