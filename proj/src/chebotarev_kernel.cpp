#include <gmpxx.h>
#include <omp.h>

#include <cstdlib>
#include <numeric>

#include "permod/detail/subsets.hpp"
#include "permod/uncertainty.hpp"

// Exact nonzero test for minors of the p x p root-of-unity matrix, tuned for
// the sweep: arithmetic in Z[zeta_p] represented mod X^p - 1 (normalized so
// the top coefficient is 0; an element is zero iff the normalized vector is),
// division-free row elimination with per-row content stripping.  An int64
// path with overflow prediction handles nearly everything; rare escalations
// rerun the minor with GMP integers.  The serial reference in uncertainty.cpp
// goes through the generic Q(zeta_p) elimination instead.

namespace permod {

namespace {

template <class Z>
struct ZTraits;

template <>
struct ZTraits<int64_t> {
  static int64_t abs(int64_t v) { return v < 0 ? -v : v; }
  static int64_t gcd(int64_t a, int64_t b) { return std::gcd(a, b); }
};

template <>
struct ZTraits<mpz_class> {
  static mpz_class abs(const mpz_class& v) { return ::abs(v); }
  static mpz_class gcd(const mpz_class& a, const mpz_class& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
  }
};

// subtract c from every slot so the top coefficient vanishes
template <class Z>
void normalize(Z* e, uint32_t p) {
  if (e[p - 1] == 0) return;
  Z c = e[p - 1];
  for (uint32_t i = 0; i < p; ++i) e[i] -= c;
}

template <class Z>
bool elem_zero(const Z* e, uint32_t p) {
  for (uint32_t i = 0; i + 1 < p; ++i)
    if (e[i] != 0) return false;
  return true;
}

// dst = a*b mod X^p - 1, then normalized; int64 accumulates in 128 bits.
// Inputs up to 2^61 keep p <= 19 convolutions inside __int128; outputs are
// clamped to 2^59 so the follow-up normalize/subtract stays in range.
inline bool cyc_mul(int64_t* dst, const int64_t* a, const int64_t* b, uint32_t p) {
  constexpr int64_t kInLimit = int64_t(1) << 61;
  constexpr int64_t kOutLimit = int64_t(1) << 59;
  for (uint32_t i = 0; i < p; ++i) {
    int64_t aa = a[i] < 0 ? -a[i] : a[i];
    int64_t bb = b[i] < 0 ? -b[i] : b[i];
    if (aa > kInLimit || bb > kInLimit) return false;
  }
  for (uint32_t k = 0; k < p; ++k) {
    __int128 acc = 0;
    for (uint32_t i = 0; i < p; ++i) {
      uint32_t j = k >= i ? k - i : k + p - i;
      acc += (__int128)a[i] * b[j];
    }
    if (acc > kOutLimit || acc < -kOutLimit) return false;
    dst[k] = int64_t(acc);
  }
  normalize(dst, p);
  return true;
}

inline bool cyc_mul(mpz_class* dst, const mpz_class* a, const mpz_class* b,
                    uint32_t p) {
  for (uint32_t k = 0; k < p; ++k) {
    mpz_class acc = 0;
    for (uint32_t i = 0; i < p; ++i) {
      uint32_t j = k >= i ? k - i : k + p - i;
      acc += a[i] * b[j];
    }
    dst[k] = acc;
  }
  normalize(dst, p);
  return true;
}

// row content stripping: divide all coefficients by their common gcd
template <class Z>
void strip_content(Z* row, size_t len) {
  Z g = 0;
  for (size_t i = 0; i < len; ++i) {
    g = ZTraits<Z>::gcd(g, ZTraits<Z>::abs(row[i]));
    if (g == 1) return;
  }
  if (g == 0 || g == 1) return;
  for (size_t i = 0; i < len; ++i) row[i] /= g;
}

template <class Z>
bool minor_nonzero_impl(uint32_t p, const std::vector<uint32_t>& rows,
                        const std::vector<uint32_t>& cols, bool& overflow) {
  overflow = false;
  const size_t k = rows.size();
  // matrix entries: k*k elements, each p coefficients
  std::vector<Z> m(k * k * p, Z(0));
  auto elem = [&](size_t i, size_t j) { return &m[(i * k + j) * p]; };
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      Z* e = elem(i, j);
      e[uint64_t(rows[i]) * cols[j] % p] = 1;
      normalize(e, p);
    }

  std::vector<Z> t1(p), t2(p);
  for (size_t step = 0; step < k; ++step) {
    size_t pr = step;
    while (pr < k && elem_zero(elem(pr, step), p)) ++pr;
    if (pr == k) return false;  // zero column: singular
    if (pr != step)
      for (size_t j = 0; j < k; ++j)
        for (uint32_t c = 0; c < p; ++c) std::swap(elem(pr, j)[c], elem(step, j)[c]);
    const Z* pivot = elem(step, step);
    for (size_t i = step + 1; i < k; ++i) {
      Z* mult = elem(i, step);
      if (elem_zero(mult, p)) continue;
      std::vector<Z> mcopy(mult, mult + p);
      for (size_t j = step; j < k; ++j) {
        if (!cyc_mul(t1.data(), pivot, elem(i, j), p) ||
            !cyc_mul(t2.data(), mcopy.data(), elem(step, j), p)) {
          overflow = true;
          return false;
        }
        Z* dst = elem(i, j);
        for (uint32_t c = 0; c < p; ++c) dst[c] = t1[c] - t2[c];
        normalize(dst, p);
      }
      strip_content(&m[(i * k) * p], k * p);
    }
  }
  return true;
}

}  // namespace

bool chebotarev_minor_nonzero(uint32_t p, const std::vector<uint32_t>& rows,
                              const std::vector<uint32_t>& cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("minor not square");
  bool overflow = false;
  bool nz = minor_nonzero_impl<int64_t>(p, rows, cols, overflow);
  if (!overflow) return nz;
  nz = minor_nonzero_impl<mpz_class>(p, rows, cols, overflow);
  return nz;
}

ChebotarevReport chebotarev_verify(uint32_t p, std::optional<uint32_t> k_max,
                                   int jobs) {
  if (!is_prime_u64(p)) throw std::invalid_argument("p must be prime");
  const uint32_t kmax = k_max.value_or(p);
  if (jobs <= 0) jobs = omp_get_max_threads();

  ChebotarevReport rep;
  rep.p = p;
  rep.max_size = kmax;
  for (uint32_t k = 1; k <= kmax && k <= p; ++k) {
    auto rowsets = detail::all_subsets(p, k);
    std::vector<std::vector<MinorWitness>> fails(rowsets.size());
    std::vector<uint64_t> counts(rowsets.size(), 0);
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
    for (long ri = 0; ri < long(rowsets.size()); ++ri) {
      std::vector<uint32_t> c(k);
      for (uint32_t i = 0; i < k; ++i) c[i] = i;
      do {
        ++counts[ri];
        if (!chebotarev_minor_nonzero(p, rowsets[ri], c))
          fails[ri].push_back(MinorWitness{k, rowsets[ri], c});
      } while (detail::next_subset(c, p));
    }
    for (size_t ri = 0; ri < rowsets.size(); ++ri) {
      rep.minors_checked += counts[ri];
      for (auto& f : fails[ri]) rep.failures.push_back(std::move(f));
    }
  }
  if (!rep.failures.empty())
    throw invariant_violation("Chebotarev minor with zero determinant found");
  return rep;
}

}  // namespace permod
