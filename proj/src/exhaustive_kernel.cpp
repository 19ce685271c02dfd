#include <omp.h>

#include <atomic>

#include "permod/uncertainty.hpp"

// Theorem 6.4 sweep: every nonzero v in GF(p)[Z_p] must satisfy t + d > p.
// In characteristic p this reduces to t(f) > multiplicity of the root 1, so
// the kernel works on raw digit vectors mod p; the serial reference goes
// through criterion_6_3 on Poly values.

namespace permod {

namespace {

// multiplicity of the root 1 via repeated synthetic division by (X - 1)
uint32_t root_one_multiplicity(uint32_t* c, int deg, uint32_t p) {
  uint32_t mu = 0;
  while (deg >= 1) {
    uint64_t at1 = 0;
    for (int i = 0; i <= deg; ++i) at1 += c[i];
    if (at1 % p != 0) break;
    // quotient of c by (X - 1): b_{d-1} = a_d, b_{i-1} = a_i + b_i
    for (int i = deg - 1; i >= 1; --i) c[i] = (c[i] + c[i + 1]) % p;
    for (int i = 0; i < deg; ++i) c[i] = c[i + 1];
    --deg;
    ++mu;
  }
  return mu;
}

}  // namespace

Exhaustive64Report exhaustive_6_4(uint32_t p, int jobs) {
  if (!is_prime_u64(p)) throw std::invalid_argument("p must be prime");
  if (jobs <= 0) jobs = omp_get_max_threads();
  uint64_t total = 1;
  for (uint32_t i = 0; i < p; ++i) total *= p;

  uint64_t violations = 0;
  std::atomic<uint64_t> first_bad{UINT64_MAX};

#pragma omp parallel num_threads(jobs) reduction(+ : violations)
  {
    std::vector<uint32_t> digits(p), work(p);
#pragma omp for schedule(static)
    for (long long idx = 1; idx < (long long)total; ++idx) {
      uint64_t rest = uint64_t(idx);
      int deg = -1;
      uint32_t t = 0;
      for (uint32_t i = 0; i < p; ++i) {
        digits[i] = uint32_t(rest % p);
        rest /= p;
        if (digits[i]) {
          deg = int(i);
          ++t;
        }
      }
      for (uint32_t i = 0; i < p; ++i) work[i] = digits[i];
      uint32_t mu = root_one_multiplicity(work.data(), deg, p);
      if (t <= mu) {
        ++violations;
        uint64_t prev = first_bad.load();
        while (uint64_t(idx) < prev &&
               !first_bad.compare_exchange_weak(prev, uint64_t(idx))) {
        }
      }
    }
  }

  Exhaustive64Report rep;
  rep.p = p;
  rep.vectors_checked = total - 1;
  rep.violations = violations;
  if (first_bad.load() != UINT64_MAX) {
    std::vector<uint32_t> lit(p);
    uint64_t rest = first_bad.load();
    for (uint32_t i = 0; i < p; ++i) {
      lit[i] = uint32_t(rest % p);
      rest /= p;
    }
    rep.first_violation = lit;
  }
  if (rep.violations)
    throw invariant_violation("Theorem 6.4 violated in characteristic p");
  return rep;
}

}  // namespace permod
