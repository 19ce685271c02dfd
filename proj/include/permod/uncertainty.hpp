#ifndef PERMOD_UNCERTAINTY_HPP
#define PERMOD_UNCERTAINTY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "permod/exact.hpp"
#include "permod/linalg.hpp"
#include "permod/permod.hpp"
#include "permod/poly.hpp"

namespace permod {

/// Theorem 6.3 criterion report for v = f(z) in F[Z_p].
struct Criterion63Report {
  uint32_t p = 0;
  Poly<FF> f;
  Poly<FF> h;  // gcd(X^p - 1, f); (X-1)^mu in characteristic p
  int t_f = 0;
  int deg_h = 0;
  bool fails = false;          // t(f) <= deg h, i.e. t(v) + d(v) <= p
  int implied_t_plus_d = 0;    // t(f) + (p - deg h)
  size_t d_check = 0;          // d(v) recomputed through the module closure
};

/// Evaluates the criterion and, when cross_check is set, recomputes d(v) on
/// the cyclic group of order p and asserts the equivalence
/// fails <=> t(v) + d(v) <= p along with d(v) = p - deg h.
Criterion63Report criterion_6_3(const Poly<FF>& f, uint32_t p,
                                bool cross_check = true);

enum class SearchMode { DivisorsOnly, WithMultiples };

/// Which divisors of X^p - 1 the missing-term scan walks.  The published
/// table corresponds to the irreducible factors; the full subset-product
/// lattice turns up strictly more hits (already at p = 11 over GF(5), where
/// (X-1)h is missing its X^2 term).
enum class DivisorScan { IrreducibleFactors, AllDivisors };

struct TableEntry {
  uint32_t p = 0;
  uint64_t q = 0;
  enum class Kind { MissingTermDivisor, Multiple } kind = Kind::MissingTermDivisor;
  std::optional<Poly<FF>> witness;  // h for divisors, f = g*h for multiples
};

/// Deterministic scan for a counterexample polynomial over GF(q):
/// divisors of X^p - 1 in enumeration order, then (with-multiples mode)
/// products g*h with deg g < p - deg h, g monic in (degree, coefficient)
/// order.
std::optional<TableEntry> search_counterexample(
    uint32_t p, const FieldPtr& field, SearchMode mode,
    DivisorScan scan = DivisorScan::IrreducibleFactors);

struct TableRow {
  uint32_t p;
  std::vector<TableEntry> fields;  // minimal q ascending
};

/// Minimal-field table: for each p, every prime power q <= q_max (powers of p
/// skipped) admitting a missing-term divisor counterexample such that no
/// proper subfield admits one.
std::vector<TableRow> minimal_table(const std::vector<uint32_t>& primes,
                                    uint64_t q_max,
                                    SearchMode mode = SearchMode::DivisorsOnly,
                                    DivisorScan scan = DivisorScan::IrreducibleFactors);

struct MinorWitness {
  uint32_t size;
  std::vector<uint32_t> rows;
  std::vector<uint32_t> cols;
};

struct ChebotarevReport {
  uint32_t p = 0;
  uint32_t max_size = 0;
  uint64_t minors_checked = 0;
  std::vector<MinorWitness> failures;  // empty unless Chebotarev is falsified
};

/// Checks every square submatrix of [zeta^(ij)] (0 <= i,j < p) of size up to
/// k_max for nonzero determinant, by exact elimination over Z[zeta_p].
/// Column subsets run in combinadic order inside an OpenMP loop over row
/// subsets; the aggregate is deterministic.
ChebotarevReport chebotarev_verify(uint32_t p,
                                   std::optional<uint32_t> k_max = std::nullopt,
                                   int jobs = 0);

/// Serial reference: the same sweep through the generic Q(zeta_p) elimination.
ChebotarevReport chebotarev_verify_serial(uint32_t p,
                                          std::optional<uint32_t> k_max = std::nullopt);

/// Exact nonzero test for one minor, fast kernel (exposed for tests).
bool chebotarev_minor_nonzero(uint32_t p, const std::vector<uint32_t>& rows,
                              const std::vector<uint32_t>& cols);

/// Exact determinant of one minor over Q(zeta_p) via the generic kernel.
Cyclotomic chebotarev_minor_det(const CycloPtr& field,
                                const std::vector<uint32_t>& rows,
                                const std::vector<uint32_t>& cols);

struct RefutationWitness {
  uint32_t p = 0;
  uint64_t q = 0;
  uint32_t ext_degree = 0;  // degree of GF(q^m) over the prime field
  std::vector<uint32_t> rows;
  std::vector<uint32_t> cols;
  std::optional<Matrix<FF>> submatrix;
  bool det_zero = false;
};

/// Builds the singular [zeta^(xy)] submatrix over GF(q^m) certified by a
/// failing criterion instance: rows = supp f, columns = t(f) exponents y with
/// f(zeta^y) = 0.
RefutationWitness chebotarev_refute_mod_q(uint32_t p, const FieldPtr& field,
                                          const Poly<FF>& f);

/// Number of characters of the regular cyclic action with nonzero character
/// sum on v, in exact Q(zeta_n) arithmetic; equals d(v).
size_t fourier_support(const ModVector<Rational>& v);

struct Exhaustive64Report {
  uint32_t p = 0;
  uint64_t vectors_checked = 0;
  uint64_t violations = 0;
  std::optional<std::vector<uint32_t>> first_violation;
};

/// Sweeps every nonzero v in GF(p)[Z_p] and asserts t(v) + d(v) > p via the
/// characteristic-p criterion.  OpenMP kernel; deterministic aggregate.
Exhaustive64Report exhaustive_6_4(uint32_t p, int jobs = 0);

/// Serial reference through criterion_6_3 on each vector.
Exhaustive64Report exhaustive_6_4_serial(uint32_t p);

uint64_t binomial(uint64_t n, uint64_t k);

}  // namespace permod

#endif
