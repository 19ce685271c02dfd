#ifndef PERMOD_FF_HPP
#define PERMOD_FF_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace permod {

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

/// Field orders can reach 13^18 in the minimal-table sweep, past 2^64.
using u128 = unsigned __int128;

/// Element of GF(p^k), stored as its coefficient vector of length k over Z_p
/// (ascending degree).  Values are cheap to copy and safe to share across
/// threads; the owning field must outlive them.
class FF {
public:
  FF() : field_(nullptr) {}
  FF(const FiniteField* field, std::vector<uint32_t> rep);

  const FiniteField& field() const { return *field_; }
  const FiniteField* field_ptr() const { return field_; }
  const std::vector<uint32_t>& rep() const { return rep_; }

  bool is_zero() const;
  bool is_one() const;

  FF operator+(const FF& o) const;
  FF operator-(const FF& o) const;
  FF operator*(const FF& o) const;
  FF operator-() const;
  FF inverse() const;
  FF pow(u128 e) const;
  bool operator==(const FF& o) const { return rep_ == o.rep_; }
  bool operator!=(const FF& o) const { return rep_ != o.rep_; }

  // Same-field constants, so generic code can mint 0/1 from any exemplar.
  FF zero() const;
  FF one() const;

  /// Position in the canonical enumeration (lexicographic on rep, index 0
  /// compared first).
  uint64_t index() const;
  /// Rep digits compare lexicographically, index 0 first.
  bool rep_less(const FF& o) const { return rep_ < o.rep_; }

  std::string str() const;

private:
  const FiniteField* field_;
  std::vector<uint32_t> rep_;
};

/// GF(p^k) with an explicit monic irreducible modulus of degree k over GF(p).
/// Immutable after construction.
class FiniteField {
public:
  uint32_t p() const { return p_; }
  uint32_t k() const { return k_; }
  u128 order() const { return q_; }
  /// Modulus coefficients, ascending degree, length k+1, monic.
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  FF zero() const;
  FF one() const;
  /// Scalar a·1 from the prime subfield.
  FF scalar(uint64_t a) const;
  FF from_rep(std::vector<uint32_t> rep) const;
  /// i-th element in canonical enumeration order.
  FF from_index(uint64_t i) const;

  std::string spec() const;  // "p" or "p^k"

  friend FieldPtr make_field(uint64_t p, uint32_t k,
                             std::optional<std::vector<uint32_t>> modulus);
  friend class FF;

private:
  FiniteField(uint32_t p, uint32_t k, std::vector<uint32_t> modulus);

  std::vector<uint32_t> mul_reps(const std::vector<uint32_t>& a,
                                 const std::vector<uint32_t>& b) const;

  uint32_t p_;
  uint32_t k_;
  u128 q_;
  std::vector<uint32_t> modulus_;
};

/// Raised when a statement the underlying mathematics guarantees fails to
/// hold; it indicates a bug (or a falsified theorem) rather than bad input.
class invariant_violation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Construct GF(p^k).  Without an explicit modulus the lexicographically
/// smallest monic irreducible of degree k over GF(p) is selected
/// (coefficients compared ascending-degree, low index first).
FieldPtr make_field(uint64_t p, uint32_t k = 1,
                    std::optional<std::vector<uint32_t>> modulus = std::nullopt);

/// Degree cap for make_field; large enough for every extension the minimal
/// table needs (GF(2^30) for the p=11, q=8 scan).
inline constexpr uint32_t kMaxExtensionDegree = 32;

bool is_prime_u64(uint64_t n);

/// Monic polynomial over GF(p) (coefficient vector, ascending degree).
bool is_irreducible_mod_p(const std::vector<uint32_t>& f, uint32_t p);

/// First element in the field's canonical enumeration order whose
/// multiplicative order is exactly n.  Requires n | p^k - 1.
FF find_element_of_order(const FiniteField& field, uint64_t n);

uint64_t multiplicative_order_mod(u128 q, uint64_t p);

/// Embedding of GF(p^j) into GF(p^k) with j | k, determined by the
/// lexicographically smallest root of the subfield modulus in the big field.
class Embedding {
public:
  Embedding(FieldPtr sub, FieldPtr sup);

  const FiniteField& sub() const { return *sub_; }
  const FiniteField& sup() const { return *sup_; }

  FF up(const FF& a) const;
  /// Inverse image, if b lies in the embedded copy of the subfield.
  std::optional<FF> down(const FF& b) const;

private:
  FieldPtr sub_;
  FieldPtr sup_;
  std::vector<FF> image_;  // image of every subfield element, by index
};

}  // namespace permod

#endif
