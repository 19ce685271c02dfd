#ifndef PERMOD_EXACT_HPP
#define PERMOD_EXACT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace permod {

/// Arbitrary-precision rational, always reduced with positive denominator.
/// Thin value wrapper over GMP exposing the same field interface as FF.
class Rational {
public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(long n, long d) : v_(n, d) { v_.canonicalize(); }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
  static Rational from_string(const std::string& s);

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational inverse() const;
  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }

  Rational zero() const { return Rational(); }
  Rational one() const { return Rational(1); }

  const mpq_class& value() const { return v_; }
  std::string str() const { return v_.get_str(); }

private:
  mpq_class v_;
};

class CycloField;
using CycloPtr = std::shared_ptr<const CycloField>;

/// The cyclotomic field Q(zeta_n): rationals modulo Phi_n(X).  For prime
/// conductor p this is the length-(p-1) representation with
/// Phi_p = 1 + X + ... + X^(p-1).
class CycloField : public std::enable_shared_from_this<CycloField> {
public:
  static CycloPtr make(uint32_t n);

  uint32_t conductor() const { return n_; }
  uint32_t degree() const { return uint32_t(phi_.size() - 1); }
  /// Phi_n coefficients, ascending degree (integral, monic).
  const std::vector<mpz_class>& modulus() const { return phi_; }
  /// X^e reduced mod Phi_n, for 0 <= e < n.
  const std::vector<Rational>& power_rep(uint32_t e) const { return powers_[e]; }

private:
  explicit CycloField(uint32_t n);
  uint32_t n_;
  std::vector<mpz_class> phi_;
  std::vector<std::vector<Rational>> powers_;
};

/// Element of Q(zeta_n), reduced mod Phi_n; zero test is coefficient-wise.
class Cyclotomic {
public:
  Cyclotomic() : field_(nullptr) {}
  Cyclotomic(const CycloField* field, std::vector<Rational> rep);

  const CycloField& field() const { return *field_; }
  const std::vector<Rational>& rep() const { return rep_; }

  bool is_zero() const;
  bool is_one() const;

  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic operator-() const;
  Cyclotomic inverse() const;
  bool operator==(const Cyclotomic& o) const { return rep_ == o.rep_; }
  bool operator!=(const Cyclotomic& o) const { return rep_ != o.rep_; }

  Cyclotomic zero() const;
  Cyclotomic one() const;

  /// Galois conjugate zeta -> zeta^a, gcd(a, n) = 1.
  Cyclotomic conjugate(uint32_t a) const;

  std::string str() const;

private:
  const CycloField* field_;
  std::vector<Rational> rep_;
};

/// zeta^(e mod n) in canonical reduced form.
Cyclotomic cyclo_from_power(const CycloPtr& field, int64_t e);
Cyclotomic cyclo_scalar(const CycloPtr& field, const Rational& r);

inline uint32_t field_char(const Rational&) { return 0; }
inline uint32_t field_char(const Cyclotomic&) { return 0; }

}  // namespace permod

#endif
