#pragma once

#include <gmpxx.h>

#include <string>

namespace subshift {

/// An exact coefficient. Values are kept normalized by the ring that made
/// them: integers have denominator 1, residues lie in [0, n).
class RingValue {
 public:
  RingValue() = default;
  explicit RingValue(mpq_class v) : v_(std::move(v)) {}

  const mpq_class& value() const noexcept { return v_; }
  bool is_zero() const { return sgn(v_) == 0; }
  std::string to_string() const { return v_.get_str(); }

  friend bool operator==(const RingValue& a, const RingValue& b) { return a.v_ == b.v_; }
  friend bool operator<(const RingValue& a, const RingValue& b) { return a.v_ < b.v_; }

 private:
  mpq_class v_;
};

/// The base ring: Z, Q or Z/nZ with n >= 2.
class Ring {
 public:
  enum class Kind { Integer, Rational, IntegerMod };

  static Ring integer() { return Ring(Kind::Integer, 0); }
  static Ring rational() { return Ring(Kind::Rational, 0); }
  static Ring integer_mod(const mpz_class& n);

  Kind kind() const noexcept { return kind_; }
  const mpz_class& modulus() const noexcept { return modulus_; }
  /// True for Z, Q and Z/pZ with p prime.
  bool is_domain() const;
  /// "z", "q" or "zmod:N".
  std::string name() const;

  RingValue zero() const { return RingValue(); }
  RingValue one() const { return from_integer(1); }
  RingValue from_integer(const mpz_class& k) const;
  /// num/den as an element of the ring; throws BadScalarForRing when den is
  /// not invertible (or, over Z, when the fraction is not integral).
  RingValue from_fraction(const mpz_class& num, const mpz_class& den) const;

  RingValue add(const RingValue& a, const RingValue& b) const;
  RingValue sub(const RingValue& a, const RingValue& b) const;
  RingValue mul(const RingValue& a, const RingValue& b) const;
  RingValue neg(const RingValue& a) const;

  friend bool operator==(const Ring& a, const Ring& b) { return a.kind_ == b.kind_ && a.modulus_ == b.modulus_; }

 private:
  Ring(Kind kind, const mpz_class& modulus) : kind_(kind), modulus_(modulus) {}
  RingValue normalize(mpq_class v) const;

  Kind kind_;
  mpz_class modulus_;
};

}  // namespace subshift
