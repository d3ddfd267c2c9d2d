#include "subshift/ring.hpp"

#include "subshift/error.hpp"

namespace subshift {

Ring Ring::integer_mod(const mpz_class& n) {
  if (n < 2) throw Error(ErrorCode::BadScalarForRing, "modulus must be at least 2");
  return Ring(Kind::IntegerMod, n);
}

bool Ring::is_domain() const {
  if (kind_ != Kind::IntegerMod) return true;
  return mpz_probab_prime_p(modulus_.get_mpz_t(), 40) != 0;
}

std::string Ring::name() const {
  switch (kind_) {
    case Kind::Integer: return "z";
    case Kind::Rational: return "q";
    case Kind::IntegerMod: return "zmod:" + modulus_.get_str();
  }
  return "?";
}

RingValue Ring::normalize(mpq_class v) const {
  v.canonicalize();
  if (kind_ == Kind::IntegerMod) {
    mpz_class r = v.get_num() % modulus_;
    if (r < 0) r += modulus_;
    return RingValue(mpq_class(r));
  }
  return RingValue(std::move(v));
}

RingValue Ring::from_integer(const mpz_class& k) const { return normalize(mpq_class(k)); }

RingValue Ring::from_fraction(const mpz_class& num, const mpz_class& den) const {
  if (den == 0) throw Error(ErrorCode::BadScalarForRing, "zero denominator");
  switch (kind_) {
    case Kind::Rational: return normalize(mpq_class(num, den));
    case Kind::Integer: {
      if (num % den != 0)
        throw Error(ErrorCode::BadScalarForRing, num.get_str() + "/" + den.get_str() + " is not an integer");
      return normalize(mpq_class(num / den));
    }
    case Kind::IntegerMod: {
      mpz_class d = den % modulus_;
      if (d < 0) d += modulus_;
      mpz_class inv;
      if (mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), modulus_.get_mpz_t()) == 0)
        throw Error(ErrorCode::BadScalarForRing, den.get_str() + " is not invertible mod " + modulus_.get_str());
      return normalize(mpq_class(mpz_class(num * inv)));
    }
  }
  throw Error(ErrorCode::BadScalarForRing, "unknown ring");
}

RingValue Ring::add(const RingValue& a, const RingValue& b) const { return normalize(a.value() + b.value()); }
RingValue Ring::sub(const RingValue& a, const RingValue& b) const { return normalize(a.value() - b.value()); }
RingValue Ring::mul(const RingValue& a, const RingValue& b) const { return normalize(a.value() * b.value()); }
RingValue Ring::neg(const RingValue& a) const { return normalize(-a.value()); }

}  // namespace subshift
