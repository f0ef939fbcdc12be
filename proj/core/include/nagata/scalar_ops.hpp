#pragma once

#include <cstdint>

#include "nagata/prime_field.hpp"
#include "nagata/scalar.hpp"

namespace nagata::exactla {

/// Construction of constants in a scalar type; Fp needs its modulus.
template <class S>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
  explicit ScalarOps(const ScalarDomain& = ScalarDomain::rational()) {}
  Rational zero() const { return 0; }
  Rational one() const { return 1; }
  Rational from_int(std::int64_t v) const { return Rational(static_cast<long>(v)); }
  Rational from_rational(const Rational& x) const { return x; }
};

template <>
struct ScalarOps<Fp> {
  explicit ScalarOps(const ScalarDomain& d = ScalarDomain::field()) : field(d.prime) {}
  explicit ScalarOps(const PrimeField& f) : field(f) {}
  Fp zero() const { return {0, field.modulus()}; }
  Fp one() const { return {1, field.modulus()}; }
  Fp from_int(std::int64_t v) const { return make_fp(field, v); }
  Fp from_rational(const Rational& x) const { return rational_to_field(x, field); }

  PrimeField field;
};

}  // namespace nagata::exactla
