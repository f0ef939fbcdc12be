#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "nagata/prime_field.hpp"

namespace nagata {

/// Exact rational, always kept in lowest terms with a positive denominator.
using Rational = mpq_class;

/// Parses "num/den" or "num" (optional sign). Throws std::invalid_argument on
/// malformed text or a zero denominator.
Rational parse_rational(std::string_view text);
/// Nearest double when numerator and denominator are below 2^53 (the usual
/// case); otherwise GMP's truncating conversion, off by at most one ulp.
double to_double(const Rational& x);

/// Renders as "num/den", or just "num" when the denominator is 1.
std::string format_rational(const Rational& x);

/// Least integer >= x.
mpz_class ceil(const Rational& x);

namespace exactla {

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(Fp x) { return x.is_zero(); }

/// Which exact arithmetic a computation runs over.
struct ScalarDomain {
  enum class Kind { prime_field, rational };

  Kind kind = Kind::prime_field;
  u64 prime = kMersenne61;
  /// Rational elimination refuses matrices wider than this.
  std::size_t rational_column_cap = 300;

  static ScalarDomain field(u64 p = kMersenne61) { return {Kind::prime_field, p, 300}; }
  static ScalarDomain rational(std::size_t cap = 300) { return {Kind::rational, kMersenne61, cap}; }

  bool is_rational() const noexcept { return kind == Kind::rational; }
  std::string name() const;
};

}  // namespace exactla
}  // namespace nagata
