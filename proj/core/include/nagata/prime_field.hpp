#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>

#include <gmpxx.h>

namespace nagata::exactla {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

/// 2^61 - 1, the default modulus for generic-rank computations.
inline constexpr u64 kMersenne61 = (u64{1} << 61) - 1;

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime_u64(u64 n);

/// Raised when a rational cannot be reduced modulo the chosen prime
/// (denominator divisible by p). Callers should re-draw the prime.
class ReductionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A prime field Z/pZ with p < 2^62. Elements are represented by `Fp`, which
/// carries its modulus so that generic elimination code can stay value-based.
class PrimeField {
 public:
  explicit PrimeField(u64 modulus = kMersenne61);

  u64 modulus() const noexcept { return p_; }
  bool operator==(const PrimeField&) const = default;

 private:
  u64 p_;
};

class Fp {
 public:
  Fp() = default;
  Fp(u64 value, u64 modulus) noexcept : v_(value), p_(modulus) {}

  u64 value() const noexcept { return v_; }
  u64 modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return v_ == 0; }

  friend Fp operator+(Fp a, Fp b) noexcept {
    u64 s = a.v_ + b.v_;
    if (s >= a.p_) s -= a.p_;
    return {s, a.p_};
  }
  friend Fp operator-(Fp a, Fp b) noexcept {
    return {a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_};
  }
  friend Fp operator-(Fp a) noexcept { return {a.v_ == 0 ? 0 : a.p_ - a.v_, a.p_}; }
  friend Fp operator*(Fp a, Fp b) noexcept { return {mul_mod(a.v_, b.v_, a.p_), a.p_}; }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp& operator+=(Fp o) noexcept { return *this = *this + o; }
  Fp& operator-=(Fp o) noexcept { return *this = *this - o; }
  Fp& operator*=(Fp o) noexcept { return *this = *this * o; }
  Fp& operator/=(Fp o) { return *this = *this / o; }
  friend bool operator==(Fp a, Fp b) noexcept { return a.v_ == b.v_ && a.p_ == b.p_; }

  /// Throws std::domain_error on zero.
  Fp inverse() const;

  static u64 mul_mod(u64 a, u64 b, u64 p) noexcept {
    const u128 prod = static_cast<u128>(a) * b;
    if (p == kMersenne61) {
      u64 r = static_cast<u64>(prod & kMersenne61) + static_cast<u64>(prod >> 61);
      r = (r & kMersenne61) + (r >> 61);
      return r >= p ? r - p : r;
    }
    return static_cast<u64>(prod % p);
  }

  friend std::ostream& operator<<(std::ostream& os, Fp x) { return os << x.v_; }

 private:
  u64 v_ = 0;
  u64 p_ = kMersenne61;
};

inline Fp make_fp(const PrimeField& f, std::int64_t value) {
  const auto p = static_cast<std::int64_t>(f.modulus());
  std::int64_t r = value % p;
  if (r < 0) r += p;
  return {static_cast<u64>(r), f.modulus()};
}

/// Reduce an arbitrary-precision integer into the field.
Fp integer_to_field(const mpz_class& x, const PrimeField& f);

/// numerator * denominator^{-1} mod p. Throws ReductionError when p divides
/// the denominator.
Fp rational_to_field(const mpq_class& x, const PrimeField& f);

}  // namespace nagata::exactla
