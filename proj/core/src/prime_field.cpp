#include "nagata/prime_field.hpp"

#include <array>
#include <string>

namespace nagata::exactla {
namespace {

u64 pow_mod(u64 base, u64 exp, u64 mod) {
  u64 result = 1 % mod;
  base %= mod;
  while (exp != 0) {
    if (exp & 1) result = Fp::mul_mod(result, base, mod);
    base = Fp::mul_mod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  static constexpr std::array<u64, 12> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 q : kBases) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // These twelve bases are a deterministic witness set for all n < 2^64.
  for (u64 a : kBases) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = Fp::mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(u64 modulus) : p_(modulus) {
  if (modulus >= (u64{1} << 62)) {
    throw std::invalid_argument("prime field modulus must be below 2^62, got " +
                                std::to_string(modulus));
  }
  if (!is_prime_u64(modulus)) {
    throw std::invalid_argument("prime field modulus is not prime: " + std::to_string(modulus));
  }
}

Fp Fp::inverse() const {
  if (v_ == 0) throw std::domain_error("inverse of zero in prime field");
  // Extended Euclid on signed 128-bit values.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p_, new_r = v_;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    const std::int64_t tmp_t = t - q * new_t;
    t = new_t;
    new_t = tmp_t;
    const std::int64_t tmp_r = r - q * new_r;
    r = new_r;
    new_r = tmp_r;
  }
  if (t < 0) t += p_;
  return {static_cast<u64>(t), p_};
}

Fp integer_to_field(const mpz_class& x, const PrimeField& f) {
  static_assert(sizeof(unsigned long) == sizeof(u64), "expects LP64");
  const u64 r = mpz_fdiv_ui(x.get_mpz_t(), f.modulus());
  return {r, f.modulus()};
}

Fp rational_to_field(const mpq_class& x, const PrimeField& f) {
  const Fp den = integer_to_field(x.get_den(), f);
  if (den.is_zero()) {
    throw ReductionError("denominator " + x.get_den().get_str() + " is divisible by p = " +
                         std::to_string(f.modulus()) + "; re-draw the prime");
  }
  return integer_to_field(x.get_num(), f) * den.inverse();
}

}  // namespace nagata::exactla
