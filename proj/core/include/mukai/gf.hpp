#pragma once

#include <cstdint>

namespace mukai {

// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(uint64_t n);

// Arithmetic mod a prime below 2^32, so products fit in uint64.
class PrimeField {
public:
  explicit PrimeField(uint64_t p);

  uint64_t modulus() const { return p_; }
  uint64_t reduce_signed(int64_t v) const {
    int64_t r = v % static_cast<int64_t>(p_);
    return static_cast<uint64_t>(r < 0 ? r + static_cast<int64_t>(p_) : r);
  }
  uint64_t add(uint64_t a, uint64_t b) const {
    uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  uint64_t neg(uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  uint64_t mul(uint64_t a, uint64_t b) const { return (a * b) % p_; }
  uint64_t pow(uint64_t a, uint64_t e) const;
  uint64_t inv(uint64_t a) const;

private:
  uint64_t p_;
};

} // namespace mukai
