#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace juliadir {

// Minimal arbitrary-precision unsigned integer: addition, power-of-two
// construction, comparison and conversions. Enough for multiplicity
// sequences and pole counting; no general multiplication needed.
class BigUint {
 public:
  BigUint() : limbs_{0} {}
  explicit BigUint(uint64_t v) : limbs_{v} {}

  // 2^bits. Throws std::overflow_error beyond the bit budget.
  static BigUint pow2(uint64_t bits);

  // Practical cap on representable values (1 MiB of limbs).
  static constexpr uint64_t kMaxBits = uint64_t(1) << 23;

  BigUint& operator+=(const BigUint& o);
  friend BigUint operator+(BigUint a, const BigUint& b) { return a += b; }

  bool operator==(const BigUint& o) const { return limbs_ == o.limbs_; }
  bool operator<(const BigUint& o) const;
  bool operator<=(const BigUint& o) const { return *this < o || *this == o; }

  bool is_zero() const { return limbs_.size() == 1 && limbs_[0] == 0; }

  // Number of bits in the value (0 for value 0).
  uint64_t bit_length() const;

  // Fits in uint64?
  bool fits_u64() const { return limbs_.size() == 1; }
  uint64_t as_u64() const { return limbs_[0]; }

  // Natural log; +inf if the value exceeds double range.
  double log() const;

  // Nearest double (may be +inf).
  double to_double() const;

  std::string to_string() const;  // decimal

 private:
  void trim();
  std::vector<uint64_t> limbs_;  // little-endian base 2^64
};

}  // namespace juliadir
