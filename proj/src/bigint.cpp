#include "juliadir/bigint.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace juliadir {

void BigUint::trim() {
  while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
}

BigUint BigUint::pow2(uint64_t bits) {
  if (bits >= kMaxBits) {
    throw std::overflow_error("BigUint::pow2: exponent exceeds bit budget");
  }
  BigUint r;
  r.limbs_.assign(bits / 64 + 1, 0);
  r.limbs_.back() = uint64_t(1) << (bits % 64);
  return r;
}

BigUint& BigUint::operator+=(const BigUint& o) {
  if (o.limbs_.size() > limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
  unsigned __int128 carry = 0;
  for (size_t i = 0; i < limbs_.size(); ++i) {
    unsigned __int128 s = carry + limbs_[i];
    if (i < o.limbs_.size()) s += o.limbs_[i];
    limbs_[i] = static_cast<uint64_t>(s);
    carry = s >> 64;
  }
  if (carry) limbs_.push_back(static_cast<uint64_t>(carry));
  return *this;
}

bool BigUint::operator<(const BigUint& o) const {
  if (limbs_.size() != o.limbs_.size()) return limbs_.size() < o.limbs_.size();
  for (size_t i = limbs_.size(); i-- > 0;) {
    if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i];
  }
  return false;
}

uint64_t BigUint::bit_length() const {
  uint64_t top = limbs_.back();
  if (top == 0) return 0;  // canonical zero
  int hb = 63;
  while (!(top >> hb)) --hb;
  return (limbs_.size() - 1) * 64 + hb + 1;
}

double BigUint::log() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  // top two limbs give 128 significant bits, plenty for a double log
  size_t n = limbs_.size();
  double top = static_cast<double>(limbs_[n - 1]);
  if (n >= 2) top = top * 18446744073709551616.0 + static_cast<double>(limbs_[n - 2]);
  size_t skipped = (n >= 2) ? n - 2 : n - 1;
  return std::log(top) + static_cast<double>(skipped) * 64.0 * 0.6931471805599453;
}

double BigUint::to_double() const {
  double r = 0;
  for (size_t i = limbs_.size(); i-- > 0;) {
    r = r * 18446744073709551616.0 + static_cast<double>(limbs_[i]);
    if (std::isinf(r)) return r;
  }
  return r;
}

std::string BigUint::to_string() const {
  if (is_zero()) return "0";
  std::vector<uint64_t> work = limbs_;
  std::string digits;
  const uint64_t base = 10000000000000000000ull;  // 10^19
  while (!(work.size() == 1 && work[0] == 0)) {
    unsigned __int128 rem = 0;
    for (size_t i = work.size(); i-- > 0;) {
      unsigned __int128 cur = (rem << 64) | work[i];
      work[i] = static_cast<uint64_t>(cur / base);
      rem = cur % base;
    }
    while (work.size() > 1 && work.back() == 0) work.pop_back();
    uint64_t chunk = static_cast<uint64_t>(rem);
    for (int d = 0; d < 19; ++d) {
      digits.push_back(static_cast<char>('0' + chunk % 10));
      chunk /= 10;
    }
  }
  while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
  std::reverse(digits.begin(), digits.end());
  return digits;
}

}  // namespace juliadir
