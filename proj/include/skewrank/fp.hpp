#pragma once

#include <cstdint>
#include <vector>

#include "skewrank/errors.hpp"

namespace skewrank {

// Coordinate vector over F_p, entries always reduced to [0, p).
using Vec = std::vector<std::uint8_t>;

/// The prime field F_p, 2 <= p <= 97.  Cheap to copy; inverses are tabulated.
class PrimeField {
 public:
  explicit PrimeField(int p);

  int p() const { return p_; }

  int add(int a, int b) const { return (a + b) % p_; }
  int sub(int a, int b) const { return (a - b + p_ * p_) % p_; }
  int neg(int a) const { return (p_ - a % p_) % p_; }
  int mul(int a, int b) const { return (a * b) % p_; }
  int inv(int a) const;

  bool operator==(const PrimeField& o) const { return p_ == o.p_; }
  bool operator!=(const PrimeField& o) const { return p_ != o.p_; }

 private:
  int p_ = 0;
  std::vector<std::uint8_t> inv_;
};

inline bool is_zero_vec(const Vec& v) {
  for (auto x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace skewrank
