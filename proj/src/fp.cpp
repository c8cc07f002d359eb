#include "skewrank/fp.hpp"

namespace skewrank {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace

PrimeField::PrimeField(int p) : p_(p) {
  if (p < 2 || p > 97 || !is_prime(p))
    throw skew_error(errc::bad_field, "p must be a prime in [2, 97], got " + std::to_string(p));
  inv_.assign(p_, 0);
  for (int a = 1; a < p_; ++a) {
    for (int b = 1; b < p_; ++b) {
      if (a * b % p_ == 1) {
        inv_[a] = static_cast<std::uint8_t>(b);
        break;
      }
    }
  }
}

int PrimeField::inv(int a) const {
  a %= p_;
  if (a == 0) throw skew_error(errc::bad_input, "division by zero in F_p");
  return inv_[a];
}

}  // namespace skewrank
