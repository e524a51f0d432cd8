#pragma once

#include <map>
#include <mutex>

#include "mfb/int_polynomial.hpp"

namespace mfb {

inline unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

// Phi_k, via the exact division Phi_k = (x^k - 1) / prod_{d | k, d < k} Phi_d.
// Cached; the cache is guarded so callers may share it across threads.
inline const IntPolynomial& cyclotomic_polynomial(unsigned k) {
  if (k == 0) throw std::invalid_argument("cyclotomic index must be positive");
  static std::map<unsigned, IntPolynomial> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);
  auto compute = [](unsigned key, auto&& self) -> const IntPolynomial& {
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    IntPolynomial numerator = IntPolynomial::power_minus_one(key);
    IntPolynomial denominator = IntPolynomial::constant(1);
    for (unsigned d = 1; d < key; ++d) {
      if (key % d == 0) denominator = denominator * self(d, self);
    }
    auto [q, r] = numerator.divmod_monic(denominator);
    if (!r.is_zero()) throw std::logic_error("cyclotomic division not exact");
    return cache.emplace(key, std::move(q)).first->second;
  };
  return compute(k, compute);
}

}  // namespace mfb
