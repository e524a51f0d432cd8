#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mfb/common.hpp"
#include "mfb/polynomial.hpp"

namespace mfb {

inline bool is_prime(const Int& p) {
  if (p < 2) return false;
  return mpz_probab_prime_p(p.get_mpz_t(), 40) != 0;
}

struct PrimePower {
  Int p;
  int m = 1;
};

// d = p^m with p prime, m >= 1; nullopt when d is 1 or has two prime factors.
inline std::optional<PrimePower> prime_power_decompose(const Int& d) {
  if (d < 2) return std::nullopt;
  Int rest = d;
  Int p = 0;
  for (Int q = 2; q * q <= rest; ++q) {
    if (rest % q == 0) {
      p = q;
      break;
    }
  }
  if (p == 0) return PrimePower{rest, 1};  // d itself is prime
  int m = 0;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1) return std::nullopt;
  return PrimePower{p, m};
}

// A homogeneous polynomial in n+1 variables together with the derived data
// the bound pipeline needs.
struct ProblemInstance {
  Polynomial f;
  int n = 0;  // ambient projective dimension: f has n + 1 variables
  int d = 0;  // common total degree
  std::optional<PrimePower> prime_power;
  std::optional<int> s;  // dimension of the critical locus, once computed
};

inline ProblemInstance make_instance(Polynomial f) {
  if (f.is_zero()) throw DegeneracyError("zero polynomial");
  std::optional<int> d = homogeneous_degree(f);
  if (!d) throw DegeneracyError("polynomial is not homogeneous");
  if (*d < 1) throw DegeneracyError("constant polynomial");
  if (f.var_count() < 1) throw DegeneracyError("polynomial has no variables");
  ProblemInstance inst;
  inst.n = static_cast<int>(f.var_count()) - 1;
  inst.d = *d;
  inst.prime_power = prime_power_decompose(Int(*d));
  inst.f = std::move(f);
  return inst;
}

}  // namespace mfb
