#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "mfb/common.hpp"
#include "mfb/instance.hpp"

namespace mfb {

// Sum of transversal Milnor numbers: the restriction bound without any
// prime-power improvement.
inline Int naive_bound(const std::vector<Int>& mus) {
  Int total = 0;
  for (const Int& mu : mus) {
    if (mu < 0) throw std::invalid_argument("negative Milnor number");
    total += mu;
  }
  return total;
}

// One component's contribution to the prime-power bound. With
// epsilon = (-1)^(n+1-s) and mu - epsilon = p*M + r (0 <= r < p):
// value = floor((mu + p*M + epsilon) / 2) = floor(mu - r/2).
struct BoundTerm {
  Int mu;
  Int p;
  int n = 0;
  int s = 0;
  int epsilon = 1;
  Int r;
  Int M;
  Int value;
};

inline BoundTerm component_bound(const Int& mu, const Int& p, int n, int s) {
  if (mu < 1) throw std::invalid_argument("Milnor number must be positive");
  if (!is_prime(p)) throw std::invalid_argument("p is not prime");
  if (s < 0 || s > n) throw std::invalid_argument("component dimension out of range");
  BoundTerm t;
  t.mu = mu;
  t.p = p;
  t.n = n;
  t.s = s;
  t.epsilon = ((n + 1 - s) % 2 == 0) ? 1 : -1;
  Int shifted = mu - t.epsilon;  // non-negative since mu >= 1
  t.r = shifted % p;
  t.M = (shifted - t.r) / p;
  t.value = (2 * mu - t.r) / 2;  // exact floor: numerator non-negative
  return t;
}

inline Int total_bound(const std::vector<BoundTerm>& terms) {
  Int total = 0;
  for (const BoundTerm& t : terms) {
    if (t.p != terms.front().p || t.n != terms.front().n || t.s != terms.front().s)
      throw std::invalid_argument("bound terms from mixed instances");
    total += t.value;
  }
  return total;
}

// Small transversal Milnor numbers force the invariant part to vanish or
// nearly vanish, independent of the prime-power structure:
//   mu = 1, d odd,          n-s even -> 0
//   mu = 2, d not div by 3, n-s even -> 0
//   mu = 2, d not div by 6, n-s odd  -> 0
//   mu = 3, d odd,          n-s even -> 1
//   mu = 3, d odd,          n-s odd  -> 2
// Anything else yields no special value.
inline std::optional<Int> special_case_bound(const Int& mu, const Int& d, int n_minus_s) {
  if (d < 1) throw std::invalid_argument("degree must be positive");
  if (n_minus_s < 1) throw std::invalid_argument("requires n - s >= 1");
  const bool even = (n_minus_s % 2 == 0);
  const bool d_odd = (d % 2 != 0);
  if (mu == 1 && d_odd && even) return Int(0);
  if (mu == 2 && d % 3 != 0 && even) return Int(0);
  if (mu == 2 && d % 6 != 0 && !even) return Int(0);
  if (mu == 3 && d_odd && even) return Int(1);
  if (mu == 3 && d_odd && !even) return Int(2);
  return std::nullopt;
}

// Structure of a nonreduced polynomial f = prod g_k^{a_k} with gcd{a_k} > 1
// allowed: number of fiber components, rank of reduced H^0, and the bound
// that discards multiplicities lying in the supplied coprime set S.
struct NonreducedAnalysis {
  Int component_count;  // gcd of the multiplicities
  Int rank_h0;          // component_count - 1
  Int mu_sum_bound;     // sum of a_k - 1 over multiplicities outside S
};

inline NonreducedAnalysis nonreduced_analysis(const std::vector<Int>& mults, const Int& d,
                                              const std::vector<Int>& factor_degrees,
                                              const std::vector<Int>& coprime_set) {
  if (mults.empty()) throw std::invalid_argument("no multiplicities");
  if (!factor_degrees.empty() && factor_degrees.size() != mults.size())
    throw std::invalid_argument("degree list length mismatch");
  Int weighted = 0;
  for (std::size_t i = 0; i < mults.size(); ++i) {
    if (mults[i] < 1) throw std::invalid_argument("multiplicities must be positive");
    Int deg_i = factor_degrees.empty() ? Int(1) : factor_degrees[i];
    if (deg_i < 1) throw std::invalid_argument("factor degrees must be positive");
    weighted += mults[i] * deg_i;
  }
  if (weighted != d) throw std::invalid_argument("inconsistent degree data");
  for (const Int& q : coprime_set) {
    Int g;
    mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), d.get_mpz_t());
    if (g != 1) throw std::invalid_argument("coprime set contains a divisor-sharing element");
  }
  NonreducedAnalysis out;
  out.component_count = 0;
  for (const Int& a : mults)
    mpz_gcd(out.component_count.get_mpz_t(), out.component_count.get_mpz_t(), a.get_mpz_t());
  out.rank_h0 = out.component_count - 1;
  out.mu_sum_bound = 0;
  for (const Int& a : mults) {
    bool excluded = std::find(coprime_set.begin(), coprime_set.end(), a) != coprime_set.end();
    if (!excluded) out.mu_sum_bound += a - 1;
  }
  return out;
}

// Attaching bound from generic hyperplane iteration: (d-1)^(n-s+1).
inline Int le_attaching_bound(const Int& d, int n, int s) {
  if (d < 2) throw std::invalid_argument("degree must be at least 2");
  if (s < 0 || s > n) throw std::invalid_argument("dimension out of range");
  Int base = d - 1;
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(),
             static_cast<unsigned long>(n - s + 1));
  return out;
}

// Largest multiple of q not exceeding the bound.
inline Int multiple_refinement(const Int& bound, const Int& q) {
  if (q < 1) throw std::invalid_argument("modulus must be positive");
  if (bound < 0) throw std::invalid_argument("bound must be non-negative");
  return q * (bound / q);
}

}  // namespace mfb
