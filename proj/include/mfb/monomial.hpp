#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

#include "mfb/common.hpp"

namespace mfb {

// Exponent vector; entry i belongs to variable i of the owning ring.
struct Monomial {
  std::vector<int> e;

  static Monomial one(std::size_t nvars) {
    return Monomial{std::vector<int>(nvars, 0)};
  }

  std::size_t var_count() const { return e.size(); }

  int degree() const { return std::accumulate(e.begin(), e.end(), 0); }

  bool is_one() const {
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
  }

  bool divides(const Monomial& m) const {
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > m.e[i]) return false;
    return true;
  }

  Monomial operator*(const Monomial& m) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += m.e[i];
    return r;
  }

  // Caller guarantees m.divides(*this).
  Monomial operator/(const Monomial& m) const {
    Monomial r = *this;
    for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= m.e[i];
    return r;
  }

  bool operator==(const Monomial& m) const { return e == m.e; }
  bool operator!=(const Monomial& m) const { return e != m.e; }
};

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(r.e[i], b.e[i]);
  return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < a.e.size(); ++i)
    if (a.e[i] > 0 && b.e[i] > 0) return false;
  return true;
}

enum class MonomialOrder {
  kDegrevlex,     // global: total degree, ties broken reverse-lex
  kLex,           // global: pure lexicographic, variable 0 largest
  kNegDegrevlex,  // local: lower total degree is larger, ties reverse-lex
};

inline bool is_global(MonomialOrder o) { return o != MonomialOrder::kNegDegrevlex; }

// Three-way comparison. Positive result means a is the more leading monomial.
inline int mono_cmp(const Monomial& a, const Monomial& b, MonomialOrder order) {
  const int da = a.degree(), db = b.degree();
  switch (order) {
    case MonomialOrder::kLex:
      for (std::size_t i = 0; i < a.e.size(); ++i) {
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
      }
      return 0;
    case MonomialOrder::kDegrevlex:
      if (da != db) return da > db ? 1 : -1;
      break;
    case MonomialOrder::kNegDegrevlex:
      if (da != db) return da < db ? 1 : -1;
      break;
  }
  // Reverse-lex tie break: the last variable where they differ decides,
  // and the smaller exponent there wins.
  for (std::size_t i = a.e.size(); i-- > 0;) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  }
  return 0;
}

// Strict "a comes before b" for descending (leading-first) term storage.
inline bool mono_greater(const Monomial& a, const Monomial& b, MonomialOrder order) {
  return mono_cmp(a, b, order) > 0;
}

}  // namespace mfb
