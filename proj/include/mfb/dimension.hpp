#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "mfb/groebner.hpp"

namespace mfb {

// Krull dimension of R/I from a reduced Groebner basis under a global order:
// the maximum size of a variable subset S such that no leading monomial is
// supported entirely inside S. Returns -1 for the unit ideal (empty variety);
// the zero ideal in k variables has dimension k.
inline int ideal_dimension(const IdealBasis& basis) {
  if (!basis.reduced || !is_global(basis.order))
    throw std::invalid_argument("ideal_dimension needs a reduced global basis");
  std::size_t nvars = basis.variables.size();
  if (nvars > 20) throw ResourceLimitError("too many variables for dimension search");
  if (basis.generators.empty()) return static_cast<int>(nvars);
  std::vector<std::uint32_t> supports;
  for (const Polynomial& g : basis.generators) {
    const Monomial& lm = g.leading_monomial();
    if (lm.is_one()) return -1;
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < nvars; ++i)
      if (lm.e[i] > 0) mask |= (1u << i);
    supports.push_back(mask);
  }
  int best = -1;
  for (std::uint32_t s = 0; s < (1u << nvars); ++s) {
    bool ok = true;
    for (std::uint32_t m : supports) {
      if ((m & ~s) == 0) {  // support inside s
        ok = false;
        break;
      }
    }
    if (ok) best = std::max(best, static_cast<int>(__builtin_popcount(s)));
  }
  return best;
}

}  // namespace mfb
