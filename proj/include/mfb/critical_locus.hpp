#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mfb/common.hpp"
#include "mfb/dimension.hpp"
#include "mfb/groebner.hpp"
#include "mfb/instance.hpp"
#include "mfb/standard_basis.hpp"

namespace mfb {

inline std::vector<Polynomial> jacobian(const Polynomial& f) {
  std::vector<Polynomial> out;
  for (std::size_t i = 0; i < f.var_count(); ++i) {
    Polynomial d = f.partial_derivative(i);
    if (!d.is_zero()) out.push_back(std::move(d));
  }
  return out;
}

// An irreducible coordinate component V(zero_vars) of the critical locus.
struct ComponentDescriptor {
  std::vector<int> zero_vars;  // sorted variable indices cut to zero
  int dim = 0;
  enum class Provenance { kEnumerated, kUserSupplied } provenance = Provenance::kEnumerated;
  std::optional<Int> mu_generic;  // transversal Milnor number, once sampled

  bool operator==(const ComponentDescriptor& o) const { return zero_vars == o.zero_vars; }
};

struct CriticalLocusReport {
  int s = 0;
  std::vector<ComponentDescriptor> components;
  bool complete = false;  // true when the critical ideal is monomial
};

// Groebner basis of the Jacobian ideal plus the dimension of its variety.
// Returns s = -1 when the critical locus is empty (f smooth, degree 1).
inline std::pair<IdealBasis, int> critical_locus(const Polynomial& f, Budget& budget) {
  std::vector<Polynomial> jac = jacobian(f);
  if (jac.empty()) throw DegeneracyError("vanishing Jacobian");
  IdealBasis basis = groebner_basis(jac, MonomialOrder::kDegrevlex, budget);
  int s = ideal_dimension(basis);
  return {std::move(basis), s};
}

namespace detail {

// Exact containment test V(zero_set) inside V(g): every term of g must use a
// zeroed variable, i.e. g lies in the prime ideal of the subspace.
inline bool vanishes_on_subspace(const Polynomial& g, const std::vector<int>& zero_vars) {
  for (const auto& t : g.terms()) {
    bool killed = false;
    for (int v : zero_vars) {
      if (t.mono.e[v] > 0) {
        killed = true;
        break;
      }
    }
    if (!killed) return false;
  }
  return true;
}

}  // namespace detail

// All s-dimensional coordinate subspaces contained in V(J). Components of
// equal dimension are automatically an antichain under zero-set inclusion.
// complete is true only when the ideal is monomial, in which case every
// irreducible component is a coordinate subspace and the list is exhaustive.
inline CriticalLocusReport enumerate_coordinate_components(const IdealBasis& J, int s) {
  const std::size_t nvars = J.variables.size();
  if (s < 0 || static_cast<std::size_t>(s) > nvars)
    throw std::invalid_argument("component dimension out of range");
  CriticalLocusReport rep;
  rep.s = s;
  rep.complete = std::all_of(J.generators.begin(), J.generators.end(),
                             [](const Polynomial& g) { return g.terms().size() == 1; });
  const std::size_t zeros = nvars - static_cast<std::size_t>(s);
  if (nvars > 20) throw ResourceLimitError("too many variables for enumeration");
  for (std::uint32_t mask = 0; mask < (1u << nvars); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != zeros) continue;
    std::vector<int> zero_vars;
    for (std::size_t i = 0; i < nvars; ++i)
      if (mask & (1u << i)) zero_vars.push_back(static_cast<int>(i));
    bool contained = std::all_of(
        J.generators.begin(), J.generators.end(),
        [&](const Polynomial& g) { return detail::vanishes_on_subspace(g, zero_vars); });
    if (contained) {
      ComponentDescriptor c;
      c.zero_vars = std::move(zero_vars);
      c.dim = s;
      rep.components.push_back(std::move(c));
    }
  }
  std::sort(rep.components.begin(), rep.components.end(),
            [](const ComponentDescriptor& a, const ComponentDescriptor& b) {
              return a.zero_vars < b.zero_vars;
            });
  return rep;
}

// Checks a user-claimed component: correct dimension and containment in V(J).
// A false answer is legal output, not an error.
inline bool verify_user_component(const IdealBasis& J, int s,
                                  const ComponentDescriptor& comp) {
  const std::size_t nvars = J.variables.size();
  if (comp.zero_vars.empty() && s != static_cast<int>(nvars)) return false;
  for (int v : comp.zero_vars)
    if (v < 0 || static_cast<std::size_t>(v) >= nvars) return false;
  if (static_cast<int>(nvars - comp.zero_vars.size()) != s) return false;
  return std::all_of(
      J.generators.begin(), J.generators.end(),
      [&](const Polynomial& g) { return detail::vanishes_on_subspace(g, comp.zero_vars); });
}

// Transversal ("generic") Milnor number of f along a component: substitute
// random integers from [2, 97] (distinct within a sample) for the free
// variables and take the Milnor number of the resulting slice at the origin
// of the zeroed coordinates. A value is returned only when two consecutive
// independent samples agree; after 8 draws the computation is abandoned.
// The sample stream depends only on (seed, zero_vars), so results do not
// depend on the order components are processed in.
inline Int generic_milnor_number(const Polynomial& f, const ComponentDescriptor& comp,
                                 std::uint64_t seed, Budget& budget) {
  const auto& vars = f.variables();
  std::vector<std::string> free_vars;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (std::find(comp.zero_vars.begin(), comp.zero_vars.end(), static_cast<int>(i)) ==
        comp.zero_vars.end())
      free_vars.push_back(vars[i]);
  }
  if (free_vars.empty())
    throw std::invalid_argument("component has no free variables to slice along");

  std::uint64_t state = splitmix64(seed ^ 0x6d696c6e6f72ULL);
  for (int v : comp.zero_vars) state = splitmix64(state ^ (static_cast<std::uint64_t>(v) + 1));

  std::optional<Int> previous;
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::map<std::string, SubstValue> assignment;
    std::vector<long> used;
    for (const std::string& v : free_vars) {
      long value;
      do {
        state = splitmix64(state);
        value = static_cast<long>(state % 96) + 2;  // in [2, 97]
      } while (std::find(used.begin(), used.end(), value) != used.end());
      used.push_back(value);
      assignment[v] = Rat(value);
    }
    Polynomial slice = substitute(f, assignment);
    if (slice.is_zero() || slice.has_constant_term()) {
      previous.reset();  // degenerate sample point
      continue;
    }
    MilnorResult mu = milnor_number_at_origin(slice, budget);
    if (!mu.finite) {
      previous.reset();
      continue;
    }
    if (previous && *previous == mu.value) return mu.value;
    previous = mu.value;
  }
  throw DegeneracyError(
      "generic Milnor number did not stabilize: slices are non-isolated or disagree");
}

}  // namespace mfb
