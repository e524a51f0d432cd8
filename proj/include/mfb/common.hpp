#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace mfb {

using Int = mpz_class;
using Rat = mpq_class;

// Syntax-level rejection of an input string; carries the byte offset of the
// first offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// The input is well-formed but mathematically outside the domain of the
// requested computation (non-homogeneous, non-isolated, empty locus, ...).
class DegeneracyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured work limit was exhausted before the computation finished.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parameter value is unusable (non-prime modulus, inconsistent lists, ...).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr long long kDefaultSPairBudget = 200000;

// Shared work budget for basis computations; one unit per S-pair processed.
class Budget {
 public:
  explicit Budget(long long limit = kDefaultSPairBudget) : remaining_(limit) {}

  void charge(long long units = 1) {
    remaining_ -= units;
    if (remaining_ < 0) throw ResourceLimitError("S-pair budget exhausted");
  }

  long long remaining() const noexcept { return remaining_; }

 private:
  long long remaining_;
};

// SplitMix64 step; used to derive deterministic per-component sample streams.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace mfb
