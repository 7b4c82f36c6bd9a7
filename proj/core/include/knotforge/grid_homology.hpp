#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "knotforge/grid.hpp"
#include "knotforge/laurent.hpp"

namespace knotforge {

/// Ranks indexed by (Maslov M, Alexander A). Only positive ranks are stored.
class BigradedRanks {
 public:
  using Key = std::pair<int, int>;

  BigradedRanks() = default;

  /// Adds to the rank at (m, a); zero is ignored.
  void add(int m, int a, std::uint64_t rank);
  std::uint64_t rank(int m, int a) const;

  bool empty() const noexcept { return ranks_.empty(); }
  std::uint64_t total() const;
  std::uint64_t total_at_alexander(int a) const;
  int max_alexander() const;
  int min_alexander() const;
  int max_maslov() const;
  int min_maslov() const;

  /// Entries sorted by (M, A).
  const std::map<Key, std::uint64_t>& entries() const noexcept { return ranks_; }

  friend bool operator==(const BigradedRanks&, const BigradedRanks&) = default;

 private:
  std::map<Key, std::uint64_t> ranks_;
};

struct HomologyLimits {
  std::uint64_t max_states = 50'000'000;
  std::uint64_t max_memory_bytes = std::uint64_t{4} << 30;
  /// Worker count; 0 means hardware concurrency. Output does not depend on it.
  unsigned threads = 1;
  /// Verify d^2 = 0 on every pair of adjacent blocks.
  bool check_d_squared = true;
};

struct ComplexStats {
  std::uint64_t states = 0;
  std::uint64_t differential_entries = 0;
  std::size_t blocks = 0;
};

/// n! for n <= 20.
std::uint64_t factorial(std::size_t n);

/// Rough peak memory of tilde_homology for a grid of size n.
std::uint64_t estimate_memory_bytes(std::size_t n);

/// Homology of the fully blocked grid complex over the two-element field.
/// Throws TooLarge when n! exceeds max_states or the memory estimate exceeds
/// max_memory_bytes, InvalidGrid (or another validation code) for bad grids,
/// Internal when a structural check (gradings of a differential, d^2) fails.
BigradedRanks tilde_homology(const GridDiagram& g, const HomologyLimits& limits = {}, ComplexStats* stats = nullptr);

/// Divides the tilde Poincare polynomial by (1 + q^-1 a^-1)^(n-1).
/// Throws NotDivisible on a remainder or negative coefficient.
BigradedRanks hat_ranks(const BigradedRanks& tilde, std::size_t n);

struct GenusEuler {
  int genus;
  LaurentPoly euler;
};

/// Genus (top Alexander grading) and graded Euler characteristic normalized
/// to euler(1) = 1. Throws EmptyRanks.
GenusEuler genus_and_euler(const BigradedRanks& hat);

}  // namespace knotforge
