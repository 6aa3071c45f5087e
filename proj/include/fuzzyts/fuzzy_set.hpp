#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "fuzzyts/degree.hpp"

namespace fuzzyts {

using StateIndex = std::uint32_t;
using LabelIndex = std::uint32_t;

struct FuzzyEntry {
  StateIndex state;
  Degree degree;

  friend bool operator==(const FuzzyEntry&, const FuzzyEntry&) = default;
};

// A possibility distribution over the states {0, ..., universe_size-1}.
// Canonical form: entries sorted by state, no stored zeros.
class FuzzySet {
 public:
  FuzzySet() = default;
  explicit FuzzySet(std::size_t universe_size) : universe_size_(universe_size) {}
  // Throws Error on an out-of-universe state or a repeated state.
  FuzzySet(std::size_t universe_size, std::vector<FuzzyEntry> entries);

  static FuzzySet unit(std::size_t universe_size, StateIndex state);
  // Canonicalizes a dense vector of degrees indexed by state.
  static FuzzySet from_dense(std::span<const Degree> dense);

  std::size_t universe_size() const { return universe_size_; }
  std::span<const FuzzyEntry> entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  // Degree of `state`; 0 for states outside the support. Throws outside the universe.
  Degree operator[](StateIndex state) const;
  // Supremum over the whole universe.
  Degree height() const;

  std::vector<Degree> to_dense() const;

  friend bool operator==(const FuzzySet&, const FuzzySet&) = default;

 private:
  std::size_t universe_size_ = 0;
  std::vector<FuzzyEntry> entries_;
};

// ⋁_{x∈subset} mu(x); 0 for the empty subset. Throws if subset leaves the universe.
Degree sup_over(const FuzzySet& mu, std::span<const StateIndex> subset);

// Pointwise max / min. Throws on universe mismatch.
FuzzySet fuzzy_union(const FuzzySet& a, const FuzzySet& b);
FuzzySet fuzzy_intersection(const FuzzySet& a, const FuzzySet& b);

}  // namespace fuzzyts
