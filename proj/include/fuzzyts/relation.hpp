#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "fuzzyts/fuzzy_set.hpp"

namespace fuzzyts {

using StatePair = std::pair<StateIndex, StateIndex>;

// A binary relation R ⊆ S1 × S2 over index universes, stored as a dense bit
// matrix. Pairs enumerate in lexicographic (left, right) order.
class Relation {
 public:
  Relation() = default;
  Relation(std::size_t left_size, std::size_t right_size);
  // Throws Error if a pair leaves the universes.
  Relation(std::size_t left_size, std::size_t right_size, std::span<const StatePair> pairs);

  static Relation full(std::size_t left_size, std::size_t right_size);
  static Relation identity(std::size_t size);

  std::size_t left_size() const { return left_size_; }
  std::size_t right_size() const { return right_size_; }

  bool contains(StateIndex s, StateIndex t) const {
    return s < left_size_ && t < right_size_ && bits_[index(s, t)] != 0;
  }
  void insert(StateIndex s, StateIndex t);
  void erase(StateIndex s, StateIndex t);

  std::size_t size() const;
  bool empty() const { return size() == 0; }
  std::vector<StatePair> pairs() const;

  // pi1(R) and pi2(R), sorted.
  std::vector<StateIndex> left_projection() const;
  std::vector<StateIndex> right_projection() const;

  bool is_subset_of(const Relation& other) const;

  // Raw row-major storage, one byte per pair; used by the parallel kernels,
  // which write disjoint bytes.
  std::span<std::uint8_t> bits() { return bits_; }
  std::span<const std::uint8_t> bits() const { return bits_; }

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t index(StateIndex s, StateIndex t) const { return std::size_t{s} * right_size_ + t; }
  void check(StateIndex s, StateIndex t) const;

  std::size_t left_size_ = 0;
  std::size_t right_size_ = 0;
  std::vector<std::uint8_t> bits_;
};

Relation inverse(const Relation& r);
// R ∘ Q = {(s,u) : (s,t) ∈ R, (t,u) ∈ Q}. Throws unless r.right_size() == q.left_size().
Relation rel_compose(const Relation& r, const Relation& q);
Relation rel_union(const Relation& r, const Relation& q);
Relation rel_intersection(const Relation& r, const Relation& q);

bool is_reflexive(const Relation& r);
bool is_symmetric(const Relation& r);
bool is_transitive(const Relation& r);
bool is_equivalence(const Relation& r);

// Sorted classes of an equivalence relation, ordered by least member.
// Throws Error("relation is not an equivalence") otherwise.
std::vector<std::vector<StateIndex>> equivalence_classes(const Relation& r);

inline constexpr std::size_t kNoBlock = static_cast<std::size_t>(-1);

// The connected components of R read as a bipartite graph. A pair (U, V) is
// R-correlational exactly when U ∩ pi1(R) and V ∩ pi2(R) are the two sides
// of the same union of blocks; states outside the projections are free.
struct Block {
  std::vector<StateIndex> left;
  std::vector<StateIndex> right;

  friend bool operator==(const Block&, const Block&) = default;
};

struct BlockDecomposition {
  std::vector<Block> blocks;  // ordered by least left state
  std::vector<StateIndex> left_outside;
  std::vector<StateIndex> right_outside;
  std::vector<std::size_t> block_of_left;   // kNoBlock for outside states
  std::vector<std::size_t> block_of_right;
};

BlockDecomposition decompose(const Relation& r);

// Definitional test {(s,t)∈R : s∈U} = {(s,t)∈R : t∈V}. Throws if U or V
// leaves its universe.
bool is_correlational(const Relation& r, std::span<const StateIndex> left_set,
                      std::span<const StateIndex> right_set);

}  // namespace fuzzyts
