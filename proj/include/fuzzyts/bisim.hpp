#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "fuzzyts/degree.hpp"
#include "fuzzyts/fts.hpp"
#include "fuzzyts/relation.hpp"

namespace fuzzyts {

enum class FailureKind {
  kLeftOutside,     // mu(s') > 0 for s' outside pi1(R)
  kRightOutside,    // eta(t') > 0 for t' outside pi2(R)
  kBlockMismatch,   // mu(U_c) != eta(V_c)
  kLeftUnmatched,   // left transition with no >= match on the right
  kRightUnmatched,  // right transition with no >= match on the left
  kFinalMismatch,   // F1(q1) != F2(q2)
  kInitMismatch,    // homomorphism does not map init to init
  kImageMismatch,   // homomorphism sup condition violated
  kAbsentPair,      // initial pair missing from bisimilarity
};

std::string_view to_string(FailureKind kind);

// The least failing item of a check. `left`/`right` are the related pair
// (for homomorphisms: source state and codomain target). `state` is the
// offending outside state or transition target, on the side named by `kind`.
struct Witness {
  StateIndex left = 0;
  StateIndex right = 0;
  std::optional<LabelIndex> label;
  FailureKind kind = FailureKind::kBlockMismatch;
  std::optional<std::size_t> block;
  std::optional<StateIndex> state;
  Degree left_degree;
  Degree right_degree;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;

  static Verdict pass() { return {}; }
  static Verdict fail(Witness w) { return {false, w}; }
  explicit operator bool() const { return holds; }
};

// Definition-3 check through the block reduction: for every (s,t) ∈ R and
// label a, delta1(s,a) vanishes off pi1(R), delta2(t,a) vanishes off pi2(R),
// and both have equal suprema on every block. Witnesses are the least failure
// in (left, right, label, left-outside, right-outside, block) order.
Verdict check_bisimulation(const Fts& f1, const Fts& f2, const Relation& r);

inline constexpr std::size_t kDefaultNaiveCap = 12;
inline constexpr std::size_t kDefaultEnumerationCap = 14;

// Oracle form: enumerates every subset pair (U, V), keeps the correlational
// ones, and compares suprema directly. Cost is 2^(|S1|+|S2|); throws
// Error("cap exceeded") when |S1|+|S2| > cap.
bool check_bisimulation_naive(const Fts& f1, const Fts& f2, const Relation& r,
                              std::size_t cap = kDefaultNaiveCap);

// Per-transition matching: every s -a|g-> s' needs t -a|g'-> t' with g' >= g
// and (s',t') ∈ R, and symmetrically.
Verdict check_strong_bisimulation(const Fts& f1, const Fts& f2, const Relation& r);

// Equivalence-class form for an equivalence R on f. Throws if R is not one.
// Block indices in witnesses are class indices (classes ordered by least member).
Verdict check_equivalence_bisimulation(const Fts& f, const Relation& r);

// Bisimulation of the bases plus F1(q1) = F2(q2) on every related pair.
Verdict check_automaton_bisimulation(const FuzzyAutomaton& m1, const FuzzyAutomaton& m2,
                                     const Relation& r);

// The failure of the single pair (s,t) against the structure of R, if any.
std::optional<Witness> pair_failure(const Fts& f1, const Fts& f2, const BlockDecomposition& d,
                                    StateIndex s, StateIndex t);

// Gamma(R): all (s,t) ∈ S1 × S2 passing the matching test against R's blocks.
// `gamma` is the OpenMP kernel; `gamma_serial` is the plain reference loop.
// Both return identical relations.
Relation gamma(const Fts& f1, const Fts& f2, const Relation& r);
Relation gamma_serial(const Fts& f1, const Fts& f2, const Relation& r);

// The sequence S1×S2 = R0 ⊋ R1 ⊋ ... ⊋ Rn = Gamma(Rn); the last element is bisimilarity.
std::vector<Relation> bisimilarity_iterates(const Fts& f1, const Fts& f2);

// The largest bisimulation, as the greatest fixed point of Gamma.
Relation bisimilarity(const Fts& f1, const Fts& f2);
bool are_bisimilar(const Fts& f1, const Fts& f2);

// bisimilarity(f, f); asserted to be an equivalence.
Relation self_bisimilarity(const Fts& f);

// Why (s,t) is not bisimilar: the Gamma round that removed it and the
// pair's failure against the relation of that round.
struct PairExplanation {
  std::size_t iteration = 0;  // (s,t) ∈ R_{iteration}, ∉ R_{iteration+1}
  Witness cause;
};
std::optional<PairExplanation> explain_non_bisimilar(const Fts& f1, const Fts& f2, StateIndex s,
                                                     StateIndex t);

// Least z-closed superset: closed under (s,t),(s',t),(s',t') ∈ R ⇒ (s,t') ∈ R.
Relation z_closure(const Relation& r);
bool is_z_closed(const Relation& r);

Relation diagonal(const Fts& f);

// Every bisimulation between f1 and f2 by subset enumeration, in increasing
// bitmask order. Throws Error("cap exceeded") when |S1×S2| > cap.
std::vector<Relation> all_bisimulations(const Fts& f1, const Fts& f2,
                                        std::size_t cap = kDefaultEnumerationCap);

// Union of all bisimulations by subset enumeration (OpenMP kernel / serial reference).
Relation enumerate_bisimulations_bruteforce(const Fts& f1, const Fts& f2,
                                            std::size_t cap = kDefaultEnumerationCap);
Relation enumerate_bisimulations_bruteforce_serial(const Fts& f1, const Fts& f2,
                                                   std::size_t cap = kDefaultEnumerationCap);

}  // namespace fuzzyts
