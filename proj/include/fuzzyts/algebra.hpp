#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fuzzyts/bisim.hpp"
#include "fuzzyts/fts.hpp"
#include "fuzzyts/relation.hpp"

namespace fuzzyts {

// "(left,right)"
std::string product_state_name(std::string_view left, std::string_view right);
// "[member]"
std::string class_state_name(std::string_view least_member);

// S1|S2: synchronizes on shared labels with min and interleaves the rest.
Fts parallel_compose(const Fts& f1, const Fts& f2);

// Literal containment S1 ⊆ S2 by name, closure of S1 under delta2, and
// delta1 = delta2 restricted to S1. Throws on label mismatch.
bool is_subsystem(const Fts& f1, const Fts& f2);

// A total map from the states of one system into another's.
class StateMap {
 public:
  StateMap(std::size_t codomain_size, std::vector<StateIndex> images);

  std::size_t domain_size() const { return images_.size(); }
  std::size_t codomain_size() const { return codomain_size_; }
  StateIndex operator()(StateIndex s) const { return images_.at(s); }
  std::span<const StateIndex> images() const { return images_; }

  friend bool operator==(const StateMap&, const StateMap&) = default;

 private:
  std::size_t codomain_size_;
  std::vector<StateIndex> images_;
};

// f(s01) = s02 and delta2(f(s), a)(t) = max{delta1(s,a)(t') : f(t') = t}.
// The witness holds (s, t, a) with the preimage supremum as left_degree.
Verdict check_homomorphism(const Fts& f1, const Fts& f2, const StateMap& map);

// (f(S1), A, delta2 restricted, s02). Throws if map is not a homomorphism.
Fts hom_image(const Fts& f1, const Fts& f2, const StateMap& map);

Relation kernel(const StateMap& map);
Relation graph_of(const StateMap& map);
// f(R) over the codomain / f^{-1}(R) over the domain.
Relation push_relation(const StateMap& map, const Relation& r);
Relation pull_relation(const StateMap& map, const Relation& r);

struct QuotientFts {
  Fts quotient;
  std::vector<StateIndex> class_of;               // original state -> quotient state
  std::vector<std::vector<StateIndex>> classes;   // quotient state -> sorted members

  StateMap quotient_map() const { return StateMap(quotient.num_states(), class_of); }
};

// S/R with class-to-class degrees as suprema over member pairs. Any
// equivalence is accepted; throws Error if R is not one.
QuotientFts quotient(const Fts& f, const Relation& r);

// Quotient by self-bisimilarity.
QuotientFts minimize(const Fts& f);

}  // namespace fuzzyts
