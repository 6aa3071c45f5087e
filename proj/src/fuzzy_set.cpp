#include "fuzzyts/fuzzy_set.hpp"

#include <algorithm>
#include <string>

#include "fuzzyts/error.hpp"

namespace fuzzyts {

namespace {

void require_in_universe(std::size_t universe, StateIndex s) {
  if (s >= universe)
    throw Error("state index " + std::to_string(s) + " outside a universe of " +
                std::to_string(universe) + " states");
}

void require_same_universe(const FuzzySet& a, const FuzzySet& b) {
  if (a.universe_size() != b.universe_size()) throw Error("fuzzy set universe mismatch");
}

// Merges two canonical entry lists, combining coinciding states with `op`.
template <typename Op>
FuzzySet merge(const FuzzySet& a, const FuzzySet& b, bool keep_unpaired, Op op) {
  require_same_universe(a, b);
  std::vector<FuzzyEntry> out;
  auto ia = a.entries().begin(), ea = a.entries().end();
  auto ib = b.entries().begin(), eb = b.entries().end();
  while (ia != ea || ib != eb) {
    if (ib == eb || (ia != ea && ia->state < ib->state)) {
      if (keep_unpaired) out.push_back(*ia);
      ++ia;
    } else if (ia == ea || ib->state < ia->state) {
      if (keep_unpaired) out.push_back(*ib);
      ++ib;
    } else {
      out.push_back({ia->state, op(ia->degree, ib->degree)});
      ++ia;
      ++ib;
    }
  }
  return FuzzySet(a.universe_size(), std::move(out));
}

}  // namespace

FuzzySet::FuzzySet(std::size_t universe_size, std::vector<FuzzyEntry> entries)
    : universe_size_(universe_size), entries_(std::move(entries)) {
  std::ranges::sort(entries_, {}, &FuzzyEntry::state);
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    require_in_universe(universe_size_, entries_[i].state);
    if (i > 0 && entries_[i - 1].state == entries_[i].state)
      throw Error("repeated state index " + std::to_string(entries_[i].state) + " in fuzzy set");
  }
  std::erase_if(entries_, [](const FuzzyEntry& e) { return e.degree.is_zero(); });
}

FuzzySet FuzzySet::unit(std::size_t universe_size, StateIndex state) {
  return FuzzySet(universe_size, {{state, Degree::one()}});
}

FuzzySet FuzzySet::from_dense(std::span<const Degree> dense) {
  FuzzySet out(dense.size());
  for (std::size_t i = 0; i < dense.size(); ++i)
    if (dense[i].is_positive()) out.entries_.push_back({static_cast<StateIndex>(i), dense[i]});
  return out;
}

Degree FuzzySet::operator[](StateIndex state) const {
  require_in_universe(universe_size_, state);
  auto it = std::ranges::lower_bound(entries_, state, {}, &FuzzyEntry::state);
  return it != entries_.end() && it->state == state ? it->degree : Degree::zero();
}

Degree FuzzySet::height() const {
  Degree h;
  for (const auto& e : entries_) h = max(h, e.degree);
  return h;
}

std::vector<Degree> FuzzySet::to_dense() const {
  std::vector<Degree> dense(universe_size_);
  for (const auto& e : entries_) dense[e.state] = e.degree;
  return dense;
}

Degree sup_over(const FuzzySet& mu, std::span<const StateIndex> subset) {
  Degree sup;
  for (StateIndex s : subset) sup = max(sup, mu[s]);
  return sup;
}

FuzzySet fuzzy_union(const FuzzySet& a, const FuzzySet& b) {
  return merge(a, b, true, [](Degree x, Degree y) { return max(x, y); });
}

FuzzySet fuzzy_intersection(const FuzzySet& a, const FuzzySet& b) {
  return merge(a, b, false, [](Degree x, Degree y) { return min(x, y); });
}

}  // namespace fuzzyts
