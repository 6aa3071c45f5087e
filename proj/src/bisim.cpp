#include "fuzzyts/bisim.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "fuzzyts/error.hpp"
#include "fuzzyts/parallel.hpp"

namespace fuzzyts {

std::string_view to_string(FailureKind kind) {
  switch (kind) {
    case FailureKind::kLeftOutside: return "left-outside";
    case FailureKind::kRightOutside: return "right-outside";
    case FailureKind::kBlockMismatch: return "block-mismatch";
    case FailureKind::kLeftUnmatched: return "left-unmatched";
    case FailureKind::kRightUnmatched: return "right-unmatched";
    case FailureKind::kFinalMismatch: return "final-mismatch";
    case FailureKind::kInitMismatch: return "init-mismatch";
    case FailureKind::kImageMismatch: return "image-mismatch";
    case FailureKind::kAbsentPair: return "absent-pair";
  }
  return "unknown";
}

namespace {

void require_compatible(const Fts& f1, const Fts& f2, const Relation& r) {
  require_same_labels(f1, f2);
  if (r.left_size() != f1.num_states() || r.right_size() != f2.num_states())
    throw Error("relation universe mismatch: relation is " + std::to_string(r.left_size()) + "x" +
                std::to_string(r.right_size()) + ", systems have " + std::to_string(f1.num_states()) +
                " and " + std::to_string(f2.num_states()) + " states");
}

void block_sups(const FuzzySet& mu, std::span<const std::size_t> block_of, std::span<Degree> sups) {
  std::ranges::fill(sups, Degree::zero());
  for (const auto& [state, d] : mu.entries())
    if (block_of[state] != kNoBlock) sups[block_of[state]] = max(sups[block_of[state]], d);
}

// First positive entry of mu outside the projection, if any.
const FuzzyEntry* first_outside(const FuzzySet& mu, std::span<const std::size_t> block_of) {
  for (const auto& e : mu.entries())
    if (block_of[e.state] == kNoBlock) return &e;
  return nullptr;
}

// Precomputed per-(state, label) data for the parallel Gamma kernel: whether
// the image vanishes off the projection, and its supremum on every block.
struct Signatures {
  std::size_t labels = 0;
  std::size_t blocks = 0;
  std::vector<std::uint8_t> clean;
  std::vector<Degree> sups;

  std::span<const Degree> row(StateIndex s, LabelIndex a) const {
    return std::span(sups).subspan((std::size_t{s} * labels + a) * blocks, blocks);
  }
  bool is_clean(StateIndex s, LabelIndex a) const { return clean[std::size_t{s} * labels + a] != 0; }
};

Signatures signatures(const Fts& f, std::span<const std::size_t> block_of, std::size_t num_blocks) {
  Signatures sig;
  sig.labels = f.num_labels();
  sig.blocks = num_blocks;
  const std::size_t n = f.num_states();
  sig.clean.assign(n * sig.labels, 0);
  sig.sups.assign(n * sig.labels * num_blocks, Degree::zero());
  const auto count = static_cast<std::ptrdiff_t>(n);
  FUZZYTS_OMP_PRAGMA("omp parallel for schedule(static)")
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto s = static_cast<StateIndex>(i);
    for (LabelIndex a = 0; a < sig.labels; ++a) {
      const FuzzySet& mu = f.delta(s, a);
      const std::size_t slot = std::size_t{s} * sig.labels + a;
      sig.clean[slot] = first_outside(mu, block_of) == nullptr ? 1 : 0;
      block_sups(mu, block_of, std::span(sig.sups).subspan(slot * num_blocks, num_blocks));
    }
  }
  return sig;
}

}  // namespace

std::optional<Witness> pair_failure(const Fts& f1, const Fts& f2, const BlockDecomposition& d,
                                    StateIndex s, StateIndex t) {
  std::vector<Degree> left_sups(d.blocks.size()), right_sups(d.blocks.size());
  for (LabelIndex a = 0; a < f1.num_labels(); ++a) {
    const FuzzySet& mu = f1.delta(s, a);
    const FuzzySet& eta = f2.delta(t, a);
    if (const FuzzyEntry* e = first_outside(mu, d.block_of_left))
      return Witness{s, t, a, FailureKind::kLeftOutside, std::nullopt, e->state, e->degree, Degree::zero()};
    if (const FuzzyEntry* e = first_outside(eta, d.block_of_right))
      return Witness{s, t, a, FailureKind::kRightOutside, std::nullopt, e->state, Degree::zero(), e->degree};
    block_sups(mu, d.block_of_left, left_sups);
    block_sups(eta, d.block_of_right, right_sups);
    for (std::size_t c = 0; c < d.blocks.size(); ++c)
      if (left_sups[c] != right_sups[c])
        return Witness{s, t, a, FailureKind::kBlockMismatch, c, std::nullopt, left_sups[c], right_sups[c]};
  }
  return std::nullopt;
}

Verdict check_bisimulation(const Fts& f1, const Fts& f2, const Relation& r) {
  require_compatible(f1, f2, r);
  const BlockDecomposition d = decompose(r);
  for (auto [s, t] : r.pairs())
    if (auto w = pair_failure(f1, f2, d, s, t)) return Verdict::fail(*w);
  return Verdict::pass();
}

bool check_bisimulation_naive(const Fts& f1, const Fts& f2, const Relation& r, std::size_t cap) {
  require_compatible(f1, f2, r);
  const std::size_t n1 = f1.num_states(), n2 = f2.num_states();
  if (n1 + n2 > cap)
    throw Error("cap exceeded: " + std::to_string(n1 + n2) + " states exceed the naive cap of " + std::to_string(cap));

  auto members = [](std::uint64_t mask, std::size_t n) {
    std::vector<StateIndex> out;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) out.push_back(static_cast<StateIndex>(i));
    return out;
  };
  std::vector<std::pair<std::vector<StateIndex>, std::vector<StateIndex>>> correlational;
  for (std::uint64_t u = 0; u < (std::uint64_t{1} << n1); ++u) {
    auto left = members(u, n1);
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << n2); ++v) {
      auto right = members(v, n2);
      if (is_correlational(r, left, right)) correlational.emplace_back(left, right);
    }
  }
  for (auto [s, t] : r.pairs())
    for (LabelIndex a = 0; a < f1.num_labels(); ++a)
      for (const auto& [left, right] : correlational)
        if (sup_over(f1.delta(s, a), left) != sup_over(f2.delta(t, a), right)) return false;
  return true;
}

Verdict check_strong_bisimulation(const Fts& f1, const Fts& f2, const Relation& r) {
  require_compatible(f1, f2, r);
  for (auto [s, t] : r.pairs()) {
    for (LabelIndex a = 0; a < f1.num_labels(); ++a) {
      const FuzzySet& mu = f1.delta(s, a);
      const FuzzySet& eta = f2.delta(t, a);
      for (const auto& [target, gamma_degree] : mu.entries()) {
        Degree best;
        for (const auto& [match, g] : eta.entries())
          if (r.contains(target, match)) best = max(best, g);
        if (best < gamma_degree)
          return Verdict::fail({s, t, a, FailureKind::kLeftUnmatched, std::nullopt, target, gamma_degree, best});
      }
      for (const auto& [target, gamma_degree] : eta.entries()) {
        Degree best;
        for (const auto& [match, g] : mu.entries())
          if (r.contains(match, target)) best = max(best, g);
        if (best < gamma_degree)
          return Verdict::fail({s, t, a, FailureKind::kRightUnmatched, std::nullopt, target, best, gamma_degree});
      }
    }
  }
  return Verdict::pass();
}

Verdict check_equivalence_bisimulation(const Fts& f, const Relation& r) {
  require_compatible(f, f, r);
  const auto classes = equivalence_classes(r);
  std::vector<std::size_t> class_of(f.num_states());
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (StateIndex s : classes[c]) class_of[s] = c;
  std::vector<Degree> left(classes.size()), right(classes.size());
  for (auto [s, t] : r.pairs())
    for (LabelIndex a = 0; a < f.num_labels(); ++a) {
      block_sups(f.delta(s, a), class_of, left);
      block_sups(f.delta(t, a), class_of, right);
      for (std::size_t c = 0; c < classes.size(); ++c)
        if (left[c] != right[c])
          return Verdict::fail({s, t, a, FailureKind::kBlockMismatch, c, std::nullopt, left[c], right[c]});
    }
  return Verdict::pass();
}

Verdict check_automaton_bisimulation(const FuzzyAutomaton& m1, const FuzzyAutomaton& m2, const Relation& r) {
  Verdict base = check_bisimulation(m1.base, m2.base, r);
  if (!base) return base;
  for (auto [q1, q2] : r.pairs())
    if (m1.final_set[q1] != m2.final_set[q2])
      return Verdict::fail({q1, q2, std::nullopt, FailureKind::kFinalMismatch, std::nullopt, std::nullopt,
                            m1.final_set[q1], m2.final_set[q2]});
  return Verdict::pass();
}

Relation gamma_serial(const Fts& f1, const Fts& f2, const Relation& r) {
  require_compatible(f1, f2, r);
  const BlockDecomposition d = decompose(r);
  Relation out(f1.num_states(), f2.num_states());
  for (StateIndex s = 0; s < f1.num_states(); ++s)
    for (StateIndex t = 0; t < f2.num_states(); ++t)
      if (!pair_failure(f1, f2, d, s, t)) out.insert(s, t);
  return out;
}

Relation gamma(const Fts& f1, const Fts& f2, const Relation& r) {
  require_compatible(f1, f2, r);
  const BlockDecomposition d = decompose(r);
  const Signatures left = signatures(f1, d.block_of_left, d.blocks.size());
  const Signatures right = signatures(f2, d.block_of_right, d.blocks.size());

  const std::size_t n2 = f2.num_states();
  const std::size_t labels = f1.num_labels();
  Relation out(f1.num_states(), n2);
  std::span<std::uint8_t> bits = out.bits();
  const auto count = static_cast<std::ptrdiff_t>(f1.num_states());
  FUZZYTS_OMP_PRAGMA("omp parallel for schedule(dynamic, 4)")
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto s = static_cast<StateIndex>(i);
    for (StateIndex t = 0; t < n2; ++t) {
      bool ok = true;
      for (LabelIndex a = 0; a < labels && ok; ++a)
        ok = left.is_clean(s, a) && right.is_clean(t, a) && std::ranges::equal(left.row(s, a), right.row(t, a));
      bits[std::size_t{s} * n2 + t] = ok ? 1 : 0;
    }
  }
  return out;
}

std::vector<Relation> bisimilarity_iterates(const Fts& f1, const Fts& f2) {
  require_same_labels(f1, f2);
  std::vector<Relation> seq{Relation::full(f1.num_states(), f2.num_states())};
  while (true) {
    Relation next = gamma(f1, f2, seq.back());
    if (next == seq.back()) break;
    seq.push_back(std::move(next));
  }
  return seq;
}

Relation bisimilarity(const Fts& f1, const Fts& f2) { return std::move(bisimilarity_iterates(f1, f2).back()); }

bool are_bisimilar(const Fts& f1, const Fts& f2) { return bisimilarity(f1, f2).contains(f1.init(), f2.init()); }

Relation self_bisimilarity(const Fts& f) {
  Relation r = bisimilarity(f, f);
  if (!is_equivalence(r)) throw std::logic_error("self-bisimilarity is not an equivalence");
  return r;
}

std::optional<PairExplanation> explain_non_bisimilar(const Fts& f1, const Fts& f2, StateIndex s, StateIndex t) {
  const auto seq = bisimilarity_iterates(f1, f2);
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (seq[i].contains(s, t) && !seq[i + 1].contains(s, t)) {
      auto cause = pair_failure(f1, f2, decompose(seq[i]), s, t);
      if (!cause) throw std::logic_error("pair removed by Gamma without a failure");
      return PairExplanation{i, *cause};
    }
  }
  return std::nullopt;
}

Relation z_closure(const Relation& r) {
  // R_{n+1} = R ∘ R_n^{-1} ∘ R; the sequence is increasing, so it stops at R*.
  Relation current = r;
  while (true) {
    Relation next = rel_union(current, rel_compose(rel_compose(r, inverse(current)), r));
    if (next == current) return current;
    current = std::move(next);
  }
}

bool is_z_closed(const Relation& r) { return rel_compose(rel_compose(r, inverse(r)), r).is_subset_of(r); }

Relation diagonal(const Fts& f) { return Relation::identity(f.num_states()); }

namespace {

std::size_t require_enumerable(const Fts& f1, const Fts& f2, std::size_t cap) {
  require_same_labels(f1, f2);
  const std::size_t pairs = f1.num_states() * f2.num_states();
  if (pairs > cap || pairs >= 63)
    throw Error("cap exceeded: " + std::to_string(pairs) + " state pairs exceed the enumeration cap of " +
                std::to_string(cap));
  return pairs;
}

Relation from_mask(std::size_t n1, std::size_t n2, std::uint64_t mask) {
  Relation r(n1, n2);
  auto bits = r.bits();
  for (std::size_t i = 0; i < bits.size(); ++i) bits[i] = (mask >> i & 1U) ? 1 : 0;
  return r;
}

}  // namespace

std::vector<Relation> all_bisimulations(const Fts& f1, const Fts& f2, std::size_t cap) {
  const std::size_t pairs = require_enumerable(f1, f2, cap);
  std::vector<Relation> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    Relation r = from_mask(f1.num_states(), f2.num_states(), mask);
    if (check_bisimulation(f1, f2, r)) out.push_back(std::move(r));
  }
  return out;
}

Relation enumerate_bisimulations_bruteforce_serial(const Fts& f1, const Fts& f2, std::size_t cap) {
  const std::size_t pairs = require_enumerable(f1, f2, cap);
  std::uint64_t acc = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask)
    if ((mask & ~acc) != 0 && check_bisimulation(f1, f2, from_mask(f1.num_states(), f2.num_states(), mask)))
      acc |= mask;
  return from_mask(f1.num_states(), f2.num_states(), acc);
}

Relation enumerate_bisimulations_bruteforce(const Fts& f1, const Fts& f2, std::size_t cap) {
  const std::size_t pairs = require_enumerable(f1, f2, cap);
  const auto total = static_cast<std::int64_t>(std::uint64_t{1} << pairs);
  const std::size_t n1 = f1.num_states(), n2 = f2.num_states();
  std::uint64_t acc = 0;
  FUZZYTS_OMP_PRAGMA("omp parallel")
  {
    std::uint64_t local = 0;
    FUZZYTS_OMP_PRAGMA("omp for schedule(dynamic, 64) nowait")
    for (std::int64_t m = 0; m < total; ++m) {
      const auto mask = static_cast<std::uint64_t>(m);
      if ((mask & ~local) != 0 && check_bisimulation(f1, f2, from_mask(n1, n2, mask))) local |= mask;
    }
    FUZZYTS_OMP_PRAGMA("omp critical(fuzzyts_bruteforce_union)")
    acc |= local;
  }
  return from_mask(n1, n2, acc);
}

}  // namespace fuzzyts
