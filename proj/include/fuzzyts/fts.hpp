#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "fuzzyts/degree.hpp"
#include "fuzzyts/fuzzy_set.hpp"

namespace fuzzyts {

// Nonempty run of [A-Za-z0-9_'] plus the structural characters "(),[]" that
// product and quotient construction put into derived state names.
bool is_valid_identifier(std::string_view id);

// A finite fuzzy transition system (S, A, delta, s0) with a total transition
// function. States and labels are kept sorted bytewise by name, so index order
// is name order and every traversal below is deterministic.
class Fts {
 public:
  std::size_t num_states() const { return states_.size(); }
  std::size_t num_labels() const { return labels_.size(); }
  std::span<const std::string> states() const { return states_; }
  std::span<const std::string> labels() const { return labels_; }
  const std::string& state_name(StateIndex s) const { return states_.at(s); }
  const std::string& label_name(LabelIndex a) const { return labels_.at(a); }

  std::optional<StateIndex> find_state(std::string_view name) const;
  std::optional<LabelIndex> find_label(std::string_view name) const;
  // Throw Error("unknown state 'x'") / Error("unknown label 'x'").
  StateIndex state(std::string_view name) const;
  LabelIndex label(std::string_view name) const;

  StateIndex init() const { return init_; }

  // delta(s, a); the all-zero set when no transition was declared.
  const FuzzySet& delta(StateIndex s, LabelIndex a) const;
  Degree degree(StateIndex s, LabelIndex a, StateIndex target) const { return delta(s, a)[target]; }

  // Number of (s, a, t) with positive degree.
  std::size_t num_transitions() const;

  friend bool operator==(const Fts&, const Fts&) = default;

 private:
  friend class FtsBuilder;
  Fts() = default;

  std::vector<std::string> states_;
  std::vector<std::string> labels_;
  std::vector<FuzzySet> delta_;  // row-major [state][label]
  StateIndex init_ = 0;
};

// Collects a system by name and produces the canonical Fts.
class FtsBuilder {
 public:
  // Each throws Error on a malformed identifier or a repeated declaration.
  FtsBuilder& add_state(std::string name);
  FtsBuilder& add_label(std::string name);
  FtsBuilder& set_init(std::string name);
  // Zero-degree transitions are accepted and dropped; repeating a
  // (source, label, target) triple is an error even when the degrees agree.
  FtsBuilder& add_transition(std::string_view source, std::string_view label, Degree degree,
                             std::string_view target);

  // Throws Error("no states"), Error("missing init"), or an unknown-identifier error.
  Fts build() const;

 private:
  struct Triple {
    std::string source, label, target;
    Degree degree;
  };
  std::vector<std::string> states_;
  std::vector<std::string> labels_;
  std::optional<std::string> init_;
  std::vector<Triple> transitions_;
  std::map<std::string, std::size_t, std::less<>> state_seen_;
  std::map<std::string, std::size_t, std::less<>> label_seen_;
  std::map<std::tuple<std::string, std::string, std::string>, std::size_t> triple_seen_;
};

// A model description before validation. `line` fields feed diagnostics.
struct RawTransition {
  std::string source;
  std::string label;
  Degree degree;
  std::string target;
  std::size_t line = 0;
};

struct RawFinal {
  std::string state;
  Degree degree;
  std::size_t line = 0;
};

struct RawModel {
  std::vector<std::string> states;
  std::vector<std::string> labels;
  std::optional<std::string> init;
  std::vector<RawTransition> transitions;
};

// Throws Error naming the first violated invariant.
Fts validate_fts(const RawModel& raw);

// (Q, Sigma, delta, q0, F): a finite FTS with a fuzzy set of final states.
struct FuzzyAutomaton {
  Fts base;
  FuzzySet final_set;

  FuzzyAutomaton(Fts base_system, FuzzySet finals);

  friend bool operator==(const FuzzyAutomaton&, const FuzzyAutomaton&) = default;
};

// Builds a final-state set over `f` from (name, degree) pairs; throws on
// unknown or repeated states.
FuzzySet make_final_set(const Fts& f, std::span<const RawFinal> finals);

// Throws Error("label alphabet mismatch") unless both systems share the same label set.
void require_same_labels(const Fts& f1, const Fts& f2);

}  // namespace fuzzyts
