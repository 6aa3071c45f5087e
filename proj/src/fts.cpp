#include "fuzzyts/fts.hpp"

#include <algorithm>

#include "fuzzyts/error.hpp"

namespace fuzzyts {

namespace {

bool is_identifier_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
         c == '\'' || c == '(' || c == ')' || c == ',' || c == '[' || c == ']';
}

template <typename Index>
std::optional<Index> find_sorted(std::span<const std::string> names, std::string_view name) {
  auto it = std::ranges::lower_bound(names, name, std::less<>{});
  if (it == names.end() || *it != name) return std::nullopt;
  return static_cast<Index>(it - names.begin());
}

void require_identifier(std::string_view kind, std::string_view id) {
  if (!is_valid_identifier(id))
    throw Error("invalid " + std::string(kind) + " identifier '" + std::string(id) + "'");
}

}  // namespace

bool is_valid_identifier(std::string_view id) {
  return !id.empty() && std::ranges::all_of(id, is_identifier_char);
}

std::optional<StateIndex> Fts::find_state(std::string_view name) const {
  return find_sorted<StateIndex>(states_, name);
}

std::optional<LabelIndex> Fts::find_label(std::string_view name) const {
  return find_sorted<LabelIndex>(labels_, name);
}

StateIndex Fts::state(std::string_view name) const {
  if (auto s = find_state(name)) return *s;
  throw Error("unknown state '" + std::string(name) + "'");
}

LabelIndex Fts::label(std::string_view name) const {
  if (auto a = find_label(name)) return *a;
  throw Error("unknown label '" + std::string(name) + "'");
}

const FuzzySet& Fts::delta(StateIndex s, LabelIndex a) const {
  if (s >= states_.size()) throw Error("state index " + std::to_string(s) + " out of range");
  if (a >= labels_.size()) throw Error("label index " + std::to_string(a) + " out of range");
  return delta_[std::size_t{s} * labels_.size() + a];
}

std::size_t Fts::num_transitions() const {
  std::size_t n = 0;
  for (const auto& mu : delta_) n += mu.support_size();
  return n;
}

FtsBuilder& FtsBuilder::add_state(std::string name) {
  require_identifier("state", name);
  if (!state_seen_.emplace(name, states_.size()).second)
    throw Error("duplicate state '" + name + "'");
  states_.push_back(std::move(name));
  return *this;
}

FtsBuilder& FtsBuilder::add_label(std::string name) {
  require_identifier("label", name);
  if (!label_seen_.emplace(name, labels_.size()).second)
    throw Error("duplicate label '" + name + "'");
  labels_.push_back(std::move(name));
  return *this;
}

FtsBuilder& FtsBuilder::set_init(std::string name) {
  if (init_) throw Error("init declared twice");
  init_ = std::move(name);
  return *this;
}

FtsBuilder& FtsBuilder::add_transition(std::string_view source, std::string_view label, Degree degree,
                                       std::string_view target) {
  auto key = std::make_tuple(std::string(source), std::string(label), std::string(target));
  if (!triple_seen_.emplace(key, transitions_.size()).second)
    throw Error("duplicate transition " + std::string(source) + " " + std::string(label) + " " +
                std::string(target));
  transitions_.push_back({std::string(source), std::string(label), std::string(target), degree});
  return *this;
}

Fts FtsBuilder::build() const {
  if (states_.empty()) throw Error("no states");
  if (!init_) throw Error("missing init");

  Fts f;
  f.states_ = states_;
  f.labels_ = labels_;
  std::ranges::sort(f.states_);
  std::ranges::sort(f.labels_);
  f.init_ = f.state(*init_);

  const std::size_t n = f.states_.size();
  std::vector<std::vector<FuzzyEntry>> rows(n * f.labels_.size());
  for (const auto& t : transitions_) {
    const StateIndex s = f.state(t.source);
    const LabelIndex a = f.label(t.label);
    const StateIndex d = f.state(t.target);
    rows[std::size_t{s} * f.labels_.size() + a].push_back({d, t.degree});
  }
  f.delta_.reserve(rows.size());
  for (auto& row : rows) f.delta_.emplace_back(n, std::move(row));
  return f;
}

Fts validate_fts(const RawModel& raw) {
  FtsBuilder b;
  for (const auto& s : raw.states) b.add_state(s);
  for (const auto& a : raw.labels) b.add_label(a);
  if (raw.init) b.set_init(*raw.init);
  for (const auto& t : raw.transitions) b.add_transition(t.source, t.label, t.degree, t.target);
  return b.build();
}

FuzzyAutomaton::FuzzyAutomaton(Fts base_system, FuzzySet finals)
    : base(std::move(base_system)), final_set(std::move(finals)) {
  if (final_set.universe_size() != base.num_states())
    throw Error("final set universe does not match the automaton's states");
}

FuzzySet make_final_set(const Fts& f, std::span<const RawFinal> finals) {
  std::vector<FuzzyEntry> entries;
  std::vector<bool> seen(f.num_states(), false);
  for (const auto& fin : finals) {
    const StateIndex s = f.state(fin.state);
    if (seen[s]) throw Error("duplicate final state '" + fin.state + "'");
    seen[s] = true;
    entries.push_back({s, fin.degree});
  }
  return FuzzySet(f.num_states(), std::move(entries));
}

void require_same_labels(const Fts& f1, const Fts& f2) {
  if (!std::ranges::equal(f1.labels(), f2.labels())) throw Error("label alphabet mismatch");
}

}  // namespace fuzzyts
