#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "fuzzyts/algebra.hpp"
#include "fuzzyts/fts.hpp"
#include "fuzzyts/relation.hpp"

namespace fuzzyts {

// One model file: an FTS, and a fuzzy automaton when any "final:" line exists.
struct Model {
  std::string name;
  Fts system;
  std::optional<FuzzySet> final_set;

  bool is_automaton() const { return final_set.has_value(); }
  // Throws Error if the model has no final lines.
  FuzzyAutomaton automaton() const;

  friend bool operator==(const Model&, const Model&) = default;
};

// Grammar (one item per line, '#' starts a comment, blank lines ignored):
//   system NAME
//   states: ID...
//   labels: ID...
//   init: ID
//   trans: SRC LABEL DEGREE DST
//   final: STATE DEGREE
// Every diagnostic is a ParseError with line and column.
Model parse_model(std::string_view text);

// Canonical text: sorted states and labels, transitions by (src, label, dst),
// minimal decimal degrees. parse_model(serialize_model(m)) == m.
std::string serialize_model(const Model& model);
std::string serialize_model(std::string_view name, const Fts& f);

// Lines "rel: LEFT RIGHT" resolved against the two systems.
Relation parse_relation(std::string_view text, const Fts& left, const Fts& right);
std::string serialize_relation(const Relation& r, const Fts& left, const Fts& right);

// Lines "map: LEFT -> RIGHT"; the map must be total on `domain`.
StateMap parse_state_map(std::string_view text, const Fts& domain, const Fts& codomain);
std::string serialize_state_map(const StateMap& map, const Fts& domain, const Fts& codomain);

}  // namespace fuzzyts
