#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fuzzyts/fts.hpp"
#include "fuzzyts/relation.hpp"

namespace fuzzyts::testing {

inline Degree deg(const char* text) { return Degree::parse(text); }

struct Edge {
  const char* source;
  const char* label;
  const char* degree;
  const char* target;
};

inline Fts make_fts(std::vector<std::string> states, std::vector<std::string> labels, std::string init,
                    std::vector<Edge> edges) {
  FtsBuilder b;
  for (auto& s : states) b.add_state(std::move(s));
  for (auto& a : labels) b.add_label(std::move(a));
  b.set_init(std::move(init));
  for (const auto& e : edges) b.add_transition(e.source, e.label, Degree::parse(e.degree), e.target);
  return b.build();
}

// Same language 1/eps + 0.9/a + 0.8/ab + 0.7/ac from s0 and t0, but s0 and t0 are not bisimilar.
inline Fts fig1_s() {
  return make_fts({"s0", "s1", "s2", "s3"}, {"a", "b", "c"}, "s0",
                  {{"s0", "a", "0.9", "s1"}, {"s1", "b", "0.8", "s2"}, {"s1", "c", "0.7", "s3"}});
}

inline Fts fig1_t() {
  return make_fts({"t0", "t1", "t1'", "t2", "t3"}, {"a", "b", "c"}, "t0",
                  {{"t0", "a", "0.9", "t1"},
                   {"t0", "a", "0.9", "t1'"},
                   {"t1", "b", "0.8", "t2"},
                   {"t1'", "c", "0.7", "t3"}});
}

inline Fts fig2_s() {
  return make_fts({"s0", "s1", "s2", "s3", "s4"}, {"a", "b", "c"}, "s0",
                  {{"s0", "a", "0.9", "s1"},
                   {"s0", "a", "0.9", "s2"},
                   {"s1", "b", "0.8", "s3"},
                   {"s1", "c", "0.7", "s4"},
                   {"s2", "b", "0.8", "s3"},
                   {"s2", "c", "0.7", "s4"}});
}

inline Fts cex_intersect() {
  return make_fts({"s0", "s", "t"}, {"a"}, "s0", {{"s0", "a", "0.8", "s"}, {"s0", "a", "0.8", "t"}});
}

inline Fts cex_nonstrong_left() {
  return make_fts({"s0", "s1", "s2"}, {"a"}, "s0", {{"s0", "a", "0.8", "s1"}, {"s0", "a", "0.3", "s2"}});
}

inline Fts cex_nonstrong_right() {
  return make_fts({"t0", "u1", "u2"}, {"a"}, "t0", {{"t0", "a", "0.3", "u1"}, {"t0", "a", "0.8", "u2"}});
}

// Relation from state-name pairs.
inline Relation rel(const Fts& left, const Fts& right, std::vector<std::pair<std::string, std::string>> pairs) {
  Relation r(left.num_states(), right.num_states());
  for (const auto& [s, t] : pairs) r.insert(left.state(s), right.state(t));
  return r;
}

inline Relation cex_nonstrong_relation() {
  return rel(cex_nonstrong_left(), cex_nonstrong_right(), {{"s0", "t0"}, {"s1", "u1"}, {"s2", "u1"}, {"s2", "u2"}});
}

// Equivalence from classes of state names.
inline Relation equivalence(const Fts& f, std::vector<std::vector<std::string>> classes) {
  Relation r(f.num_states(), f.num_states());
  for (const auto& cls : classes)
    for (const auto& a : cls)
      for (const auto& b : cls) r.insert(f.state(a), f.state(b));
  return r;
}

// Classes of an equivalence as state names, for readable comparisons.
inline std::vector<std::vector<std::string>> class_names(const Fts& f, const Relation& r) {
  std::vector<std::vector<std::string>> out;
  for (const auto& cls : equivalence_classes(r)) {
    auto& names = out.emplace_back();
    for (StateIndex s : cls) names.push_back(f.state_name(s));
  }
  return out;
}

}  // namespace fuzzyts::testing
