#include "fuzzyts/algebra.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>

#include "fuzzyts/error.hpp"

namespace fuzzyts {

std::string product_state_name(std::string_view left, std::string_view right) {
  std::string out;
  out.reserve(left.size() + right.size() + 3);
  out += '(';
  out += left;
  out += ',';
  out += right;
  out += ')';
  return out;
}

std::string class_state_name(std::string_view least_member) { return "[" + std::string(least_member) + "]"; }

Fts parallel_compose(const Fts& f1, const Fts& f2) {
  FtsBuilder b;
  for (const auto& s : f1.states())
    for (const auto& t : f2.states()) b.add_state(product_state_name(s, t));

  std::vector<std::string> labels(f1.labels().begin(), f1.labels().end());
  labels.insert(labels.end(), f2.labels().begin(), f2.labels().end());
  std::ranges::sort(labels);
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  for (const auto& a : labels) b.add_label(a);
  b.set_init(product_state_name(f1.state_name(f1.init()), f2.state_name(f2.init())));

  for (StateIndex s1 = 0; s1 < f1.num_states(); ++s1) {
    for (StateIndex s2 = 0; s2 < f2.num_states(); ++s2) {
      const std::string source = product_state_name(f1.state_name(s1), f2.state_name(s2));
      for (const auto& name : labels) {
        const auto a1 = f1.find_label(name);
        const auto a2 = f2.find_label(name);
        if (a1 && a2) {
          for (const auto& [x, d1] : f1.delta(s1, *a1).entries())
            for (const auto& [y, d2] : f2.delta(s2, *a2).entries())
              b.add_transition(source, name, min(d1, d2), product_state_name(f1.state_name(x), f2.state_name(y)));
        } else if (a1) {
          for (const auto& [x, d1] : f1.delta(s1, *a1).entries())
            b.add_transition(source, name, d1, product_state_name(f1.state_name(x), f2.state_name(s2)));
        } else {
          for (const auto& [y, d2] : f2.delta(s2, *a2).entries())
            b.add_transition(source, name, d2, product_state_name(f1.state_name(s1), f2.state_name(y)));
        }
      }
    }
  }
  return b.build();
}

bool is_subsystem(const Fts& f1, const Fts& f2) {
  require_same_labels(f1, f2);
  std::vector<StateIndex> embed(f1.num_states());
  std::vector<std::optional<StateIndex>> back(f2.num_states());
  for (StateIndex s = 0; s < f1.num_states(); ++s) {
    const auto t = f2.find_state(f1.state_name(s));
    if (!t) return false;
    embed[s] = *t;
    back[*t] = s;
  }
  for (StateIndex s = 0; s < f1.num_states(); ++s)
    for (LabelIndex a = 0; a < f1.num_labels(); ++a) {
      const auto big = f2.delta(embed[s], a).entries();
      const auto small = f1.delta(s, a).entries();
      if (big.size() != small.size()) return false;
      for (std::size_t i = 0; i < big.size(); ++i) {
        // Embedding preserves name order, so the entry lists align.
        if (!back[big[i].state]) return false;
        if (*back[big[i].state] != small[i].state || big[i].degree != small[i].degree) return false;
      }
    }
  return true;
}

StateMap::StateMap(std::size_t codomain_size, std::vector<StateIndex> images)
    : codomain_size_(codomain_size), images_(std::move(images)) {
  for (StateIndex t : images_)
    if (t >= codomain_size_) throw Error("state map image outside the codomain");
}

namespace {

void require_map_between(const Fts& f1, const Fts& f2, const StateMap& map) {
  require_same_labels(f1, f2);
  if (map.domain_size() != f1.num_states()) throw Error("partial map: state map is not total on the domain");
  if (map.codomain_size() != f2.num_states()) throw Error("state map codomain does not match the target system");
}

}  // namespace

Verdict check_homomorphism(const Fts& f1, const Fts& f2, const StateMap& map) {
  require_map_between(f1, f2, map);
  if (map(f1.init()) != f2.init())
    return Verdict::fail({f1.init(), map(f1.init()), std::nullopt, FailureKind::kInitMismatch, std::nullopt,
                          f2.init(), Degree::zero(), Degree::zero()});
  std::vector<Degree> preimage_sup(f2.num_states());
  for (StateIndex s = 0; s < f1.num_states(); ++s)
    for (LabelIndex a = 0; a < f1.num_labels(); ++a) {
      std::ranges::fill(preimage_sup, Degree::zero());
      for (const auto& [target, d] : f1.delta(s, a).entries())
        preimage_sup[map(target)] = max(preimage_sup[map(target)], d);
      const FuzzySet& image = f2.delta(map(s), a);
      for (StateIndex t = 0; t < f2.num_states(); ++t)
        if (preimage_sup[t] != image[t])
          return Verdict::fail({s, t, a, FailureKind::kImageMismatch, std::nullopt, map(s), preimage_sup[t], image[t]});
    }
  return Verdict::pass();
}

Fts hom_image(const Fts& f1, const Fts& f2, const StateMap& map) {
  if (!check_homomorphism(f1, f2, map)) throw Error("not a homomorphism");
  std::vector<bool> in_image(f2.num_states(), false);
  for (StateIndex t : map.images()) in_image[t] = true;

  FtsBuilder b;
  for (StateIndex t = 0; t < f2.num_states(); ++t)
    if (in_image[t]) b.add_state(f2.state_name(t));
  for (const auto& a : f2.labels()) b.add_label(a);
  b.set_init(f2.state_name(f2.init()));
  for (StateIndex t = 0; t < f2.num_states(); ++t) {
    if (!in_image[t]) continue;
    for (LabelIndex a = 0; a < f2.num_labels(); ++a)
      for (const auto& [u, d] : f2.delta(t, a).entries())
        b.add_transition(f2.state_name(t), f2.label_name(a), d, f2.state_name(u));
  }
  Fts image = b.build();
  if (!is_subsystem(image, f2)) throw std::logic_error("homomorphism image is not a subsystem");
  return image;
}

Relation kernel(const StateMap& map) {
  const std::size_t n = map.domain_size();
  Relation r(n, n);
  for (StateIndex s = 0; s < n; ++s)
    for (StateIndex u = 0; u < n; ++u)
      if (map(s) == map(u)) r.insert(s, u);
  assert(is_equivalence(r));
  return r;
}

Relation graph_of(const StateMap& map) {
  Relation r(map.domain_size(), map.codomain_size());
  for (StateIndex s = 0; s < map.domain_size(); ++s) r.insert(s, map(s));
  return r;
}

Relation push_relation(const StateMap& map, const Relation& r) {
  if (r.left_size() != map.domain_size() || r.right_size() != map.domain_size())
    throw Error("relation universe mismatch: push needs a relation on the map's domain");
  Relation out(map.codomain_size(), map.codomain_size());
  for (auto [s, u] : r.pairs()) out.insert(map(s), map(u));
  return out;
}

Relation pull_relation(const StateMap& map, const Relation& r) {
  if (r.left_size() != map.codomain_size() || r.right_size() != map.codomain_size())
    throw Error("relation universe mismatch: pull needs a relation on the map's codomain");
  const std::size_t n = map.domain_size();
  Relation out(n, n);
  for (StateIndex s = 0; s < n; ++s)
    for (StateIndex u = 0; u < n; ++u)
      if (r.contains(map(s), map(u))) out.insert(s, u);
  return out;
}

QuotientFts quotient(const Fts& f, const Relation& r) {
  if (r.left_size() != f.num_states() || r.right_size() != f.num_states())
    throw Error("relation universe mismatch: quotient needs a relation on the system's states");
  const auto classes = equivalence_classes(r);
  std::vector<std::size_t> class_index(f.num_states());
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (StateIndex s : classes[c]) class_index[s] = c;

  std::vector<std::string> names;
  FtsBuilder b;
  for (const auto& cls : classes) {
    names.push_back(class_state_name(f.state_name(cls.front())));
    b.add_state(names.back());
  }
  for (const auto& a : f.labels()) b.add_label(a);
  b.set_init(names[class_index[f.init()]]);

  std::vector<Degree> row(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c)
    for (LabelIndex a = 0; a < f.num_labels(); ++a) {
      std::ranges::fill(row, Degree::zero());
      for (StateIndex member : classes[c])
        for (const auto& [target, d] : f.delta(member, a).entries())
          row[class_index[target]] = max(row[class_index[target]], d);
      for (std::size_t c2 = 0; c2 < classes.size(); ++c2)
        if (row[c2].is_positive()) b.add_transition(names[c], f.label_name(a), row[c2], names[c2]);
    }

  QuotientFts q{b.build(), {}, {}};
  q.classes.resize(classes.size());
  std::vector<StateIndex> quotient_state(classes.size());
  for (std::size_t c = 0; c < classes.size(); ++c) {
    quotient_state[c] = q.quotient.state(names[c]);
    q.classes[quotient_state[c]] = classes[c];
  }
  q.class_of.resize(f.num_states());
  for (StateIndex s = 0; s < f.num_states(); ++s) q.class_of[s] = quotient_state[class_index[s]];
  return q;
}

QuotientFts minimize(const Fts& f) {
  QuotientFts q = quotient(f, self_bisimilarity(f));
  assert(are_bisimilar(f, q.quotient));
  assert(self_bisimilarity(q.quotient) == diagonal(q.quotient));
  return q;
}

}  // namespace fuzzyts
