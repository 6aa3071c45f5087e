#include "fuzzyts/relation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "fuzzyts/error.hpp"

namespace fuzzyts {

Relation::Relation(std::size_t left_size, std::size_t right_size)
    : left_size_(left_size), right_size_(right_size), bits_(left_size * right_size, 0) {}

Relation::Relation(std::size_t left_size, std::size_t right_size, std::span<const StatePair> pairs)
    : Relation(left_size, right_size) {
  for (auto [s, t] : pairs) insert(s, t);
}

Relation Relation::full(std::size_t left_size, std::size_t right_size) {
  Relation r(left_size, right_size);
  std::ranges::fill(r.bits_, 1);
  return r;
}

Relation Relation::identity(std::size_t size) {
  Relation r(size, size);
  for (std::size_t i = 0; i < size; ++i) r.insert(static_cast<StateIndex>(i), static_cast<StateIndex>(i));
  return r;
}

void Relation::check(StateIndex s, StateIndex t) const {
  if (s >= left_size_ || t >= right_size_)
    throw Error("pair (" + std::to_string(s) + "," + std::to_string(t) + ") outside the relation's universes");
}

void Relation::insert(StateIndex s, StateIndex t) {
  check(s, t);
  bits_[index(s, t)] = 1;
}

void Relation::erase(StateIndex s, StateIndex t) {
  check(s, t);
  bits_[index(s, t)] = 0;
}

std::size_t Relation::size() const {
  return static_cast<std::size_t>(std::ranges::count(bits_, std::uint8_t{1}));
}

std::vector<StatePair> Relation::pairs() const {
  std::vector<StatePair> out;
  for (std::size_t s = 0; s < left_size_; ++s)
    for (std::size_t t = 0; t < right_size_; ++t)
      if (bits_[s * right_size_ + t]) out.emplace_back(static_cast<StateIndex>(s), static_cast<StateIndex>(t));
  return out;
}

std::vector<StateIndex> Relation::left_projection() const {
  std::vector<StateIndex> out;
  for (std::size_t s = 0; s < left_size_; ++s) {
    auto row = std::span(bits_).subspan(s * right_size_, right_size_);
    if (std::ranges::any_of(row, [](std::uint8_t b) { return b != 0; }))
      out.push_back(static_cast<StateIndex>(s));
  }
  return out;
}

std::vector<StateIndex> Relation::right_projection() const {
  std::vector<bool> hit(right_size_, false);
  for (auto [s, t] : pairs()) hit[t] = true;
  std::vector<StateIndex> out;
  for (std::size_t t = 0; t < right_size_; ++t)
    if (hit[t]) out.push_back(static_cast<StateIndex>(t));
  return out;
}

bool Relation::is_subset_of(const Relation& other) const {
  if (left_size_ != other.left_size_ || right_size_ != other.right_size_)
    throw Error("relation universe mismatch");
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i] && !other.bits_[i]) return false;
  return true;
}

Relation inverse(const Relation& r) {
  Relation out(r.right_size(), r.left_size());
  for (auto [s, t] : r.pairs()) out.insert(t, s);
  return out;
}

Relation rel_compose(const Relation& r, const Relation& q) {
  if (r.right_size() != q.left_size()) throw Error("relation universe mismatch in composition");
  Relation out(r.left_size(), q.right_size());
  for (auto [s, t] : r.pairs())
    for (std::size_t u = 0; u < q.right_size(); ++u)
      if (q.contains(t, static_cast<StateIndex>(u))) out.insert(s, static_cast<StateIndex>(u));
  return out;
}

namespace {

template <typename Op>
Relation combine(const Relation& r, const Relation& q, Op op) {
  if (r.left_size() != q.left_size() || r.right_size() != q.right_size())
    throw Error("relation universe mismatch");
  Relation out(r.left_size(), r.right_size());
  auto a = r.bits();
  auto b = q.bits();
  auto o = out.bits();
  for (std::size_t i = 0; i < o.size(); ++i) o[i] = op(a[i], b[i]) ? 1 : 0;
  return out;
}

}  // namespace

Relation rel_union(const Relation& r, const Relation& q) {
  return combine(r, q, [](std::uint8_t x, std::uint8_t y) { return x || y; });
}

Relation rel_intersection(const Relation& r, const Relation& q) {
  return combine(r, q, [](std::uint8_t x, std::uint8_t y) { return x && y; });
}

bool is_reflexive(const Relation& r) {
  if (r.left_size() != r.right_size()) return false;
  for (std::size_t i = 0; i < r.left_size(); ++i)
    if (!r.contains(static_cast<StateIndex>(i), static_cast<StateIndex>(i))) return false;
  return true;
}

bool is_symmetric(const Relation& r) {
  if (r.left_size() != r.right_size()) return false;
  for (auto [s, t] : r.pairs())
    if (!r.contains(t, s)) return false;
  return true;
}

bool is_transitive(const Relation& r) {
  if (r.left_size() != r.right_size()) return false;
  return rel_compose(r, r).is_subset_of(r);
}

bool is_equivalence(const Relation& r) { return is_reflexive(r) && is_symmetric(r) && is_transitive(r); }

std::vector<std::vector<StateIndex>> equivalence_classes(const Relation& r) {
  if (!is_equivalence(r)) throw Error("relation is not an equivalence");
  std::vector<std::vector<StateIndex>> classes;
  std::vector<bool> assigned(r.left_size(), false);
  for (std::size_t s = 0; s < r.left_size(); ++s) {
    if (assigned[s]) continue;
    auto& cls = classes.emplace_back();
    for (std::size_t t = s; t < r.right_size(); ++t)
      if (r.contains(static_cast<StateIndex>(s), static_cast<StateIndex>(t))) {
        cls.push_back(static_cast<StateIndex>(t));
        assigned[t] = true;
      }
  }
  return classes;
}

BlockDecomposition decompose(const Relation& r) {
  const std::size_t n1 = r.left_size();
  const std::size_t n2 = r.right_size();
  // Union-find over left states 0..n1-1 and right states n1..n1+n2-1.
  std::vector<std::size_t> parent(n1 + n2);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto pairs = r.pairs();
  std::vector<bool> in_left(n1, false), in_right(n2, false);
  for (auto [s, t] : pairs) {
    in_left[s] = true;
    in_right[t] = true;
    const std::size_t a = find(s), b = find(n1 + t);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }

  BlockDecomposition d;
  d.block_of_left.assign(n1, kNoBlock);
  d.block_of_right.assign(n2, kNoBlock);
  std::vector<std::size_t> block_of_root(n1 + n2, kNoBlock);
  // Scanning left states in order numbers blocks by their least left state.
  for (std::size_t s = 0; s < n1; ++s) {
    if (!in_left[s]) {
      d.left_outside.push_back(static_cast<StateIndex>(s));
      continue;
    }
    const std::size_t root = find(s);
    if (block_of_root[root] == kNoBlock) {
      block_of_root[root] = d.blocks.size();
      d.blocks.emplace_back();
    }
    d.block_of_left[s] = block_of_root[root];
    d.blocks[block_of_root[root]].left.push_back(static_cast<StateIndex>(s));
  }
  for (std::size_t t = 0; t < n2; ++t) {
    if (!in_right[t]) {
      d.right_outside.push_back(static_cast<StateIndex>(t));
      continue;
    }
    const std::size_t b = block_of_root[find(n1 + t)];
    d.block_of_right[t] = b;
    d.blocks[b].right.push_back(static_cast<StateIndex>(t));
  }
  return d;
}

bool is_correlational(const Relation& r, std::span<const StateIndex> left_set,
                      std::span<const StateIndex> right_set) {
  std::vector<bool> in_u(r.left_size(), false), in_v(r.right_size(), false);
  for (StateIndex s : left_set) {
    if (s >= r.left_size()) throw Error("left set leaves the relation's left universe");
    in_u[s] = true;
  }
  for (StateIndex t : right_set) {
    if (t >= r.right_size()) throw Error("right set leaves the relation's right universe");
    in_v[t] = true;
  }
  std::vector<StatePair> by_left, by_right;
  for (auto p : r.pairs()) {
    if (in_u[p.first]) by_left.push_back(p);
    if (in_v[p.second]) by_right.push_back(p);
  }
  return by_left == by_right;
}

}  // namespace fuzzyts
