#include "fuzzyts/language.hpp"

#include "fuzzyts/error.hpp"

namespace fuzzyts {

Word parse_word(const Fts& f, std::string_view text) {
  Word w;
  if (text.empty() || text == "-") return w;
  std::size_t pos = 0;
  while (true) {
    const std::size_t space = text.find(' ', pos);
    const std::string_view symbol = text.substr(pos, space == std::string_view::npos ? text.npos : space - pos);
    if (symbol.empty()) throw Error("malformed word '" + std::string(text) + "': labels are separated by single spaces");
    w.push_back(f.label(symbol));
    if (space == std::string_view::npos) break;
    pos = space + 1;
  }
  return w;
}

std::string format_word(const Fts& f, const Word& w) {
  if (w.empty()) return "-";
  std::string out;
  for (LabelIndex a : w) {
    if (!out.empty()) out += ' ';
    out += f.label_name(a);
  }
  return out;
}

namespace {

void require_distribution_over(const Fts& f, const FuzzySet& mu) {
  if (mu.universe_size() != f.num_states()) throw Error("distribution does not range over the system's states");
}

void require_label(const Fts& f, LabelIndex a) {
  if (a >= f.num_labels()) throw Error("unknown label index " + std::to_string(a));
}

void require_state(const Fts& f, StateIndex s) {
  if (s >= f.num_states()) throw Error("unknown state index " + std::to_string(s));
}

}  // namespace

FuzzySet step(const Fts& f, const FuzzySet& mu, LabelIndex a) {
  require_distribution_over(f, mu);
  require_label(f, a);
  std::vector<Degree> next(f.num_states());
  for (const auto& [mid, d] : mu.entries())
    for (const auto& [target, g] : f.delta(mid, a).entries())
      next[target] = max(next[target], min(d, g));
  return FuzzySet::from_dense(next);
}

FuzzySet delta_word(const Fts& f, StateIndex s, const Word& w) {
  require_state(f, s);
  FuzzySet mu = FuzzySet::unit(f.num_states(), s);
  for (LabelIndex a : w) mu = step(f, mu, a);
  return mu;
}

Degree lang_degree(const Fts& f, StateIndex s, const Word& w) { return delta_word(f, s, w).height(); }

std::vector<std::pair<Word, Degree>> lang_table(const Fts& f, StateIndex s, std::size_t max_len) {
  require_state(f, s);
  std::vector<std::pair<Word, Degree>> table{{Word{}, Degree::one()}};
  // Zero-degree words have only zero-degree extensions, so the frontier
  // keeps just the live words of the current length, already in order.
  std::vector<std::pair<Word, FuzzySet>> frontier{{Word{}, FuzzySet::unit(f.num_states(), s)}};
  for (std::size_t len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<std::pair<Word, FuzzySet>> next;
    for (const auto& [w, mu] : frontier)
      for (LabelIndex a = 0; a < f.num_labels(); ++a) {
        FuzzySet nu = step(f, mu, a);
        if (nu.empty()) continue;
        Word wa = w;
        wa.push_back(a);
        table.emplace_back(wa, nu.height());
        next.emplace_back(std::move(wa), std::move(nu));
      }
    frontier = std::move(next);
  }
  return table;
}

Degree accept_degree(const FuzzyAutomaton& m, const Word& w) {
  const FuzzySet reached = delta_word(m.base, m.base.init(), w);
  return fuzzy_intersection(reached, m.final_set).height();
}

bool lang_equal_up_to(const Fts& f1, StateIndex s1, const Fts& f2, StateIndex s2, std::size_t max_len) {
  require_same_labels(f1, f2);
  require_state(f1, s1);
  require_state(f2, s2);
  std::vector<std::pair<FuzzySet, FuzzySet>> frontier{
      {FuzzySet::unit(f1.num_states(), s1), FuzzySet::unit(f2.num_states(), s2)}};
  for (std::size_t len = 1; len <= max_len && !frontier.empty(); ++len) {
    std::vector<std::pair<FuzzySet, FuzzySet>> next;
    for (const auto& [mu, eta] : frontier)
      for (LabelIndex a = 0; a < f1.num_labels(); ++a) {
        FuzzySet mu_a = step(f1, mu, a);
        FuzzySet eta_a = step(f2, eta, a);
        if (mu_a.height() != eta_a.height()) return false;
        if (mu_a.empty()) continue;  // both zero from here on
        next.emplace_back(std::move(mu_a), std::move(eta_a));
      }
    frontier = std::move(next);
  }
  return true;
}

}  // namespace fuzzyts
