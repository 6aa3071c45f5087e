#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fuzzyts/degree.hpp"
#include "fuzzyts/fts.hpp"
#include "fuzzyts/fuzzy_set.hpp"

namespace fuzzyts {

using Word = std::vector<LabelIndex>;

// Space-separated label names; "-" (or the empty string) is the empty word.
Word parse_word(const Fts& f, std::string_view text);
std::string format_word(const Fts& f, const Word& w);

// nu(s') = max over s'' of min(mu(s''), delta(s'', a)(s')).
FuzzySet step(const Fts& f, const FuzzySet& mu, LabelIndex a);

// delta(s, w), folded left to right from the unit distribution at s.
FuzzySet delta_word(const Fts& f, StateIndex s, const Word& w);

// L_s(w): the height of delta(s, w).
Degree lang_degree(const Fts& f, StateIndex s, const Word& w);

// Every word of length <= max_len with nonzero degree, plus the empty word,
// in length-then-lexicographic order over label indices.
std::vector<std::pair<Word, Degree>> lang_table(const Fts& f, StateIndex s, std::size_t max_len);

// L_M(w) = max over q of min(delta(q0, w)(q), F(q)).
Degree accept_degree(const FuzzyAutomaton& m, const Word& w);

// Exact agreement of L_{s1} and L_{s2} on all words of length <= max_len.
// Throws Error("label alphabet mismatch") when the systems differ in labels.
bool lang_equal_up_to(const Fts& f1, StateIndex s1, const Fts& f2, StateIndex s2,
                      std::size_t max_len);

}  // namespace fuzzyts
