#pragma once

#include <utility>
#include <vector>

#include "qv/velement.hpp"
#include "qv/word.hpp"

namespace qv::testing {

inline Word W(const char* text) { return Word::from_text(text); }

inline VElement::Table table(
    const std::vector<std::pair<const char*, const char*>>& rows) {
  VElement::Table out;
  for (const auto& [a, b] : rows) {
    out.emplace_back(Word::from_text(a), Word::from_text(b));
  }
  return out;
}

inline VElement elem(
    const std::vector<std::pair<const char*, const char*>>& rows) {
  return VElement::from_pairs(table(rows));
}

/** Pointwise agreement on every word of exactly the given length. */
inline bool agree_on_level(const VElement& x, const VElement& y,
                           std::size_t level) {
  for (const Word& w : all_words_of_length(level)) {
    if (x.apply(w) != y.apply(w)) return false;
  }
  return true;
}

}  // namespace qv::testing
