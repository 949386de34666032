#include "qv/antichain.hpp"

#include <algorithm>
#include <string_view>

namespace qv {

namespace {

/**
 * Exact cover test on a lex-sorted list of pairwise incomparable
 * suffixes: the cones cover everything iff the list is {ε} or both the
 * 0-branch and the 1-branch are covered. Linear in total bit count.
 */
bool covers_everything(const std::vector<std::string_view>& suffixes) {
  if (suffixes.empty()) return false;
  if (suffixes.size() == 1) return suffixes[0].empty();
  std::vector<std::string_view> zero, one;
  zero.reserve(suffixes.size());
  one.reserve(suffixes.size());
  for (const auto& s : suffixes) {
    if (s.empty()) return false;
    if (s[0] == '0') {
      zero.push_back(s.substr(1));
    } else {
      one.push_back(s.substr(1));
    }
  }
  return covers_everything(zero) && covers_everything(one);
}

bool incomparable_sorted_lex(std::vector<std::string_view>& views) {
  std::sort(views.begin(), views.end());
  for (std::size_t i = 0; i + 1 < views.size(); ++i) {
    if (views[i + 1].substr(0, views[i].size()) == views[i]) return false;
  }
  return true;
}

}  // namespace

Antichain Antichain::from_words(std::vector<Word> words) {
  std::vector<std::string_view> views;
  views.reserve(words.size());
  for (const Word& w : words) views.push_back(w.bits());
  if (!incomparable_sorted_lex(views)) {
    fail(ErrorCode::InvalidAntichain,
         "words are not pairwise prefix-incomparable");
  }
  Antichain out;
  out.words_ = std::move(words);
  std::sort(out.words_.begin(), out.words_.end());
  return out;
}

Antichain Antichain::full_level(std::size_t k) {
  Antichain out;
  out.words_ = all_words_of_length(k);
  return out;
}

bool Antichain::is_complete() const {
  std::vector<std::string_view> views;
  views.reserve(words_.size());
  for (const Word& w : words_) views.push_back(w.bits());
  std::sort(views.begin(), views.end());
  return covers_everything(views);
}

std::optional<Word> Antichain::find_prefix_of(const Word& w) const {
  for (const Word& a : words_) {
    if (a.is_prefix_of(w)) return a;
  }
  return std::nullopt;
}

bool Antichain::contains(const Word& w) const {
  return std::binary_search(words_.begin(), words_.end(), w);
}

std::vector<Word> Antichain::interior_vertices() const {
  std::vector<Word> out;
  for (const Word& w : words_) {
    Word p = w;
    while (!p.empty()) {
      p = p.parent();
      out.push_back(p);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t Antichain::max_length() const {
  std::size_t m = 0;
  for (const Word& w : words_) m = std::max(m, w.length());
  return m;
}

bool is_complete_antichain(const std::vector<Word>& words) {
  std::vector<std::string_view> views;
  views.reserve(words.size());
  for (const Word& w : words) views.push_back(w.bits());
  if (!incomparable_sorted_lex(views)) return false;
  return covers_everything(views);
}

Antichain refine(const Antichain& a, const Antichain& b) {
  if (!a.is_complete() || !b.is_complete()) {
    fail(ErrorCode::IncompleteInput,
         "refinement requires complete antichains");
  }
  std::vector<Word> out;
  for (const Word& w : a.words()) {
    bool below_b = false;
    for (const Word& u : b.words()) {
      if (u.is_prefix_of(w)) {
        below_b = true;
        break;
      }
    }
    if (below_b) {
      out.push_back(w);
      continue;
    }
    for (const Word& u : b.words()) {
      if (w.is_prefix_of(u)) out.push_back(u);
    }
  }
  return Antichain::from_words(std::move(out));
}

Antichain expand(const Antichain& chain, const Word& a) {
  if (!chain.contains(a)) {
    fail(ErrorCode::NotAMember,
         "'" + a.text() + "' is not a member of the antichain");
  }
  std::vector<Word> words;
  words.reserve(chain.size() + 1);
  for (const Word& w : chain.words()) {
    if (w == a) {
      words.push_back(w.child(0));
      words.push_back(w.child(1));
    } else {
      words.push_back(w);
    }
  }
  return Antichain::from_words(std::move(words));
}

}  // namespace qv
