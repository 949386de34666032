#pragma once

#include <optional>
#include <vector>

#include "qv/word.hpp"

namespace qv {

/**
 * A finite set of pairwise prefix-incomparable binary words, kept in
 * shortlex order. A complete antichain is the leaf set of a finite
 * binary tree: its cones partition Cantor space (Kraft sum is one).
 */
class Antichain {
 public:
  Antichain() = default;

  /** Validates pairwise incomparability; rejects duplicates. */
  static Antichain from_words(std::vector<Word> words);

  /** All 2^k words of length k. */
  static Antichain full_level(std::size_t k);

  const std::vector<Word>& words() const { return words_; }
  std::size_t size() const { return words_.size(); }
  bool empty() const { return words_.empty(); }

  /** True when the cones cover all of Cantor space. */
  bool is_complete() const;

  /** The unique member that is a prefix of `w`, if any. */
  std::optional<Word> find_prefix_of(const Word& w) const;

  bool contains(const Word& w) const;

  /**
   * Proper ancestors of members (for a complete antichain: the internal
   * vertices of the tree whose leaves are the members), in shortlex order.
   */
  std::vector<Word> interior_vertices() const;

  std::size_t max_length() const;

  bool operator==(const Antichain& other) const { return words_ == other.words_; }

 private:
  std::vector<Word> words_;
};

/** True when the words are pairwise incomparable and cover everything. */
bool is_complete_antichain(const std::vector<Word>& words);

/**
 * Coarsest complete antichain refining both inputs: every member of the
 * result lies below a member of each input. Both inputs must be complete.
 */
Antichain refine(const Antichain& a, const Antichain& b);

/** Replaces member `a` by its two children. */
Antichain expand(const Antichain& chain, const Word& a);

}  // namespace qv
