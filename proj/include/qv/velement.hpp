#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qv/antichain.hpp"
#include "qv/rng.hpp"
#include "qv/word.hpp"

namespace qv {

/**
 * An element of the group of prefix-replacement bijections of Cantor
 * space: a finite table of pairs (a_i, b_i) where both the domain column
 * and the range column are complete antichains, acting by
 *
 *     a_i x  |->  b_i x.
 *
 * Tables are kept reduced (no pair of rows (w0, u0), (w1, u1) with a
 * common parent on both sides) and sorted by domain word, which makes
 * the representation canonical: two elements are equal iff their tables
 * are identical.
 *
 * Composition order is left to right: compose(u, v) applies u first.
 */
class VElement {
 public:
  using Table = std::vector<std::pair<Word, Word>>;

  VElement();

  static VElement identity();

  /**
   * Builds from an arbitrary table. Rejects duplicate words in a column,
   * prefix-comparable rows, and incomplete covers; reduces and sorts.
   */
  static VElement from_pairs(const Table& pairs);

  /** Uniform-ish random element built from two random trees with n carets. */
  static VElement random_element(Rng& rng, std::size_t n_carets);
  static VElement random_element(std::uint64_t seed, std::size_t n_carets);

  const Table& table() const { return table_; }
  std::size_t size() const { return table_.size(); }

  /** Length of the longest word in either column. */
  std::size_t depth() const;

  Antichain domain_antichain() const;
  Antichain range_antichain() const;

  bool is_identity() const;

  /**
   * Image of a vertex: defined when some domain word is a prefix of `w`;
   * throws otherwise (vertices above the table have no single image).
   */
  Word apply(const Word& w) const;
  std::optional<Word> try_apply(const Word& w) const;
  std::optional<Word> try_unapply(const Word& w) const;

  VElement inverse() const;
  VElement power(long long k) const;

  bool operator==(const VElement& other) const { return table_ == other.table_; }
  bool operator!=(const VElement& other) const { return table_ != other.table_; }

 private:
  explicit VElement(Table table);
  Table table_;
};

/** Applies `first`, then `second`. */
VElement compose(const VElement& first, const VElement& second);

/** Reduction of an arbitrary valid table to canonical form. */
VElement reduce(const VElement::Table& pairs);

}  // namespace qv
