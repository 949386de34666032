#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "qv/error.hpp"

namespace qv {

/** How two binary words sit relative to each other in the prefix order. */
enum class PrefixRelation {
  Equal,
  FirstPrefixOfSecond,
  SecondPrefixOfFirst,
  Incomparable,
};

/**
 * A finite binary word: a vertex of the infinite rooted binary tree,
 * equivalently the address of a dyadic cone in Cantor space.
 *
 * The empty word is the root. Serialized form uses '^' for the empty
 * word so that tables stay line-oriented.
 */
class Word {
 public:
  Word() = default;

  /** Builds from a raw 0/1 string; rejects any other character. */
  static Word from_bits(std::string_view bits);

  /** Parses the display form: '^' for the empty word, otherwise bits. */
  static Word from_text(std::string_view text);

  static Word epsilon() { return Word(); }

  std::size_t length() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  int bit(std::size_t i) const { return bits_[i] == '1' ? 1 : 0; }
  const std::string& bits() const { return bits_; }

  Word child(int b) const;
  Word parent() const;
  Word sibling() const;
  Word concat(const Word& tail) const;

  bool is_prefix_of(const Word& other) const;
  bool starts_with(const Word& prefix) const { return prefix.is_prefix_of(*this); }

  /** Removes `prefix` from the front; precondition: starts_with(prefix). */
  Word strip_prefix(const Word& prefix) const;

  /** Display form: '^' if empty, else the bit string. */
  std::string text() const;

  bool operator==(const Word& other) const { return bits_ == other.bits_; }
  bool operator!=(const Word& other) const { return bits_ != other.bits_; }

  /** Shortlex: length first, then lexicographic. */
  bool operator<(const Word& other) const;

 private:
  explicit Word(std::string bits) : bits_(std::move(bits)) {}
  std::string bits_;
};

PrefixRelation classify(const Word& a, const Word& b);

/** True when one word is a prefix of the other (or they are equal). */
bool comparable(const Word& a, const Word& b);

/** Strictly lexicographic order (prefix precedes its extensions). */
bool lex_less(const Word& a, const Word& b);

/**
 * The common-suffix reduction of a pair (w, u): strips the longest shared
 * suffix. For a map sending cone [w] rigidly onto [u], this captures the
 * germ of the map, which does not depend on the point inside the cone.
 */
struct SuffixGerm {
  Word source;
  Word target;
  bool operator==(const SuffixGerm& o) const {
    return source == o.source && target == o.target;
  }
  bool operator<(const SuffixGerm& o) const {
    if (source < o.source) return true;
    if (o.source < source) return false;
    return target < o.target;
  }
};

SuffixGerm suffix_germ(const Word& source, const Word& target);

std::vector<Word> all_words_of_length(std::size_t n);
std::vector<Word> all_words_up_to_length(std::size_t n);

struct WordHash {
  std::size_t operator()(const Word& w) const {
    return std::hash<std::string>()(w.bits());
  }
};

}  // namespace qv
