#pragma once

#include <functional>
#include <optional>
#include <set>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qv/antichain.hpp"
#include "qv/rng.hpp"
#include "qv/velement.hpp"
#include "qv/word.hpp"

namespace qv {

/**
 * Factorization of a quasi-automorphism into a deep prefix-replacement
 * part, a bijection of the interior vertices of its minimal tree pair,
 * and a finitely supported correcting permutation.
 *
 * The reconstructed map is w |-> p(hybrid(w)) where hybrid applies b on
 * interior vertices of v_min's domain tree and v_min elsewhere.
 */
struct MinimalDecomposition {
  VElement v_min;
  std::vector<std::pair<Word, Word>> b;
  std::vector<std::pair<Word, Word>> p;
};

/**
 * A quasi-automorphism presented as a prefix table on a full level plus
 * a bijection of the finitely many vertices above that level.
 */
struct DisjointDecomposition {
  std::size_t level = 0;
  VElement::Table v_part;
  std::vector<std::pair<Word, Word>> bijection;
};

/**
 * An element of the group of bijections of {0,1}* that respect the
 * child and color relations of the rooted binary tree at all but
 * finitely many vertices.
 *
 * Internally an element is the canonical triple (v_min, b, p) of its
 * minimal decomposition; two elements are equal iff the triples match.
 * The cutoff level k is the least depth at and below which the map is
 * a rigid color-respecting tree map; materializing the full-level
 * cutoff table is exponential in k, so it is built only on demand.
 */
class QAutElement {
 public:
  QAutElement();

  static QAutElement identity();

  /**
   * Builds from a cutoff-style presentation: v_table's domain column
   * must be the full antichain of some level k', and `bijection` must
   * map the words shorter than k' onto the interior vertices of the
   * range tree.
   */
  static QAutElement from_parts(
      const VElement::Table& v_table,
      const std::vector<std::pair<Word, Word>>& bijection);

  /**
   * Builds from a general disjoint decomposition: a bijective rigid
   * cone table between two complete antichains plus a bijection of the
   * interior vertices of the domain tree onto those of the range tree.
   */
  static QAutElement from_general_decomposition(
      const VElement::Table& cone_table,
      const std::vector<std::pair<Word, Word>>& vertex_bijection);

  /**
   * Builds from a total evaluator. `violation_candidates` must contain
   * every vertex at which the evaluator could fail to act rigidly; the
   * caller is responsible for the evaluator being a bijection that is
   * rigid away from the candidate set.
   */
  static QAutElement from_evaluator(
      const std::function<Word(const Word&)>& eval,
      const std::vector<Word>& violation_candidates);

  /** Random element whose cutoff level is at most max_level. */
  static QAutElement random_element(Rng& rng, std::size_t max_level);

  /** Image of any finite word (total). */
  Word apply(const Word& w) const;
  Word unapply(const Word& w) const;

  QAutElement inverse() const;
  bool is_identity() const;

  std::size_t cutoff_level() const { return level_; }

  /**
   * Vertices w with τ(w·i) ≠ τ(w)·i for some child i: the places where
   * the map fails to act as a color-respecting tree map. The cutoff
   * level is one past the deepest of them.
   */
  std::vector<Word> violation_set() const;

  /**
   * The cross-check set built from the minimal decomposition: preimages
   * of the unmatched interior vertices and of the permutation support.
   * Its deepest level plus one is an alternative cutoff estimate; see
   * cutoff_from_z. The estimate is not always equal to cutoff_level().
   */
  std::vector<Word> z_set() const;
  std::size_t cutoff_from_z() const;

  const MinimalDecomposition& minimal_decomposition() const { return decomp_; }

  /** Suffix germs of (w, τ(w)) over all words w (a finite set). */
  std::set<SuffixGerm> gamma_germs() const;

  /** Germs realized by infinitely many words. */
  std::set<SuffixGerm> essential_germs() const;

  /**
   * The disjoint decomposition at the cutoff level (or a deeper one).
   * The table has 2^level rows, so levels above 16 are refused.
   */
  DisjointDecomposition cutoff_form() const;
  DisjointDecomposition cutoff_form(std::size_t level) const;

  bool operator==(const QAutElement& other) const;
  bool operator!=(const QAutElement& other) const { return !(*this == other); }

 private:
  friend QAutElement compose(const QAutElement&, const QAutElement&);

  template <class Eval>
  static QAutElement build(const Eval& eval,
                           const std::vector<Word>& violation_candidates);

  Word hybrid(const Word& w) const;
  Word hybrid_inverse(const Word& w) const;
  std::vector<Word> exceptional_vertices() const;

  MinimalDecomposition decomp_;
  std::size_t level_ = 0;
  std::unordered_map<Word, Word, WordHash> b_index_;
  std::unordered_map<Word, Word, WordHash> b_inverse_index_;
  std::unordered_map<Word, Word, WordHash> p_index_;
  std::unordered_map<Word, Word, WordHash> p_inverse_index_;
};

/** Applies `first`, then `second`. */
QAutElement compose(const QAutElement& first, const QAutElement& second);

}  // namespace qv
