#include "qv/embeddings.hpp"

#include <algorithm>
#include <unordered_map>

#include "qv/antichain.hpp"

namespace qv {

namespace {

/** Interior vertices in in-order traversal position. */
void inorder_interiors(const Antichain& leaves, const Word& at,
                       std::vector<Word>& out) {
  if (leaves.contains(at)) return;
  inorder_interiors(leaves, at.child(0), out);
  out.push_back(at);
  inorder_interiors(leaves, at.child(1), out);
}

Word under_zero(const Word& w) { return Word::from_bits("0").concat(w); }

}  // namespace

QAutElement theta_from_table(const VElement::Table& table) {
  std::vector<Word> dom_words, ran_words;
  for (const auto& [a, b] : table) {
    dom_words.push_back(a);
    ran_words.push_back(b);
  }
  Antichain dom = Antichain::from_words(dom_words);
  Antichain ran = Antichain::from_words(ran_words);
  if (!dom.is_complete() || !ran.is_complete()) {
    fail(ErrorCode::IncompleteCover, "table columns must cover Cantor space");
  }
  std::unordered_map<Word, Word, WordHash> leaf_map;
  for (const auto& [a, b] : table) {
    if (!leaf_map.emplace(a, b).second) {
      fail(ErrorCode::NotBijection, "duplicate domain word in table");
    }
  }

  std::vector<Word> dom_leaves_lex = dom.words();
  std::sort(dom_leaves_lex.begin(), dom_leaves_lex.end(), lex_less);
  std::vector<Word> ran_leaves_lex = ran.words();
  std::sort(ran_leaves_lex.begin(), ran_leaves_lex.end(), lex_less);

  std::vector<Word> dom_inorder, ran_inorder;
  inorder_interiors(dom, Word::epsilon(), dom_inorder);
  inorder_interiors(ran, Word::epsilon(), ran_inorder);

  // Freed vertices are matched by in-order position: the i-th leaf from
  // the left stands for the i-th interior vertex, the last leaf for the
  // root of the planted tree.
  std::unordered_map<Word, Word, WordHash> dom_slot, ran_slot;
  for (std::size_t i = 0; i < dom_leaves_lex.size(); ++i) {
    Word ds = i < dom_inorder.size() ? under_zero(dom_inorder[i])
                                     : Word::epsilon();
    dom_slot.emplace(dom_leaves_lex[i], ds);
    Word rs = i < ran_inorder.size() ? under_zero(ran_inorder[i])
                                     : Word::epsilon();
    ran_slot.emplace(ran_leaves_lex[i], rs);
  }
  std::unordered_map<Word, Word, WordHash> slot_map;
  for (const auto& [leaf, target_leaf] : leaf_map) {
    slot_map.emplace(dom_slot.at(leaf), ran_slot.at(target_leaf));
  }

  auto eval = [&](const Word& w) -> Word {
    if (!w.empty() && w.bit(0) == 1) return w;
    if (!w.empty()) {
      Word y = w.strip_prefix(Word::from_bits("0"));
      if (auto a = dom.find_prefix_of(y)) {
        return under_zero(leaf_map.at(*a)).concat(y.strip_prefix(*a));
      }
    }
    return slot_map.at(w);
  };

  std::vector<Word> candidates;
  candidates.push_back(Word::epsilon());
  for (const Word& u : dom.interior_vertices()) {
    candidates.push_back(under_zero(u));
  }
  for (const Word& u : dom.words()) {
    candidates.push_back(under_zero(u));
  }
  return QAutElement::from_evaluator(eval, candidates);
}

QAutElement theta(const VElement& v) { return theta_from_table(v.table()); }

bool verify_theta_well_defined(const VElement& v, std::size_t expansions,
                               Rng& rng) {
  QAutElement expected = theta(v);
  VElement::Table table = v.table();
  for (std::size_t i = 0; i < expansions; ++i) {
    std::size_t row = rng.below(table.size());
    auto [a, b] = table[row];
    table.erase(table.begin() + static_cast<std::ptrdiff_t>(row));
    table.emplace_back(a.child(0), b.child(0));
    table.emplace_back(a.child(1), b.child(1));
    std::sort(table.begin(), table.end());
    if (theta_from_table(table) != expected) return false;
  }
  return true;
}

namespace {

/** hat(w): every tree vertex doubled, 0 toward structure, 1 to a leaf. */
Word hat_address(const Word& w) {
  std::string bits;
  bits.reserve(2 * w.length());
  for (std::size_t i = 0; i < w.length(); ++i) {
    bits.push_back('0');
    bits.push_back(w.bit(i) ? '1' : '0');
  }
  return Word::from_bits(bits);
}

}  // namespace

VElement phi_at_level(const QAutElement& tau, std::size_t level) {
  DisjointDecomposition parts = tau.cutoff_form(level);
  VElement::Table rows;
  rows.reserve(3 * parts.v_part.size());
  for (const auto& [w, u] : parts.v_part) {
    rows.emplace_back(hat_address(w).child(0), hat_address(u).child(0));
    rows.emplace_back(hat_address(w).child(1), hat_address(u).child(1));
  }
  for (const auto& [w, u] : parts.bijection) {
    rows.emplace_back(hat_address(w).child(1), hat_address(u).child(1));
  }
  return VElement::from_pairs(rows);
}

VElement phi(const QAutElement& tau) {
  return phi_at_level(tau, tau.cutoff_level());
}

bool verify_phi_well_defined(const QAutElement& tau,
                             std::size_t extra_levels) {
  VElement expected = phi(tau);
  for (std::size_t i = 1; i <= extra_levels; ++i) {
    if (phi_at_level(tau, tau.cutoff_level() + i) != expected) return false;
  }
  return true;
}

}  // namespace qv
