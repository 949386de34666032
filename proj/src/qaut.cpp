#include "qv/qaut.hpp"

#include <algorithm>
#include <unordered_set>

namespace qv {

namespace {

std::vector<Word> dedupe_sorted(std::vector<Word> words) {
  std::sort(words.begin(), words.end());
  words.erase(std::unique(words.begin(), words.end()), words.end());
  return words;
}

/** All prefixes of the given words, the words themselves included. */
std::vector<Word> prefix_closure(const std::vector<Word>& words) {
  std::vector<Word> out;
  for (const Word& w : words) {
    out.push_back(w);
    Word p = w;
    while (!p.empty()) {
      p = p.parent();
      out.push_back(p);
    }
  }
  return dedupe_sorted(std::move(out));
}

std::vector<Word> with_parents(const std::vector<Word>& words) {
  std::vector<Word> out = words;
  for (const Word& w : words) {
    if (!w.empty()) out.push_back(w.parent());
  }
  return dedupe_sorted(std::move(out));
}

/**
 * The shallowest vertices outside a nonempty prefix-closed set: a
 * complete antichain whose cones avoid the set.
 */
std::vector<Word> frontier(const std::vector<Word>& closed) {
  if (closed.empty()) return {Word::epsilon()};
  std::unordered_set<Word, WordHash> inside(closed.begin(), closed.end());
  std::vector<Word> out;
  for (const Word& w : closed) {
    for (int b = 0; b < 2; ++b) {
      Word c = w.child(b);
      if (!inside.count(c)) out.push_back(c);
    }
  }
  return dedupe_sorted(std::move(out));
}

}  // namespace

QAutElement::QAutElement() {
  decomp_.v_min = VElement::identity();
  level_ = 0;
}

QAutElement QAutElement::identity() { return QAutElement(); }

template <class Eval>
QAutElement QAutElement::build(const Eval& eval,
                               const std::vector<Word>& violation_candidates) {
  std::vector<Word> violations;
  for (const Word& w : dedupe_sorted(violation_candidates)) {
    Word image = eval(w);
    if (eval(w.child(0)) != image.child(0) ||
        eval(w.child(1)) != image.child(1)) {
      violations.push_back(w);
    }
  }

  QAutElement out;
  out.level_ =
      violations.empty() ? 0 : violations.back().length() + 1;

  std::vector<Word> closed = prefix_closure(violations);

  VElement::Table cone_rows;
  for (const Word& a : frontier(closed)) {
    cone_rows.emplace_back(a, eval(a));
  }
  out.decomp_.v_min = VElement::from_pairs(cone_rows);

  std::vector<Word> dom_interior =
      out.decomp_.v_min.domain_antichain().interior_vertices();
  std::vector<Word> ran_interior =
      out.decomp_.v_min.range_antichain().interior_vertices();
  std::unordered_set<Word, WordHash> ran_interior_set(ran_interior.begin(),
                                                      ran_interior.end());

  std::unordered_set<Word, WordHash> used_targets;
  std::vector<std::pair<Word, Word>> forced(dom_interior.size(),
                                            {Word(), Word()});
  std::vector<std::size_t> open_slots;
  for (std::size_t i = 0; i < dom_interior.size(); ++i) {
    Word image = eval(dom_interior[i]);
    if (ran_interior_set.count(image)) {
      forced[i] = {dom_interior[i], image};
      used_targets.insert(image);
    } else {
      open_slots.push_back(i);
    }
  }
  std::vector<Word> leftover_targets;
  for (const Word& u : ran_interior) {
    if (!used_targets.count(u)) leftover_targets.push_back(u);
  }
  for (std::size_t j = 0; j < open_slots.size(); ++j) {
    forced[open_slots[j]] = {dom_interior[open_slots[j]],
                             leftover_targets[j]};
  }
  out.decomp_.b = std::move(forced);
  for (const auto& [w, u] : out.decomp_.b) {
    out.b_index_.emplace(w, u);
    out.b_inverse_index_.emplace(u, w);
  }

  for (const Word& w : closed) {
    Word expected = out.hybrid(w);
    Word actual = eval(w);
    if (actual != expected) {
      out.decomp_.p.emplace_back(expected, actual);
    }
  }
  std::sort(out.decomp_.p.begin(), out.decomp_.p.end());
  {
    std::vector<Word> from, to;
    for (const auto& [x, y] : out.decomp_.p) {
      from.push_back(x);
      to.push_back(y);
    }
    if (dedupe_sorted(from) != dedupe_sorted(to) ||
        from.size() != out.decomp_.p.size()) {
      fail(ErrorCode::NotBijection,
           "vertex corrections do not permute the exceptional set");
    }
  }
  for (const auto& [x, y] : out.decomp_.p) {
    out.p_index_.emplace(x, y);
    out.p_inverse_index_.emplace(y, x);
  }
  return out;
}

QAutElement QAutElement::from_evaluator(
    const std::function<Word(const Word&)>& eval,
    const std::vector<Word>& violation_candidates) {
  return build(eval, violation_candidates);
}

QAutElement QAutElement::from_general_decomposition(
    const VElement::Table& cone_table,
    const std::vector<std::pair<Word, Word>>& vertex_bijection) {
  std::vector<Word> dom, ran;
  for (const auto& [a, b] : cone_table) {
    dom.push_back(a);
    ran.push_back(b);
  }
  if (!is_complete_antichain(dom) || !is_complete_antichain(ran)) {
    fail(ErrorCode::MalformedDecomposition,
         "cone table columns must be complete antichains");
  }
  Antichain dom_chain = Antichain::from_words(dom);
  Antichain ran_chain = Antichain::from_words(ran);

  std::vector<Word> dom_interior = dom_chain.interior_vertices();
  std::vector<Word> ran_interior = ran_chain.interior_vertices();
  std::vector<Word> bij_from, bij_to;
  for (const auto& [w, u] : vertex_bijection) {
    bij_from.push_back(w);
    bij_to.push_back(u);
  }
  if (dedupe_sorted(bij_from) != dom_interior ||
      dedupe_sorted(bij_to) != ran_interior ||
      bij_from.size() != dom_interior.size() ||
      vertex_bijection.size() != bij_from.size()) {
    fail(ErrorCode::MalformedDecomposition,
         "vertex bijection must match the interior vertices of the two "
         "trees");
  }

  std::unordered_map<Word, Word, WordHash> cone_map;
  for (const auto& [a, b] : cone_table) cone_map.emplace(a, b);
  std::unordered_map<Word, Word, WordHash> vertex_map;
  for (const auto& [w, u] : vertex_bijection) vertex_map.emplace(w, u);

  auto eval = [&](const Word& w) -> Word {
    auto iv = vertex_map.find(w);
    if (iv != vertex_map.end()) return iv->second;
    Word a = *dom_chain.find_prefix_of(w);
    return cone_map.at(a).concat(w.strip_prefix(a));
  };
  return build(eval, dom_interior);
}

QAutElement QAutElement::from_parts(
    const VElement::Table& v_table,
    const std::vector<std::pair<Word, Word>>& bijection) {
  if (v_table.empty()) {
    fail(ErrorCode::MalformedDecomposition, "the cone table is empty");
  }
  std::size_t level = v_table.front().first.length();
  std::vector<Word> dom;
  for (const auto& [a, b] : v_table) {
    if (a.length() != level) {
      fail(ErrorCode::MalformedDecomposition,
           "cone table domain words must all have the same length");
    }
    dom.push_back(a);
  }
  if (dedupe_sorted(dom) != all_words_of_length(level) ||
      dom.size() != (std::size_t{1} << level)) {
    fail(ErrorCode::MalformedDecomposition,
         "cone table domain must be a full level of the tree");
  }
  std::vector<Word> expected_vertices;
  if (level > 0) expected_vertices = all_words_up_to_length(level - 1);
  std::vector<Word> bij_from;
  for (const auto& [w, u] : bijection) bij_from.push_back(w);
  if (dedupe_sorted(bij_from) != expected_vertices ||
      bijection.size() != expected_vertices.size()) {
    fail(ErrorCode::MalformedDecomposition,
         "vertex bijection must be defined on exactly the words above the "
         "cone level");
  }
  return from_general_decomposition(v_table, bijection);
}

QAutElement QAutElement::random_element(Rng& rng, std::size_t max_level) {
  Antichain dom = Antichain::from_words({Word::epsilon()});
  Antichain ran = Antichain::from_words({Word::epsilon()});
  std::size_t carets = static_cast<std::size_t>(
      rng.below(std::uint64_t{1} << std::min<std::size_t>(max_level, 8)));
  auto expand_random = [&](Antichain& chain) {
    std::vector<Word> shallow;
    for (const Word& w : chain.words()) {
      if (w.length() < max_level) shallow.push_back(w);
    }
    chain = expand(chain, shallow[rng.below(shallow.size())]);
  };
  for (std::size_t i = 0; i < carets; ++i) {
    expand_random(dom);
    expand_random(ran);
  }
  std::vector<Word> targets = ran.words();
  rng.shuffle(targets);
  VElement::Table cone_table;
  for (std::size_t i = 0; i < dom.size(); ++i) {
    cone_table.emplace_back(dom.words()[i], targets[i]);
  }
  std::vector<Word> verts = ran.interior_vertices();
  rng.shuffle(verts);
  std::vector<std::pair<Word, Word>> bijection;
  std::vector<Word> dom_interior = dom.interior_vertices();
  for (std::size_t i = 0; i < dom_interior.size(); ++i) {
    bijection.emplace_back(dom_interior[i], verts[i]);
  }
  return from_general_decomposition(cone_table, bijection);
}

Word QAutElement::hybrid(const Word& w) const {
  auto it = b_index_.find(w);
  if (it != b_index_.end()) return it->second;
  return decomp_.v_min.apply(w);
}

Word QAutElement::hybrid_inverse(const Word& w) const {
  auto it = b_inverse_index_.find(w);
  if (it != b_inverse_index_.end()) return it->second;
  return *decomp_.v_min.try_unapply(w);
}

Word QAutElement::apply(const Word& w) const {
  Word u = hybrid(w);
  auto it = p_index_.find(u);
  return it == p_index_.end() ? u : it->second;
}

Word QAutElement::unapply(const Word& w) const {
  auto it = p_inverse_index_.find(w);
  Word u = it == p_inverse_index_.end() ? w : it->second;
  return hybrid_inverse(u);
}

std::vector<Word> QAutElement::exceptional_vertices() const {
  std::vector<Word> out =
      decomp_.v_min.domain_antichain().interior_vertices();
  for (const auto& [x, y] : decomp_.p) {
    out.push_back(hybrid_inverse(x));
  }
  return dedupe_sorted(std::move(out));
}

std::vector<Word> QAutElement::violation_set() const {
  std::vector<Word> out;
  for (const Word& w : with_parents(exceptional_vertices())) {
    Word image = apply(w);
    if (apply(w.child(0)) != image.child(0) ||
        apply(w.child(1)) != image.child(1)) {
      out.push_back(w);
    }
  }
  return dedupe_sorted(std::move(out));
}

std::vector<Word> QAutElement::z_set() const {
  std::vector<Word> dom_interior =
      decomp_.v_min.domain_antichain().interior_vertices();
  std::vector<Word> ran_interior =
      decomp_.v_min.range_antichain().interior_vertices();
  std::unordered_set<Word, WordHash> dom_set(dom_interior.begin(),
                                             dom_interior.end());
  std::unordered_set<Word, WordHash> ran_set(ran_interior.begin(),
                                             ran_interior.end());
  std::vector<Word> out;
  for (const Word& w : dom_interior) {
    if (!ran_set.count(apply(w))) out.push_back(w);
  }
  for (const Word& u : ran_interior) {
    Word w = unapply(u);
    if (!dom_set.count(w)) out.push_back(w);
  }
  for (const auto& [x, y] : decomp_.p) {
    out.push_back(unapply(x));
  }
  return dedupe_sorted(std::move(out));
}

std::size_t QAutElement::cutoff_from_z() const {
  std::vector<Word> z = z_set();
  if (z.empty()) return 0;
  return z.back().length() + 1;
}

std::set<SuffixGerm> QAutElement::essential_germs() const {
  std::set<SuffixGerm> out;
  for (const auto& [a, b] : decomp_.v_min.table()) {
    out.insert(suffix_germ(a, b));
  }
  return out;
}

std::set<SuffixGerm> QAutElement::gamma_germs() const {
  std::set<SuffixGerm> out = essential_germs();
  for (const Word& w : exceptional_vertices()) {
    out.insert(suffix_germ(w, apply(w)));
  }
  return out;
}

DisjointDecomposition QAutElement::cutoff_form() const {
  return cutoff_form(level_);
}

DisjointDecomposition QAutElement::cutoff_form(std::size_t level) const {
  if (level < level_) {
    fail(ErrorCode::InvalidDepth,
         "requested level " + std::to_string(level) +
             " is above the cutoff level " + std::to_string(level_));
  }
  if (level > 16) {
    fail(ErrorCode::LimitExceeded,
         "a level-" + std::to_string(level) +
             " table has too many rows to materialize");
  }
  DisjointDecomposition out;
  out.level = level;
  for (const Word& w : all_words_of_length(level)) {
    out.v_part.emplace_back(w, apply(w));
  }
  if (level > 0) {
    for (const Word& w : all_words_up_to_length(level - 1)) {
      out.bijection.emplace_back(w, apply(w));
    }
  }
  return out;
}

bool QAutElement::is_identity() const { return level_ == 0; }

QAutElement QAutElement::inverse() const {
  std::vector<Word> candidates;
  for (const Word& w : violation_set()) {
    candidates.push_back(apply(w));
  }
  auto eval = [this](const Word& w) { return unapply(w); };
  return build(eval, candidates);
}

bool QAutElement::operator==(const QAutElement& other) const {
  return decomp_.v_min == other.decomp_.v_min &&
         decomp_.b == other.decomp_.b && decomp_.p == other.decomp_.p;
}

QAutElement compose(const QAutElement& first, const QAutElement& second) {
  std::vector<Word> candidates = with_parents(first.exceptional_vertices());
  for (const Word& c : with_parents(second.exceptional_vertices())) {
    candidates.push_back(first.unapply(c));
  }
  auto eval = [&](const Word& w) { return second.apply(first.apply(w)); };
  return QAutElement::build(eval, candidates);
}

}  // namespace qv
