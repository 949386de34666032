#include "qv/velement.hpp"

#include <algorithm>
#include <map>

namespace qv {

namespace {

void check_column(const std::vector<Word>& column, const char* side) {
  std::vector<Word> sorted = column;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) {
    if (sorted[i] == sorted[i + 1]) {
      fail(ErrorCode::NotBijection, std::string("duplicate ") + side +
                                        " word '" + sorted[i].text() + "'");
    }
  }
  if (!is_complete_antichain(column)) {
    for (std::size_t i = 0; i < column.size(); ++i) {
      for (std::size_t j = i + 1; j < column.size(); ++j) {
        if (comparable(column[i], column[j])) {
          fail(ErrorCode::InvalidAntichain,
               std::string(side) + " words '" + column[i].text() + "' and '" +
                   column[j].text() + "' are prefix-comparable");
        }
      }
    }
    fail(ErrorCode::IncompleteCover,
         std::string(side) + " antichain does not cover Cantor space");
  }
}

VElement::Table reduce_table(const VElement::Table& table) {
  std::map<Word, Word> rows(table.begin(), table.end());
  std::vector<Word> work;
  work.reserve(rows.size());
  for (const auto& [a, b] : rows) work.push_back(a);
  while (!work.empty()) {
    Word w = work.back();
    work.pop_back();
    if (w.empty()) continue;
    Word left = w.bit(w.length() - 1) == 0 ? w : w.sibling();
    auto it0 = rows.find(left);
    auto it1 = rows.find(left.sibling());
    if (it0 == rows.end() || it1 == rows.end()) continue;
    const Word& u0 = it0->second;
    const Word& u1 = it1->second;
    if (u0.empty() || u0.bit(u0.length() - 1) != 0 || u1 != u0.sibling()) {
      continue;
    }
    Word parent = left.parent();
    Word image = u0.parent();
    rows.erase(it0);
    rows.erase(it1);
    rows.emplace(parent, image);
    work.push_back(parent);
  }
  return VElement::Table(rows.begin(), rows.end());
}

}  // namespace

VElement::VElement() : table_{{Word::epsilon(), Word::epsilon()}} {}

VElement::VElement(Table table) : table_(std::move(table)) {}

VElement VElement::identity() { return VElement(); }

VElement VElement::from_pairs(const Table& pairs) {
  if (pairs.empty()) {
    fail(ErrorCode::IncompleteCover, "a table needs at least one row");
  }
  std::vector<Word> domain, range;
  domain.reserve(pairs.size());
  range.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    domain.push_back(a);
    range.push_back(b);
  }
  check_column(domain, "domain");
  check_column(range, "range");
  return VElement(reduce_table(pairs));
}

VElement VElement::random_element(Rng& rng, std::size_t n_carets) {
  Antichain dom = Antichain::from_words({Word::epsilon()});
  Antichain ran = Antichain::from_words({Word::epsilon()});
  for (std::size_t i = 0; i < n_carets; ++i) {
    dom = expand(dom, dom.words()[rng.below(dom.size())]);
    ran = expand(ran, ran.words()[rng.below(ran.size())]);
  }
  std::vector<Word> targets = ran.words();
  rng.shuffle(targets);
  Table pairs;
  pairs.reserve(dom.size());
  for (std::size_t i = 0; i < dom.size(); ++i) {
    pairs.emplace_back(dom.words()[i], targets[i]);
  }
  return from_pairs(pairs);
}

VElement VElement::random_element(std::uint64_t seed, std::size_t n_carets) {
  Rng rng(seed);
  return random_element(rng, n_carets);
}

std::size_t VElement::depth() const {
  std::size_t d = 0;
  for (const auto& [a, b] : table_) {
    d = std::max({d, a.length(), b.length()});
  }
  return d;
}

Antichain VElement::domain_antichain() const {
  std::vector<Word> words;
  words.reserve(table_.size());
  for (const auto& [a, b] : table_) words.push_back(a);
  return Antichain::from_words(std::move(words));
}

Antichain VElement::range_antichain() const {
  std::vector<Word> words;
  words.reserve(table_.size());
  for (const auto& [a, b] : table_) words.push_back(b);
  return Antichain::from_words(std::move(words));
}

bool VElement::is_identity() const {
  return table_.size() == 1 && table_[0].first.empty() &&
         table_[0].second.empty();
}

std::optional<Word> VElement::try_apply(const Word& w) const {
  for (const auto& [a, b] : table_) {
    if (a.is_prefix_of(w)) return b.concat(w.strip_prefix(a));
  }
  return std::nullopt;
}

std::optional<Word> VElement::try_unapply(const Word& w) const {
  for (const auto& [a, b] : table_) {
    if (b.is_prefix_of(w)) return a.concat(w.strip_prefix(b));
  }
  return std::nullopt;
}

Word VElement::apply(const Word& w) const {
  auto image = try_apply(w);
  if (!image) {
    fail(ErrorCode::UndefinedOnVertex,
         "no single image: '" + w.text() + "' lies above the domain antichain");
  }
  return *image;
}

VElement VElement::inverse() const {
  Table flipped;
  flipped.reserve(table_.size());
  for (const auto& [a, b] : table_) flipped.emplace_back(b, a);
  std::sort(flipped.begin(), flipped.end());
  return VElement(std::move(flipped));
}

VElement VElement::power(long long k) const {
  if (k < 0) return inverse().power(-k);
  VElement acc = identity();
  VElement base = *this;
  while (k > 0) {
    if (k & 1) acc = compose(acc, base);
    base = compose(base, base);
    k >>= 1;
  }
  return acc;
}

VElement compose(const VElement& first, const VElement& second) {
  Antichain mid = refine(first.range_antichain(), second.domain_antichain());
  VElement::Table pairs;
  pairs.reserve(mid.size());
  for (const Word& c : mid.words()) {
    Word a = *first.try_unapply(c);
    Word b = *second.try_apply(c);
    pairs.emplace_back(a, b);
  }
  return VElement::from_pairs(pairs);
}

VElement reduce(const VElement::Table& pairs) {
  return VElement::from_pairs(pairs);
}

}  // namespace qv
