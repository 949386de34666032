#include "qv/word.hpp"

#include <algorithm>

namespace qv {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidAntichain: return "InvalidAntichain";
    case ErrorCode::IncompleteCover: return "IncompleteCover";
    case ErrorCode::NotBijection: return "NotBijection";
    case ErrorCode::IncompleteInput: return "IncompleteInput";
    case ErrorCode::NotAMember: return "NotAMember";
    case ErrorCode::UndefinedOnVertex: return "UndefinedOnVertex";
    case ErrorCode::MalformedDecomposition: return "MalformedDecomposition";
    case ErrorCode::InvalidDepth: return "InvalidDepth";
    case ErrorCode::IsTorsion: return "IsTorsion";
    case ErrorCode::HasNontrivialFiniteOrbits:
      return "HasNontrivialFiniteOrbits";
    case ErrorCode::InvalidOrder: return "InvalidOrder";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::InvariantFalsified: return "InvariantFalsified";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Word Word::from_bits(std::string_view bits) {
  for (char c : bits) {
    if (c != '0' && c != '1') {
      fail(ErrorCode::ParseError,
           std::string("invalid character '") + c + "' in binary word");
    }
  }
  return Word(std::string(bits));
}

Word Word::from_text(std::string_view text) {
  if (text == "^") return Word();
  if (text.empty()) {
    fail(ErrorCode::ParseError, "empty word must be written '^'");
  }
  return from_bits(text);
}

Word Word::child(int b) const { return Word(bits_ + (b ? '1' : '0')); }

Word Word::parent() const {
  if (bits_.empty()) {
    fail(ErrorCode::InvalidArgument, "the root has no parent");
  }
  return Word(bits_.substr(0, bits_.size() - 1));
}

Word Word::sibling() const {
  if (bits_.empty()) {
    fail(ErrorCode::InvalidArgument, "the root has no sibling");
  }
  std::string s = bits_;
  s.back() = s.back() == '0' ? '1' : '0';
  return Word(std::move(s));
}

Word Word::concat(const Word& tail) const { return Word(bits_ + tail.bits_); }

bool Word::is_prefix_of(const Word& other) const {
  return bits_.size() <= other.bits_.size() &&
         other.bits_.compare(0, bits_.size(), bits_) == 0;
}

Word Word::strip_prefix(const Word& prefix) const {
  if (!prefix.is_prefix_of(*this)) {
    fail(ErrorCode::InvalidArgument,
         "'" + prefix.text() + "' is not a prefix of '" + text() + "'");
  }
  return Word(bits_.substr(prefix.bits_.size()));
}

std::string Word::text() const { return bits_.empty() ? "^" : bits_; }

bool Word::operator<(const Word& other) const {
  if (bits_.size() != other.bits_.size()) {
    return bits_.size() < other.bits_.size();
  }
  return bits_ < other.bits_;
}

PrefixRelation classify(const Word& a, const Word& b) {
  if (a == b) return PrefixRelation::Equal;
  if (a.is_prefix_of(b)) return PrefixRelation::FirstPrefixOfSecond;
  if (b.is_prefix_of(a)) return PrefixRelation::SecondPrefixOfFirst;
  return PrefixRelation::Incomparable;
}

bool comparable(const Word& a, const Word& b) {
  return classify(a, b) != PrefixRelation::Incomparable;
}

bool lex_less(const Word& a, const Word& b) { return a.bits() < b.bits(); }

SuffixGerm suffix_germ(const Word& source, const Word& target) {
  const std::string& s = source.bits();
  const std::string& t = target.bits();
  std::size_t k = 0;
  while (k < s.size() && k < t.size() &&
         s[s.size() - 1 - k] == t[t.size() - 1 - k]) {
    ++k;
  }
  return SuffixGerm{Word::from_bits(std::string_view(s).substr(0, s.size() - k)),
                    Word::from_bits(std::string_view(t).substr(0, t.size() - k))};
}

std::vector<Word> all_words_of_length(std::size_t n) {
  std::vector<Word> out;
  out.reserve(std::size_t{1} << n);
  std::string bits(n, '0');
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << n); ++x) {
    for (std::size_t i = 0; i < n; ++i) {
      bits[i] = (x >> (n - 1 - i)) & 1 ? '1' : '0';
    }
    out.push_back(Word::from_bits(bits));
  }
  return out;
}

std::vector<Word> all_words_up_to_length(std::size_t n) {
  std::vector<Word> out;
  for (std::size_t k = 0; k <= n; ++k) {
    auto level = all_words_of_length(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace qv
