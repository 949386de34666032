#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <functional>
#include <unordered_map>

#include "doctest.h"
#include "qv/antichain.hpp"
#include "qv/error.hpp"
#include "qv/word.hpp"
#include "test_util.hpp"

using namespace qv;
using qv::testing::W;

namespace {

bool throws_code(ErrorCode code, const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

}  // namespace

TEST_CASE("word construction and text form") {
  CHECK(Word::epsilon().empty());
  CHECK(Word::epsilon().text() == "^");
  CHECK(W("^") == Word::epsilon());
  CHECK(W("0110").length() == 4);
  CHECK(W("0110").text() == "0110");
  CHECK(W("0110").bit(1) == 1);
  CHECK(W("0110").bit(3) == 0);
  CHECK(throws_code(ErrorCode::ParseError, [] { Word::from_text("01a"); }));
  CHECK(throws_code(ErrorCode::ParseError, [] { Word::from_text(""); }));
}

TEST_CASE("tree navigation") {
  CHECK(W("01").child(0) == W("010"));
  CHECK(W("01").child(1) == W("011"));
  CHECK(W("010").parent() == W("01"));
  CHECK(W("010").sibling() == W("011"));
  CHECK(W("0").parent() == Word::epsilon());
  CHECK(throws_code(ErrorCode::InvalidArgument,
                    [] { Word::epsilon().parent(); }));
  CHECK(throws_code(ErrorCode::InvalidArgument,
                    [] { Word::epsilon().sibling(); }));
  CHECK(W("01").concat(W("10")) == W("0110"));
  CHECK(W("01").concat(Word::epsilon()) == W("01"));
}

TEST_CASE("prefix relations") {
  CHECK(classify(W("0"), W("0")) == PrefixRelation::Equal);
  CHECK(classify(W("0"), W("01")) == PrefixRelation::FirstPrefixOfSecond);
  CHECK(classify(W("01"), W("0")) == PrefixRelation::SecondPrefixOfFirst);
  CHECK(classify(W("01"), W("00")) == PrefixRelation::Incomparable);
  CHECK(classify(Word::epsilon(), W("1")) ==
        PrefixRelation::FirstPrefixOfSecond);
  CHECK(comparable(W("0"), W("0111")));
  CHECK_FALSE(comparable(W("10"), W("11")));
  CHECK(W("01").is_prefix_of(W("0110")));
  CHECK_FALSE(W("11").is_prefix_of(W("0110")));
  CHECK(W("0110").strip_prefix(W("01")) == W("10"));
  CHECK(throws_code(ErrorCode::InvalidArgument,
                    [] { W("0110").strip_prefix(W("11")); }));
}

TEST_CASE("shortlex order") {
  std::vector<Word> words = {W("1"), W("00"), Word::epsilon(), W("0"),
                             W("11"), W("000")};
  std::sort(words.begin(), words.end());
  std::vector<Word> expected = {Word::epsilon(), W("0"),  W("1"),
                                W("00"),         W("11"), W("000")};
  CHECK(words == expected);
  CHECK(lex_less(W("0"), W("00")));
  CHECK(lex_less(W("00"), W("1")));
  CHECK_FALSE(lex_less(W("1"), W("011")));
}

TEST_CASE("suffix germs strip the longest common suffix") {
  CHECK(suffix_germ(W("0110"), W("10")) ==
        SuffixGerm{W("01"), Word::epsilon()});
  CHECK(suffix_germ(W("00"), W("10")) == SuffixGerm{W("0"), W("1")});
  CHECK(suffix_germ(W("0"), W("1")) == SuffixGerm{W("0"), W("1")});
  CHECK(suffix_germ(Word::epsilon(), Word::epsilon()) ==
        SuffixGerm{Word::epsilon(), Word::epsilon()});
  CHECK(suffix_germ(W("0101"), W("0101")) ==
        SuffixGerm{Word::epsilon(), Word::epsilon()});
}

TEST_CASE("word enumeration is shortlex") {
  std::vector<Word> level2 = all_words_of_length(2);
  CHECK(level2 == std::vector<Word>{W("00"), W("01"), W("10"), W("11")});
  std::vector<Word> upto1 = all_words_up_to_length(1);
  CHECK(upto1 == std::vector<Word>{Word::epsilon(), W("0"), W("1")});
  CHECK(all_words_up_to_length(3).size() == 15);
}

TEST_CASE("words hash into unordered containers") {
  std::unordered_map<Word, int, WordHash> m;
  m[W("01")] = 1;
  m[Word::epsilon()] = 2;
  CHECK(m.at(W("01")) == 1);
  CHECK(m.at(Word::epsilon()) == 2);
}

TEST_CASE("complete antichain recognition") {
  CHECK(is_complete_antichain({Word::epsilon()}));
  CHECK(is_complete_antichain({W("0"), W("10"), W("11")}));
  CHECK(is_complete_antichain({W("00"), W("01"), W("10"), W("11")}));
  CHECK_FALSE(is_complete_antichain({W("0"), W("10")}));
  CHECK_FALSE(is_complete_antichain({W("0"), W("01"), W("1")}));
  CHECK_FALSE(is_complete_antichain({}));
  CHECK_FALSE(is_complete_antichain({W("0"), W("10"), W("11"), W("110")}));
}

TEST_CASE("antichain construction validates") {
  Antichain a = Antichain::from_words({W("10"), W("0"), W("11")});
  CHECK(a.words() == std::vector<Word>{W("0"), W("10"), W("11")});
  CHECK(a.size() == 3);
  CHECK(a.max_length() == 2);
  CHECK(a.contains(W("10")));
  CHECK_FALSE(a.contains(W("1")));
  CHECK(*a.find_prefix_of(W("1011")) == W("10"));
  CHECK_FALSE(a.find_prefix_of(W("1")).has_value());
  CHECK(throws_code(ErrorCode::InvalidAntichain, [] {
    Antichain::from_words({W("0"), W("01"), W("1")});
  }));
  CHECK(throws_code(ErrorCode::InvalidAntichain, [] {
    Antichain::from_words({W("0"), W("0"), W("1")});
  }));
  Antichain partial = Antichain::from_words({W("0"), W("10")});
  CHECK_FALSE(partial.is_complete());
  CHECK(a.is_complete());
}

TEST_CASE("interior vertices are the proper prefixes") {
  Antichain a = Antichain::from_words({W("0"), W("10"), W("11")});
  CHECK(a.interior_vertices() == std::vector<Word>{Word::epsilon(), W("1")});
  CHECK(Antichain::from_words({Word::epsilon()}).interior_vertices().empty());
  CHECK(Antichain::full_level(2).interior_vertices() ==
        std::vector<Word>{Word::epsilon(), W("0"), W("1")});
}

TEST_CASE("refinement against a brute-force oracle") {
  auto oracle = [](const Antichain& a, const Antichain& b) {
    std::vector<Word> out;
    std::size_t depth = a.max_length() + b.max_length() + 1;
    for (const Word& w : all_words_up_to_length(depth)) {
      bool in_a = a.find_prefix_of(w).has_value();
      bool in_b = b.find_prefix_of(w).has_value();
      bool parent_ok = true;
      if (!w.empty()) {
        Word p = w.parent();
        parent_ok = !a.find_prefix_of(p).has_value() ||
                    !b.find_prefix_of(p).has_value();
      }
      if (in_a && in_b && parent_ok) out.push_back(w);
    }
    return out;
  };

  Antichain a1 = Antichain::from_words({Word::epsilon()});
  Antichain b1 = Antichain::from_words({W("0"), W("1")});
  CHECK(refine(a1, b1).words() == std::vector<Word>{W("0"), W("1")});
  CHECK(refine(a1, b1).words() == oracle(a1, b1));

  Antichain a2 = Antichain::from_words({W("0"), W("1")});
  Antichain b2 = Antichain::from_words({W("0"), W("10"), W("11")});
  CHECK(refine(a2, b2).words() == std::vector<Word>{W("0"), W("10"), W("11")});
  CHECK(refine(a2, b2).words() == oracle(a2, b2));

  Antichain a3 = Antichain::from_words({W("0"), W("11"), W("10")});
  Antichain b3 = Antichain::from_words({W("00"), W("01"), W("1")});
  CHECK(refine(a3, b3) == Antichain::full_level(2));
  CHECK(refine(a3, b3).words() == oracle(a3, b3));

  Rng rng(11);
  for (int i = 0; i < 40; ++i) {
    Antichain x = Antichain::from_words({Word::epsilon()});
    Antichain y = Antichain::from_words({Word::epsilon()});
    for (int j = 0; j < 5; ++j) {
      x = expand(x, x.words()[rng.below(x.size())]);
      y = expand(y, y.words()[rng.below(y.size())]);
    }
    CHECK(refine(x, y).words() == oracle(x, y));
  }
}

TEST_CASE("expansion splits one leaf") {
  Antichain a = Antichain::from_words({W("0"), W("1")});
  CHECK(expand(a, W("1")).words() ==
        std::vector<Word>{W("0"), W("10"), W("11")});
  CHECK(throws_code(ErrorCode::NotAMember,
                    [&] { expand(a, W("10")); }));
}

TEST_CASE("error codes have names") {
  CHECK(std::string(error_code_name(ErrorCode::ParseError)) == "ParseError");
  CHECK(std::string(error_code_name(ErrorCode::InvariantFalsified)) ==
        "InvariantFalsified");
}
