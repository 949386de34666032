#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <functional>

#include "doctest.h"
#include "qv/error.hpp"
#include "qv/rng.hpp"
#include "qv/velement.hpp"
#include "test_util.hpp"

using namespace qv;
using qv::testing::agree_on_level;
using qv::testing::elem;
using qv::testing::table;
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

const VElement s = elem({{"0", "1"}, {"1", "0"}});
const VElement t = elem({{"0", "00"}, {"10", "01"}, {"11", "1"}});

}  // namespace

TEST_CASE("identity") {
  VElement id = VElement::identity();
  CHECK(id.is_identity());
  CHECK(id.size() == 1);
  CHECK(id.table()[0].first == Word::epsilon());
  CHECK(id.apply(W("0110")) == W("0110"));
  CHECK(id.apply(Word::epsilon()) == Word::epsilon());
}

TEST_CASE("table validation") {
  CHECK(throws_code(ErrorCode::NotBijection, [] {
    VElement::from_pairs(testing::table({{"0", "0"}, {"1", "0"}}));
  }));
  CHECK(throws_code(ErrorCode::InvalidAntichain, [] {
    VElement::from_pairs(testing::table({{"0", "0"}, {"01", "1"}}));
  }));
  CHECK(throws_code(ErrorCode::IncompleteCover, [] {
    VElement::from_pairs(testing::table({{"0", "0"}, {"10", "1"}}));
  }));
  CHECK(throws_code(ErrorCode::IncompleteCover, [] {
    VElement::from_pairs(testing::table({{"0", "00"}, {"1", "01"}}));
  }));
  CHECK(throws_code(ErrorCode::IncompleteCover,
                    [] { VElement::from_pairs({}); }));
}

TEST_CASE("reduction removes sibling pairs") {
  CHECK(elem({{"00", "00"}, {"01", "01"}, {"1", "1"}}).is_identity());
  CHECK(elem({{"00", "10"}, {"01", "11"}, {"1", "0"}}) == s);
  CHECK(elem({{"000", "000"},
              {"001", "001"},
              {"01", "01"},
              {"1", "1"}})
            .is_identity());
  VElement expanded_t = elem(
      {{"00", "000"}, {"01", "001"}, {"10", "01"}, {"110", "10"}, {"111", "11"}});
  CHECK(expanded_t == t);
  CHECK(reduce(table({{"0", "0"}, {"10", "10"}, {"11", "11"}})).is_identity());
}

TEST_CASE("tables are kept sorted") {
  VElement v = elem({{"11", "0"}, {"0", "10"}, {"10", "11"}});
  CHECK(v.table()[0].first == W("0"));
  CHECK(v.table()[1].first == W("10"));
  CHECK(v.table()[2].first == W("11"));
}

TEST_CASE("application and partial application") {
  CHECK(t.apply(W("0")) == W("00"));
  CHECK(t.apply(W("0110")) == W("00110"));
  CHECK(t.apply(W("10")) == W("01"));
  CHECK(t.apply(W("11")) == W("1"));
  CHECK(t.apply(W("111")) == W("11"));
  CHECK_FALSE(t.try_apply(Word::epsilon()).has_value());
  CHECK_FALSE(t.try_apply(W("1")).has_value());
  CHECK(throws_code(ErrorCode::UndefinedOnVertex,
                    [] { t.apply(W("1")); }));
  CHECK(t.try_unapply(W("00")) == W("0"));
  CHECK(t.try_unapply(W("01101")) == W("10101"));
  CHECK_FALSE(t.try_unapply(W("0")).has_value());
}

TEST_CASE("pinned composition and inversion") {
  CHECK(compose(s, t) == elem({{"00", "01"}, {"01", "1"}, {"1", "00"}}));
  CHECK(t.inverse() == elem({{"00", "0"}, {"01", "10"}, {"1", "11"}}));
  CHECK(t.power(2) ==
        elem({{"0", "000"}, {"10", "001"}, {"110", "01"}, {"111", "1"}}));
  CHECK(t.power(-1) == t.inverse());
  CHECK(t.power(0).is_identity());
  CHECK(t.power(3) == compose(t, t.power(2)));
  CHECK(compose(t, t.inverse()).is_identity());
  CHECK(compose(s, s).is_identity());
}

TEST_CASE("composition matches pointwise evaluation") {
  Rng rng(101);
  for (int i = 0; i < 60; ++i) {
    VElement a = VElement::random_element(rng, 6);
    VElement b = VElement::random_element(rng, 6);
    VElement c = compose(a, b);
    std::size_t depth = a.depth() + b.depth() + 1;
    for (const Word& w : all_words_of_length(depth)) {
      CHECK(c.apply(w) == b.apply(a.apply(w)));
    }
  }
}

TEST_CASE("group laws on random elements") {
  Rng rng(202);
  VElement id = VElement::identity();
  for (int i = 0; i < 40; ++i) {
    VElement a = VElement::random_element(rng, 8);
    VElement b = VElement::random_element(rng, 8);
    VElement c = VElement::random_element(rng, 8);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(a, a.inverse()) == id);
    CHECK(compose(a.inverse(), a) == id);
    CHECK(compose(a, id) == a);
    CHECK(compose(id, a) == a);
    CHECK(a.inverse().inverse() == a);
  }
}

TEST_CASE("random elements are canonical") {
  Rng rng(303);
  for (int i = 0; i < 40; ++i) {
    VElement a = VElement::random_element(rng, 10);
    CHECK(VElement::from_pairs(a.table()) == a);
    CHECK(a.depth() <= 10);
  }
  CHECK(VElement::random_element(7, 5) == VElement::random_element(7, 5));
}

TEST_CASE("powers satisfy exponent laws") {
  Rng rng(404);
  for (int i = 0; i < 10; ++i) {
    VElement a = VElement::random_element(rng, 5);
    CHECK(a.power(4) == compose(a.power(2), a.power(2)));
    CHECK(a.power(-3) == a.power(3).inverse());
    CHECK(compose(a.power(2), a.power(-2)).is_identity());
  }
}

TEST_CASE("equality is table equality") {
  CHECK(s != t);
  CHECK(s == elem({{"1", "0"}, {"0", "1"}}));
  Rng rng(505);
  for (int i = 0; i < 20; ++i) {
    VElement a = VElement::random_element(rng, 6);
    VElement b = VElement::random_element(rng, 6);
    bool same_on_deep = agree_on_level(a, b, a.depth() + b.depth());
    CHECK(same_on_deep == (a == b));
  }
}
