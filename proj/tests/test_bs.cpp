#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <functional>

#include "doctest.h"
#include "qv/bs_embed.hpp"
#include "qv/dynamics.hpp"
#include "qv/error.hpp"
#include "test_util.hpp"

using namespace qv;
using qv::testing::elem;
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

TEST_CASE("the translation is pinned") {
  CHECK(line_translation() == t);
}

TEST_CASE("localization, pinned") {
  CHECK(localize(t, W("0")) ==
        elem({{"00", "000"}, {"010", "001"}, {"011", "01"}, {"1", "1"}}));
  CHECK(localize(t, W("1")) ==
        elem({{"0", "0"}, {"10", "100"}, {"110", "101"}, {"111", "11"}}));
  CHECK(localize(VElement::identity(), W("01")).is_identity());
  CHECK(localize(t, Word::epsilon()) == t);
  CHECK(localize(s, W("10")) ==
        elem({{"0", "0"}, {"100", "101"}, {"101", "100"}, {"11", "11"}}));
}

TEST_CASE("pair embedding, pinned") {
  CHECK(pair_embed(s, VElement::identity()) ==
        elem({{"00", "01"}, {"01", "00"}, {"1", "1"}}));
  CHECK(pair_embed(VElement::identity(), VElement::identity()).is_identity());
  CHECK(pair_embed(t, t.inverse()) == elem({{"00", "000"},
                                            {"010", "001"},
                                            {"011", "01"},
                                            {"100", "10"},
                                            {"101", "110"},
                                            {"11", "111"}}));
  CHECK(pair_embed(s, t) == compose(localize(s, W("0")), localize(t, W("1"))));
}

TEST_CASE("torus pair, pinned") {
  GeneratorPair tp = torus_generators();
  CHECK(tp.a ==
        elem({{"00", "000"}, {"010", "001"}, {"011", "01"}, {"1", "1"}}));
  CHECK(tp.b ==
        elem({{"0", "0"}, {"10", "100"}, {"110", "101"}, {"111", "11"}}));
  CHECK(compose(tp.a, tp.b) == compose(tp.b, tp.a));
  CHECK_FALSE(torsion_test(tp.a).torsion);
  CHECK_FALSE(torsion_test(tp.b).torsion);
}

TEST_CASE("klein pair, pinned") {
  GeneratorPair kp = klein_generators();
  CHECK(kp.a == pair_embed(t, t.inverse()));
  CHECK(kp.b ==
        elem({{"0", "1"}, {"10", "000"}, {"110", "001"}, {"111", "01"}}));
  CHECK(compose(compose(kp.b.inverse(), kp.a), kp.b) == kp.a.inverse());
  VElement b2 = compose(kp.b, kp.b);
  CHECK(b2 == pair_embed(t, t));
  CHECK_FALSE(torsion_test(b2).torsion);
  CHECK_FALSE(torsion_test(kp.a).torsion);
}

TEST_CASE("free product pairs certify") {
  for (std::size_t m = 1; m <= 4; ++m) {
    FreeProductPair fp = free_product_generators(m);
    CHECK(fp.certificate.m == m);
    CHECK(fp.certificate.passed());
    CHECK(fp.c.power(static_cast<long long>(m)).is_identity());
    for (std::size_t i = 1; i < m; ++i) {
      CHECK_FALSE(fp.c.power(static_cast<long long>(i)).is_identity());
    }
    CHECK_FALSE(torsion_test(fp.h).torsion);
  }
  CHECK(free_product_generators(1).c.is_identity());
  CHECK(throws_code(ErrorCode::InvalidOrder,
                    [] { free_product_generators(0); }));
}

TEST_CASE("rotation tables, pinned") {
  CHECK(free_product_generators(2).c ==
        elem({{"0", "0"}, {"10", "11"}, {"11", "10"}}));
  CHECK(free_product_generators(3).c ==
        elem({{"0", "0"}, {"10", "110"}, {"110", "111"}, {"111", "10"}}));
}

TEST_CASE("witnesses satisfy the defining relation") {
  for (std::size_t m = 1; m <= 4; ++m) {
    for (int e : {1, -1}) {
      BSWitness w = bs_generators(m, e);
      CHECK(w.m == m);
      CHECK(w.e == e);
      CHECK(w.relation_holds);
      CHECK(w.a_power_nontrivial);
      CHECK_FALSE(w.a_torsion.torsion);
      CHECK(w.pingpong.passed());
      long long mm = static_cast<long long>(m);
      CHECK(compose(compose(w.b.inverse(), w.a.power(mm)), w.b) ==
            w.a.power(e * mm));
    }
  }
  CHECK(throws_code(ErrorCode::InvalidOrder, [] { bs_generators(0, 1); }));
  CHECK(throws_code(ErrorCode::InvalidArgument, [] { bs_generators(2, 2); }));
  CHECK(throws_code(ErrorCode::InvalidArgument, [] { bs_generators(2, 0); }));
}

TEST_CASE("short normal forms are nontrivial") {
  BSWitness w11 = bs_generators(1, 1);
  BrittonReport r11 = britton_nontriviality(w11, 4);
  CHECK(r11.max_length == 4);
  CHECK(r11.all_nontrivial);
  CHECK(r11.words_checked > 0);
  CHECK(r11.failing_word.empty());

  BSWitness w21 = bs_generators(2, -1);
  BrittonReport r21 = britton_nontriviality(w21, 4);
  CHECK(r21.all_nontrivial);
}

TEST_CASE("pinched words are recognized as trivial") {
  BSWitness w = bs_generators(2, 1);
  VElement lhs = compose(compose(w.b.inverse(), w.a.power(2)), w.b);
  CHECK(compose(lhs, w.a.power(-2)).is_identity());
}
