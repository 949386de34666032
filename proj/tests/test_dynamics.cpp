#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <functional>

#include "doctest.h"
#include "qv/bs_embed.hpp"
#include "qv/dynamics.hpp"
#include "qv/error.hpp"
#include "qv/rng.hpp"
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

TEST_CASE("points are canonicalized") {
  CHECK(CantorPoint::make("", "00") == CantorPoint::make("", "0"));
  CHECK(CantorPoint::make("0", "0") == CantorPoint::make("", "0"));
  CHECK(CantorPoint::make("10", "10") == CantorPoint::make("", "10"));
  CHECK(CantorPoint::make("0", "10") == CantorPoint::make("01", "01"));
  CHECK(CantorPoint::make("", "0101") == CantorPoint::make("", "01"));
  CHECK(CantorPoint::make("", "10") != CantorPoint::make("", "01"));
  CHECK(CantorPoint::make("1", "0") != CantorPoint::make("", "0"));
  CHECK(throws_code(ErrorCode::InvalidArgument,
                    [] { CantorPoint::make("0", ""); }));
  CHECK(throws_code(ErrorCode::ParseError,
                    [] { CantorPoint::make("0x", "1"); }));
}

TEST_CASE("point prefixes") {
  CantorPoint p = CantorPoint::make("01", "10");
  CHECK(p.bit_at(0) == '0');
  CHECK(p.bit_at(1) == '1');
  CHECK(p.bit_at(2) == '1');
  CHECK(p.bit_at(3) == '0');
  CHECK(p.prefix(4) == W("0110"));
  CHECK(p.has_prefix(W("011")));
  CHECK_FALSE(p.has_prefix(W("00")));
  CHECK(p.has_prefix(Word::epsilon()));
}

TEST_CASE("applying a table to a point") {
  CantorPoint zeros = CantorPoint::make("", "0");
  CantorPoint ones = CantorPoint::make("", "1");
  CHECK(apply_element(t, zeros) == zeros);
  CHECK(apply_element(t, ones) == ones);
  CHECK(apply_element(t, CantorPoint::make("1", "0")) ==
        CantorPoint::make("01", "0"));
  CHECK(apply_element(t, CantorPoint::make("", "10")) ==
        CantorPoint::make("01", "10"));
  CHECK(apply_element(s, zeros) == CantorPoint::make("1", "0"));
  CHECK(apply_element(s, apply_element(s, zeros)) == zeros);
  CHECK(apply_element(s, ones) == CantorPoint::make("0", "1"));
  CHECK(apply_element(VElement::identity(), CantorPoint::make("01", "10")) ==
        CantorPoint::make("01", "10"));
}

TEST_CASE("fixed point certificates of the translation, pinned") {
  std::vector<FixedPointCertificate> fp = fixed_points(t);
  REQUIRE(fp.size() == 2);
  CHECK(fp[0].domain == W("0"));
  CHECK(fp[0].range == W("00"));
  CHECK(fp[0].point == CantorPoint::make("", "0"));
  CHECK(fp[0].exponent == -1);
  CHECK(fp[0].attracting);
  CHECK(fp[1].domain == W("11"));
  CHECK(fp[1].range == W("1"));
  CHECK(fp[1].point == CantorPoint::make("", "1"));
  CHECK(fp[1].exponent == 1);
  CHECK_FALSE(fp[1].attracting);
  for (const FixedPointCertificate& cert : fp) {
    CHECK(apply_element(t, cert.point) == cert.point);
  }
}

TEST_CASE("no certificates without comparable rows") {
  CHECK(fixed_points(s).empty());
  CHECK(fixed_points(VElement::identity()).empty());
}

TEST_CASE("finite order decisions, pinned") {
  TorsionVerdict vs = torsion_test(s);
  CHECK(vs.torsion);
  CHECK(vs.value == 2);

  TorsionVerdict vt = torsion_test(t);
  CHECK_FALSE(vt.torsion);
  CHECK(vt.value == 1);
  REQUIRE(vt.certificate.has_value());
  CHECK(vt.certificate->domain == W("0"));

  TorsionVerdict vid = torsion_test(VElement::identity());
  CHECK(vid.torsion);
  CHECK(vid.value == 1);
}

TEST_CASE("orbit lengths, pinned") {
  CHECK(periodic_orbit_lengths(VElement::identity()) ==
        std::set<long long>{1});
  CHECK(periodic_orbit_lengths(s) == std::set<long long>{2});
  CHECK(periodic_orbit_lengths(t) == std::set<long long>{1});
  VElement u = compose(s, localize(t, W("0")));
  CHECK(periodic_orbit_lengths(u) == std::set<long long>{2});
}

TEST_CASE("orbit lengths of a six cycle") {
  VElement w3 = elem({{"000", "001"}, {"001", "01"}, {"01", "000"}, {"1", "1"}});
  VElement v6 = compose(w3, s);
  TorsionVerdict verdict = torsion_test(v6);
  CHECK(verdict.torsion);
  CHECK(verdict.value == 6);
  std::set<long long> lengths = periodic_orbit_lengths(v6);
  CHECK(lengths.count(6) == 1);
  for (long long n : lengths) {
    CHECK(6 % n == 0);
  }
}

TEST_CASE("stabilizing powers") {
  StabilizedPower sp = stabilizing_power(t);
  CHECK(sp.m == 1);
  CHECK(sp.alpha == t);

  VElement u = compose(s, localize(t, W("0")));
  StabilizedPower su = stabilizing_power(u);
  CHECK(su.m == 2);
  CHECK(su.alpha == u.power(2));
  CHECK(periodic_orbit_lengths(su.alpha) == std::set<long long>{1});

  CHECK(throws_code(ErrorCode::IsTorsion, [] { stabilizing_power(s); }));
  CHECK(throws_code(ErrorCode::IsTorsion,
                    [] { stabilizing_power(VElement::identity()); }));
}

TEST_CASE("important points need a stabilized map") {
  VElement u = compose(s, localize(t, W("0")));
  CHECK(throws_code(ErrorCode::HasNontrivialFiniteOrbits,
                    [&] { important_points(u); }));
  CHECK(throws_code(ErrorCode::IsTorsion, [] { important_points(s); }));

  std::vector<FixedPointCertificate> pts = important_points(t);
  CHECK(pts.size() == 2);
  std::vector<FixedPointCertificate> pts2 =
      important_points(stabilizing_power(u).alpha);
  CHECK(pts2.size() == 4);
}

TEST_CASE("slope spectrum, pinned") {
  CHECK(slope_spectrum(t).values == std::set<long long>{-1, 1});
  CHECK(slope_spectrum(t.power(3)).values == std::set<long long>{-3, 3});
  CHECK(slope_spectrum(t.inverse()).values == std::set<long long>{-1, 1});
  CHECK(slope_spectrum(t).max_abs() == 1);

  VElement alpha = stabilizing_power(compose(s, localize(t, W("0")))).alpha;
  CHECK(slope_spectrum(alpha).values == std::set<long long>{-1, 1});

  SlopeSpectrum base{{-1, 2}};
  CHECK(base.scaled(3).values == std::set<long long>{-3, 6});
  CHECK(base.scaled(-1).values == std::set<long long>{1, -2});
  CHECK(base.max_abs() == 2);
}

TEST_CASE("spectrum scales with the exponent") {
  Rng rng(2001);
  int found = 0;
  while (found < 8) {
    VElement v = VElement::random_element(rng, 10);
    try {
      if (torsion_test(v).torsion) continue;
      StabilizedPower sp = stabilizing_power(v);
      if (sp.m > 12) continue;
      SlopeSpectrum s1 = slope_spectrum(sp.alpha);
      for (long long u : {2LL, 3LL, -1LL, -4LL}) {
        CHECK(slope_spectrum(sp.alpha.power(u)) == s1.scaled(u));
      }
      ++found;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::BoundExceeded) throw;
    }
  }
}

TEST_CASE("spectrum is a conjugacy invariant") {
  Rng rng(2002);
  SlopeSpectrum st = slope_spectrum(t);
  for (int i = 0; i < 10; ++i) {
    VElement w = VElement::random_element(rng, 8);
    VElement conj = compose(compose(w.inverse(), t), w);
    CHECK(slope_spectrum(conj) == st);
  }
}

TEST_CASE("power conjugacy checks") {
  ConjugatePowerResult same =
      conjugate_power_check(t, VElement::identity(), 2, 2);
  CHECK(same.holds);
  REQUIRE(same.torsion.has_value());
  CHECK_FALSE(*same.torsion);
  CHECK(same.m == 1);
  CHECK(same.s1 == std::set<long long>{-1, 1});
  CHECK(same.k == 1);

  ConjugatePowerResult torsion_case =
      conjugate_power_check(s, VElement::identity(), 1, 3);
  CHECK(torsion_case.holds);
  REQUIRE(torsion_case.torsion.has_value());
  CHECK(*torsion_case.torsion);

  ConjugatePowerResult no = conjugate_power_check(t, s, 1, 2);
  CHECK_FALSE(no.holds);
  CHECK_FALSE(no.torsion.has_value());

  Rng rng(2003);
  for (int i = 0; i < 20; ++i) {
    VElement v = VElement::random_element(rng, 10);
    if (torsion_test(v).torsion) continue;
    VElement w = VElement::random_element(rng, 6);
    CHECK_FALSE(conjugate_power_check(v, w, 1, 2).holds);
    CHECK_FALSE(conjugate_power_check(v, w, 2, -3).holds);
  }
}
