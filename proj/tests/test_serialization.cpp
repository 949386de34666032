#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <functional>
#include <string>

#include "doctest.h"
#include "qv/error.hpp"
#include "qv/rng.hpp"
#include "qv/serialization.hpp"
#include "test_util.hpp"

using namespace qv;
using qv::testing::elem;
using qv::testing::table;
using qv::testing::W;

namespace {

std::string thrown_message(ErrorCode code, const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == code ? e.what() : std::string();
  }
  return std::string();
}

const VElement t = elem({{"0", "00"}, {"10", "01"}, {"11", "1"}});

}  // namespace

TEST_CASE("text round trip") {
  std::string text = serialize_v_text(t);
  CHECK(text == "0 -> 00\n10 -> 01\n11 -> 1\n");
  CHECK(parse_v_text(text) == t);
  CHECK(parse_v_text("0->00\n10->01\n11->1") == t);
  CHECK(parse_v_text("  11  ->  1 \n0 -> 00\n\n10 -> 01\n") == t);
  CHECK(parse_v_text("^ -> ^") == VElement::identity());
  CHECK(serialize_v_text(VElement::identity()) == "^ -> ^\n");
}

TEST_CASE("text parse errors carry positions") {
  std::string m1 = thrown_message(ErrorCode::ParseError,
                                  [] { parse_v_text("0 -> 00\n10 01\n"); });
  CHECK(m1.find("line 2") != std::string::npos);
  CHECK(m1.find("'->'") != std::string::npos);

  std::string m2 = thrown_message(ErrorCode::ParseError,
                                  [] { parse_v_text("0 -> 00 junk\n"); });
  CHECK(m2.find("line 1") != std::string::npos);
  CHECK(m2.find("column 9") != std::string::npos);

  std::string m3 =
      thrown_message(ErrorCode::ParseError, [] { parse_v_text("0 -> 2\n"); });
  CHECK(m3.find("line 1") != std::string::npos);

  std::string m4 =
      thrown_message(ErrorCode::ParseError, [] { parse_v_text("\n  \n"); });
  CHECK(m4.find("no table rows") != std::string::npos);
}

TEST_CASE("invalid tables are rejected after parsing") {
  CHECK(thrown_message(ErrorCode::IncompleteCover,
                       [] { parse_v_text("0 -> 0\n10 -> 10\n"); }) != "");
  CHECK(thrown_message(ErrorCode::NotBijection, [] {
          parse_v_text("0 -> 0\n1 -> 0\n");
        }) != "");
}

TEST_CASE("json round trip") {
  std::string doc = serialize_v_json(t);
  CHECK(doc == R"({"pairs":[["0","00"],["10","01"],["11","1"]]})");
  CHECK(parse_v_json(doc) == t);
  CHECK(parse_v_json(R"({"pairs": [["^", "^"]]})") == VElement::identity());

  Rng rng(3001);
  for (int i = 0; i < 20; ++i) {
    VElement v = VElement::random_element(rng, 8);
    CHECK(parse_v_json(serialize_v_json(v)) == v);
    CHECK(parse_v_text(serialize_v_text(v)) == v);
  }
}

TEST_CASE("json parse errors") {
  CHECK(thrown_message(ErrorCode::ParseError,
                       [] { parse_v_json("{pairs: }"); }) != "");
  CHECK(thrown_message(ErrorCode::ParseError,
                       [] { parse_v_json("{}"); }) != "");
  CHECK(thrown_message(ErrorCode::ParseError,
                       [] { parse_v_json(R"({"pairs": [["0"]]})"); }) != "");
  CHECK(thrown_message(ErrorCode::ParseError, [] {
          parse_v_json(R"({"pairs": [["0", 7], ["1", "1"]]})");
        }) != "");
}

TEST_CASE("quasi-automorphism json round trip") {
  QAutElement tr = QAutElement::from_parts(
      table({{"00", "00"}, {"01", "01"}, {"10", "10"}, {"11", "11"}}),
      {{Word::epsilon(), Word::epsilon()},
       {W("0"), W("1")},
       {W("1"), W("0")}});
  std::string doc = serialize_qaut_json(tr);
  CHECK(doc.find("\"level\":2") != std::string::npos);
  CHECK(parse_qaut_json(doc) == tr);

  CHECK(parse_qaut_json(serialize_qaut_json(QAutElement::identity())) ==
        QAutElement::identity());

  Rng rng(3002);
  for (int i = 0; i < 20; ++i) {
    QAutElement a = QAutElement::random_element(rng, 4);
    CHECK(parse_qaut_json(serialize_qaut_json(a)) == a);
  }
}

TEST_CASE("quasi-automorphism json errors") {
  CHECK(thrown_message(ErrorCode::ParseError,
                       [] { parse_qaut_json("{}"); }) != "");
  CHECK(thrown_message(ErrorCode::ParseError, [] {
          parse_qaut_json(R"({"level": 1, "v_part": [["0","0"],["1","1"]]})");
        }) != "");
  CHECK(thrown_message(ErrorCode::ParseError, [] {
          parse_qaut_json(
              R"({"level": "x", "v_part": [], "bijection": []})");
        }) != "");
  CHECK(thrown_message(ErrorCode::MalformedDecomposition, [] {
          parse_qaut_json(
              R"({"level": 2, "v_part": [["0","0"],["1","1"]], "bijection": [["^","^"]]})");
        }) != "");
}

TEST_CASE("serialized text is canonical") {
  CHECK(serialize_v_text(parse_v_text("11 -> 1\n0 -> 00\n10 -> 01")) ==
        "0 -> 00\n10 -> 01\n11 -> 1\n");
  CHECK(serialize_v_text(parse_v_text("00 -> 000\n01 -> 001\n10 -> 01\n11 -> 1")) ==
        "0 -> 00\n10 -> 01\n11 -> 1\n");
}
