#include "qv/bs_embed.hpp"

#include <algorithm>

namespace qv {

VElement pair_embed(const VElement& f, const VElement& g) {
  VElement::Table rows;
  rows.reserve(f.size() + g.size());
  Word zero = Word::from_bits("0");
  Word one = Word::from_bits("1");
  for (const auto& [a, b] : f.table()) {
    rows.emplace_back(zero.concat(a), zero.concat(b));
  }
  for (const auto& [a, b] : g.table()) {
    rows.emplace_back(one.concat(a), one.concat(b));
  }
  return VElement::from_pairs(rows);
}

VElement localize(const VElement& v, const Word& w) {
  VElement::Table rows;
  rows.reserve(v.size() + w.length());
  for (const auto& [a, b] : v.table()) {
    rows.emplace_back(w.concat(a), w.concat(b));
  }
  for (std::size_t i = 1; i <= w.length(); ++i) {
    Word off = Word::from_bits(w.bits().substr(0, i)).sibling();
    rows.emplace_back(off, off);
  }
  return VElement::from_pairs(rows);
}

VElement line_translation() {
  return VElement::from_pairs({
      {Word::from_bits("0"), Word::from_bits("00")},
      {Word::from_bits("10"), Word::from_bits("01")},
      {Word::from_bits("11"), Word::from_bits("1")},
  });
}

GeneratorPair torus_generators() {
  VElement t = line_translation();
  return GeneratorPair{localize(t, Word::from_bits("0")),
                       localize(t, Word::from_bits("1"))};
}

GeneratorPair klein_generators() {
  VElement t = line_translation();
  GeneratorPair out;
  out.a = pair_embed(t, t.inverse());
  // b sends [0] rigidly onto [1] and acts as the translation composed
  // with the flip on the way back, so that b^-1·a·b inverts a while
  // b^2 = pair_embed(t, t) keeps infinite order.
  VElement::Table rows{{Word::from_bits("0"), Word::from_bits("1")}};
  for (const auto& [a, b] : t.table()) {
    rows.emplace_back(Word::from_bits("1").concat(a),
                      Word::from_bits("0").concat(b));
  }
  out.b = VElement::from_pairs(rows);
  return out;
}

namespace {

/** Exact check that v maps the cone at x into the cone at u. */
bool cone_maps_into(const VElement& v, const Word& x, const Word& u) {
  for (const auto& [a, b] : v.table()) {
    if (x.is_prefix_of(a)) {
      if (!u.is_prefix_of(b)) return false;
    } else if (a.is_prefix_of(x)) {
      if (!u.is_prefix_of(b.concat(x.strip_prefix(a)))) return false;
    }
  }
  return true;
}

Word repeat_ones(std::size_t n, bool trailing_zero) {
  std::string bits(n, '1');
  if (trailing_zero) bits.push_back('0');
  return Word::from_bits(bits);
}

}  // namespace

FreeProductPair free_product_generators(std::size_t m) {
  if (m < 1) {
    fail(ErrorCode::InvalidOrder, "the rotation order must be positive");
  }
  VElement t = line_translation();

  std::vector<Word> b_cones;
  for (std::size_t i = 1; i + 1 <= m; ++i) {
    b_cones.push_back(repeat_ones(i, true));
  }
  b_cones.push_back(repeat_ones(m, false));

  VElement c = VElement::identity();
  if (m >= 2) {
    VElement::Table rows{{Word::from_bits("0"), Word::from_bits("0")}};
    for (std::size_t i = 0; i < m; ++i) {
      rows.emplace_back(b_cones[i], b_cones[(i + 1) % m]);
    }
    c = VElement::from_pairs(rows);
  }

  VElement g;
  if (m == 1) {
    g = VElement::from_pairs({
        {Word::from_bits("0"), Word::from_bits("10")},
        {Word::from_bits("10"), Word::from_bits("0")},
        {Word::from_bits("11"), Word::from_bits("11")},
    });
  } else {
    g = VElement::from_pairs({
        {Word::from_bits("0"), Word::from_bits("100")},
        {Word::from_bits("100"), Word::from_bits("0")},
        {Word::from_bits("101"), Word::from_bits("11")},
        {Word::from_bits("11"), Word::from_bits("101")},
    });
  }
  VElement h = compose(compose(g.inverse(), t), g);

  PingPongCertificate cert;
  cert.m = m;
  cert.u_plus = g.apply(Word::from_bits("0"));
  cert.u_minus = g.apply(Word::from_bits("11"));
  cert.b_cones = b_cones;

  cert.disjoint_ok = !comparable(cert.u_plus, cert.u_minus) &&
                     b_cones[0].is_prefix_of(cert.u_plus) &&
                     b_cones[0].is_prefix_of(cert.u_minus);

  cert.order_ok = c.power(static_cast<long long>(m)).is_identity();
  for (std::size_t i = 1; i < m && cert.order_ok; ++i) {
    cert.order_ok = !c.power(static_cast<long long>(i)).is_identity();
  }

  cert.rotation_ok = true;
  for (std::size_t i = 1; i < m && cert.rotation_ok; ++i) {
    VElement ci = c.power(static_cast<long long>(i));
    cert.rotation_ok = cone_maps_into(ci, cert.u_plus, b_cones[i]) &&
                       cone_maps_into(ci, cert.u_minus, b_cones[i]);
  }

  cert.forward_ok = cone_maps_into(h, cert.u_plus, cert.u_plus);
  for (std::size_t i = 1; i < m && cert.forward_ok; ++i) {
    cert.forward_ok = cone_maps_into(h, b_cones[i], cert.u_plus);
  }
  VElement h_inv = h.inverse();
  cert.backward_ok = cone_maps_into(h_inv, cert.u_minus, cert.u_minus);
  for (std::size_t i = 1; i < m && cert.backward_ok; ++i) {
    cert.backward_ok = cone_maps_into(h_inv, b_cones[i], cert.u_minus);
  }

  return FreeProductPair{h, c, cert};
}

BSWitness bs_generators(std::size_t m, int e) {
  if (m < 1) {
    fail(ErrorCode::InvalidOrder, "the torsion order m must be positive");
  }
  if (e != 1 && e != -1) {
    fail(ErrorCode::InvalidArgument, "the exponent sign e must be +1 or -1");
  }
  FreeProductPair fp = free_product_generators(m);
  GeneratorPair flat = e == 1 ? torus_generators() : klein_generators();

  BSWitness out;
  out.m = m;
  out.e = e;
  out.a = pair_embed(fp.c, flat.a);
  out.b = pair_embed(fp.h, flat.b);
  out.pingpong = fp.certificate;

  long long mm = static_cast<long long>(m);
  VElement lhs =
      compose(compose(out.b.inverse(), out.a.power(mm)), out.b);
  out.relation_holds = lhs == out.a.power(e * mm);
  out.a_power_nontrivial = !out.a.power(mm).is_identity();
  out.a_torsion = torsion_test(out.a);
  return out;
}

BrittonReport britton_nontriviality(const BSWitness& witness,
                                    std::size_t max_length) {
  BrittonReport report;
  report.max_length = max_length;
  report.all_nontrivial = true;

  const VElement letters[4] = {witness.a, witness.a.inverse(), witness.b,
                               witness.b.inverse()};
  const char* names[4] = {"a", "a-", "b", "b-"};
  auto inverse_of = [](int l) { return l ^ 1; };
  long long modulus = static_cast<long long>(witness.m);

  std::vector<int> word;
  std::vector<VElement> products{VElement::identity()};

  auto is_pinch = [&](int next) -> bool {
    if (next != 2 && next != 3) return false;
    std::size_t i = word.size();
    long long p = 0;
    while (i > 0 && (word[i - 1] == 0 || word[i - 1] == 1)) {
      p += word[i - 1] == 0 ? 1 : -1;
      --i;
    }
    if (i == 0 || p == 0) return false;
    int opener = next == 2 ? 3 : 2;
    return word[i - 1] == opener && p % modulus == 0;
  };

  auto dfs = [&](auto&& self, std::size_t depth) -> bool {
    if (depth == max_length) return true;
    for (int l = 0; l < 4; ++l) {
      if (!word.empty() && word.back() == inverse_of(l)) continue;
      if (is_pinch(l)) continue;
      word.push_back(l);
      products.push_back(compose(products.back(), letters[l]));
      ++report.words_checked;
      if (products.back().is_identity()) {
        report.all_nontrivial = false;
        for (int x : word) {
          report.failing_word += names[x];
          report.failing_word += " ";
        }
        return false;
      }
      if (!self(self, depth + 1)) return false;
      word.pop_back();
      products.pop_back();
    }
    return true;
  };
  dfs(dfs, 0);
  return report;
}

}  // namespace qv
