#include "qv/selfcheck.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <unordered_map>

#include "json.hpp"
#include "qv/bs_embed.hpp"
#include "qv/dynamics.hpp"
#include "qv/embeddings.hpp"
#include "qv/qaut.hpp"
#include "qv/rng.hpp"
#include "qv/serialization.hpp"
#include "qv/velement.hpp"

namespace qv {

namespace {

constexpr std::uint64_t kSeedStride = 0x9E3779B97F4A7C15ULL;

long long capped(long long full, long long samples) {
  return samples <= 0 ? full : std::min(full, samples);
}

VElement::Table pinned_table(
    const std::vector<std::pair<const char*, const char*>>& rows) {
  VElement::Table out;
  for (const auto& [a, b] : rows) {
    out.emplace_back(Word::from_text(a), Word::from_text(b));
  }
  return out;
}

VElement pinned(const std::vector<std::pair<const char*, const char*>>& rows) {
  return VElement::from_pairs(pinned_table(rows));
}

/** A random quasi-automorphism kept with its generating pieces. */
struct QAutSample {
  QAutElement tau;
  Antichain dom;
  std::unordered_map<Word, Word, WordHash> cone_map;
  std::unordered_map<Word, Word, WordHash> vertex_map;

  Word eval(const Word& w) const {
    auto iv = vertex_map.find(w);
    if (iv != vertex_map.end()) return iv->second;
    Word a = *dom.find_prefix_of(w);
    return cone_map.at(a).concat(w.strip_prefix(a));
  }
};

QAutSample random_qaut_sample(Rng& rng, std::size_t max_level) {
  Antichain dom = Antichain::from_words({Word::epsilon()});
  Antichain ran = Antichain::from_words({Word::epsilon()});
  std::size_t carets = static_cast<std::size_t>(
      rng.below(std::uint64_t{1} << std::min<std::size_t>(max_level, 8)));
  auto grow = [&](Antichain& chain) {
    std::vector<Word> shallow;
    for (const Word& w : chain.words()) {
      if (w.length() < max_level) shallow.push_back(w);
    }
    chain = expand(chain, shallow[rng.below(shallow.size())]);
  };
  for (std::size_t i = 0; i < carets; ++i) {
    grow(dom);
    grow(ran);
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
  QAutSample out;
  out.tau = QAutElement::from_general_decomposition(cone_table, bijection);
  out.dom = dom;
  for (const auto& [a, b] : cone_table) out.cone_map.emplace(a, b);
  for (const auto& [w, u] : bijection) out.vertex_map.emplace(w, u);
  return out;
}

VElement random_torsion_element(Rng& rng, std::size_t n_carets) {
  Antichain tree = Antichain::from_words({Word::epsilon()});
  for (std::size_t i = 0; i < n_carets; ++i) {
    tree = expand(tree, tree.words()[rng.below(tree.size())]);
  }
  std::vector<Word> targets = tree.words();
  rng.shuffle(targets);
  VElement::Table pairs;
  for (std::size_t i = 0; i < tree.size(); ++i) {
    pairs.emplace_back(tree.words()[i], targets[i]);
  }
  return VElement::from_pairs(pairs);
}

std::vector<long long> prime_factors(long long n) {
  std::vector<long long> out;
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

CriterionResult criterion_group_axioms(std::uint64_t seed, long long samples) {
  Rng rng(seed ^ (kSeedStride * 1));
  long long n_v = capped(1000, samples);
  long long n_q = capped(300, samples);
  long long failures = 0;

  std::vector<VElement> vs;
  for (long long i = 0; i < n_v; ++i) {
    vs.push_back(VElement::random_element(rng, 12));
  }
  VElement id_v = VElement::identity();
  for (const VElement& a : vs) {
    if (compose(a, a.inverse()) != id_v) ++failures;
    if (compose(a.inverse(), a) != id_v) ++failures;
    if (compose(a, id_v) != a || compose(id_v, a) != a) ++failures;
  }
  for (std::size_t i = 0; i + 2 < vs.size(); i += 3) {
    const VElement &a = vs[i], &b = vs[i + 1], &c = vs[i + 2];
    if (compose(compose(a, b), c) != compose(a, compose(b, c))) ++failures;
  }

  std::vector<QAutElement> qs;
  for (long long i = 0; i < n_q; ++i) {
    qs.push_back(QAutElement::random_element(rng, 4));
  }
  QAutElement id_q = QAutElement::identity();
  for (const QAutElement& a : qs) {
    if (compose(a, a.inverse()) != id_q) ++failures;
    if (compose(a.inverse(), a) != id_q) ++failures;
    if (compose(a, id_q) != a || compose(id_q, a) != a) ++failures;
  }
  for (std::size_t i = 0; i + 2 < qs.size(); i += 3) {
    const QAutElement &a = qs[i], &b = qs[i + 1], &c = qs[i + 2];
    if (compose(compose(a, b), c) != compose(a, compose(b, c))) ++failures;
  }

  std::ostringstream details;
  details << n_v << " table elements, " << n_q << " quasi-automorphisms, "
          << failures << " failures";
  return {1, "group-axioms", failures == 0, details.str()};
}

CriterionResult criterion_planting(std::uint64_t seed, long long samples) {
  Rng rng(seed ^ (kSeedStride * 2));
  long long n_pairs = capped(500, samples);
  long long n_wd = capped(200, samples);
  long long failures = 0;

  if (!theta(VElement::identity()).is_identity()) ++failures;
  for (long long i = 0; i < n_pairs; ++i) {
    VElement a = VElement::random_element(rng, 12);
    VElement b = VElement::random_element(rng, 12);
    QAutElement ta = theta(a);
    QAutElement tb = theta(b);
    if (compose(ta, tb) != theta(compose(a, b))) ++failures;
    if (ta.is_identity() != a.is_identity()) ++failures;
    if (tb.is_identity() != b.is_identity()) ++failures;

    std::size_t depth = ta.cutoff_level() + 1;
    bool fixes_right_half = true;
    for (std::size_t len = 1; len <= depth && fixes_right_half; ++len) {
      for (const Word& tail : all_words_of_length(len - 1)) {
        Word w = Word::from_bits("1").concat(tail);
        if (ta.apply(w) != w) {
          fixes_right_half = false;
          break;
        }
      }
    }
    if (!fixes_right_half) ++failures;
  }
  for (long long i = 0; i < n_wd; ++i) {
    VElement a = VElement::random_element(rng, 12);
    std::size_t expansions = 1 + rng.below(3);
    if (!verify_theta_well_defined(a, expansions, rng)) ++failures;
  }

  std::ostringstream details;
  details << n_pairs << " pairs, " << n_wd << " expansion cases, " << failures
          << " failures";
  return {2, "planting-embedding", failures == 0, details.str()};
}

CriterionResult criterion_doubling(std::uint64_t seed, long long samples) {
  Rng rng(seed ^ (kSeedStride * 3));
  long long n_pairs = capped(500, samples);
  long long n_wd = capped(200, samples);
  long long failures = 0;

  if (!phi(QAutElement::identity()).is_identity()) ++failures;
  for (long long i = 0; i < n_pairs; ++i) {
    QAutElement a = QAutElement::random_element(rng, 4);
    QAutElement b = QAutElement::random_element(rng, 4);
    VElement pa = phi(a);
    VElement pb = phi(b);
    if (compose(pa, pb) != phi(compose(a, b))) ++failures;
    if (pa.is_identity() != a.is_identity()) ++failures;
    if (pb.is_identity() != b.is_identity()) ++failures;
  }
  for (long long i = 0; i < n_wd; ++i) {
    QAutElement a = QAutElement::random_element(rng, 4);
    if (!verify_phi_well_defined(a, 3)) ++failures;
  }

  std::ostringstream details;
  details << n_pairs << " pairs, " << n_wd << " level cases, " << failures
          << " failures";
  return {3, "doubling-embedding", failures == 0, details.str()};
}

CriterionResult criterion_composite(std::uint64_t seed, long long samples) {
  Rng rng(seed ^ (kSeedStride * 4));
  long long n_pairs = capped(500, samples);
  long long failures = 0;

  auto psi = [](const VElement& v) { return phi(theta(v)); };
  for (long long i = 0; i < n_pairs; ++i) {
    VElement a = VElement::random_element(rng, 6);
    VElement b = VElement::random_element(rng, 6);
    if (compose(psi(a), psi(b)) != psi(compose(a, b))) ++failures;
    if (psi(a).is_identity() != a.is_identity()) ++failures;
    if (psi(b).is_identity() != b.is_identity()) ++failures;
  }

  std::ostringstream details;
  details << n_pairs << " pairs, " << failures << " failures";
  return {4, "composite-embedding", failures == 0, details.str()};
}

CriterionResult criterion_decomposition(std::uint64_t seed,
                                        long long samples) {
  Rng rng(seed ^ (kSeedStride * 5));
  long long n = capped(300, samples);
  long long reconstruction_failures = 0;
  long long permutation_failures = 0;
  long long z_disagreements = 0;

  for (long long i = 0; i < n; ++i) {
    QAutSample sample = random_qaut_sample(rng, 4);
    const MinimalDecomposition& md = sample.tau.minimal_decomposition();

    std::unordered_map<Word, Word, WordHash> b_map, p_map;
    for (const auto& [w, u] : md.b) b_map.emplace(w, u);
    for (const auto& [x, y] : md.p) p_map.emplace(x, y);
    auto reconstructed = [&](const Word& w) {
      auto ib = b_map.find(w);
      Word u = ib != b_map.end() ? ib->second : md.v_min.apply(w);
      auto ip = p_map.find(u);
      return ip != p_map.end() ? ip->second : u;
    };

    std::size_t depth = sample.tau.cutoff_level() + 2;
    bool ok = true;
    for (const Word& w : all_words_up_to_length(depth)) {
      if (reconstructed(w) != sample.eval(w)) {
        ok = false;
        break;
      }
    }
    if (!ok) ++reconstruction_failures;

    std::vector<Word> from, to;
    for (const auto& [x, y] : md.p) {
      from.push_back(x);
      to.push_back(y);
    }
    std::sort(from.begin(), from.end());
    std::sort(to.begin(), to.end());
    if (from != to) ++permutation_failures;

    if (sample.tau.cutoff_from_z() != sample.tau.cutoff_level()) {
      ++z_disagreements;
    }
  }

  long long failures =
      reconstruction_failures + permutation_failures + z_disagreements;
  std::ostringstream details;
  details << n << " samples, " << reconstruction_failures
          << " reconstruction failures, " << permutation_failures
          << " support failures, cross-check level disagreed on "
          << z_disagreements;
  return {5, "decomposition", failures == 0, details.str()};
}

CriterionResult criterion_dynamics(std::uint64_t seed, long long samples) {
  Rng rng(seed ^ (kSeedStride * 6));
  long long n_scale = capped(200, samples);
  long long n_conj = capped(200, samples);
  long long n_falsify = capped(200, samples);
  long long n_torsion = capped(1000, samples);
  long long failures = 0;
  std::ostringstream details;

  std::vector<VElement> stabilized;
  std::vector<SlopeSpectrum> spectra;
  long long attempts = 0;
  const long long max_attempts = 50 * std::max<long long>(n_scale, 1);
  while (static_cast<long long>(stabilized.size()) < n_scale &&
         attempts < max_attempts) {
    ++attempts;
    VElement v = VElement::random_element(rng, 12);
    try {
      if (torsion_test(v).torsion) continue;
      StabilizedPower sp = stabilizing_power(v);
      if (sp.m > 24) continue;
      stabilized.push_back(sp.alpha);
      spectra.push_back(slope_spectrum(sp.alpha));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::BoundExceeded) continue;
      throw;
    }
  }
  if (static_cast<long long>(stabilized.size()) < n_scale) ++failures;
  for (std::size_t i = 0; i < stabilized.size(); ++i) {
    for (long long u = 1; u <= 5; ++u) {
      for (long long sign : {1LL, -1LL}) {
        long long exponent = sign * u;
        SlopeSpectrum actual =
            slope_spectrum(stabilized[i].power(exponent));
        if (!(actual == spectra[i].scaled(exponent))) ++failures;
      }
    }
  }
  details << "scaling on " << stabilized.size() << " stabilized maps";

  long long conj_failures = 0;
  if (!stabilized.empty()) {
    for (long long i = 0; i < n_conj; ++i) {
      const VElement& alpha = stabilized[i % stabilized.size()];
      const SlopeSpectrum& expected = spectra[i % stabilized.size()];
      VElement w = VElement::random_element(rng, 8);
      VElement beta = compose(compose(w.inverse(), alpha), w);
      if (!(slope_spectrum(beta) == expected)) ++conj_failures;
    }
  }
  failures += conj_failures;
  details << ", " << n_conj << " conjugations";

  long long falsify_failures = 0;
  for (long long i = 0; i < n_falsify; ++i) {
    VElement v = VElement::identity();
    for (int tries = 0; tries < 100; ++tries) {
      v = VElement::random_element(rng, 12);
      if (!torsion_test(v).torsion) break;
    }
    VElement w = VElement::random_element(rng, 8);
    long long r = (1 + static_cast<long long>(rng.below(4))) *
                  (rng.coin() ? 1 : -1);
    long long s = r;
    while (std::llabs(s) == std::llabs(r)) {
      s = (1 + static_cast<long long>(rng.below(4))) *
          (rng.coin() ? 1 : -1);
    }
    try {
      if (conjugate_power_check(v, w, r, s).holds) ++falsify_failures;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::InvariantFalsified) {
        ++falsify_failures;
      } else {
        throw;
      }
    }
  }
  failures += falsify_failures;
  details << ", " << n_falsify << " power-conjugacy probes";

  long long torsion_failures = 0;
  for (long long i = 0; i < n_torsion; ++i) {
    VElement v = (i % 2 == 0) ? random_torsion_element(rng, 12)
                              : VElement::random_element(rng, 12);
    try {
      TorsionVerdict verdict = torsion_test(v);
      if (verdict.torsion) {
        if (!v.power(verdict.value).is_identity()) ++torsion_failures;
        for (long long p : prime_factors(verdict.value)) {
          if (v.power(verdict.value / p).is_identity()) ++torsion_failures;
        }
      } else {
        VElement wn = v.power(verdict.value);
        const FixedPointCertificate& cert = *verdict.certificate;
        bool row_found = false;
        for (const auto& [a, b] : wn.table()) {
          if (a == cert.domain && b == cert.range) row_found = true;
        }
        if (!row_found || !comparable(cert.domain, cert.range) ||
            cert.domain == cert.range) {
          ++torsion_failures;
        }
        if (!(apply_element(wn, cert.point) == cert.point)) {
          ++torsion_failures;
        }
      }
    } catch (const Error&) {
      ++torsion_failures;
    }
  }
  failures += torsion_failures;
  details << ", " << n_torsion << " order verdicts, " << failures
          << " failures";
  return {6, "dynamics", failures == 0, details.str()};
}

CriterionResult criterion_bs(std::uint64_t, long long) {
  long long failures = 0;
  std::ostringstream details;

  for (std::size_t m = 1; m <= 4; ++m) {
    for (int e : {1, -1}) {
      BSWitness w = bs_generators(m, e);
      if (!w.relation_holds) ++failures;
      if (!w.pingpong.passed()) ++failures;
      if (w.a_torsion.torsion) ++failures;
      if (!w.a_power_nontrivial) ++failures;
      if (!britton_nontriviality(w, 6).all_nontrivial) ++failures;
    }
  }

  GeneratorPair kp = klein_generators();
  if (compose(compose(kp.b.inverse(), kp.a), kp.b) != kp.a.inverse()) {
    ++failures;
  }
  if (torsion_test(compose(kp.b, kp.b)).torsion) ++failures;

  details << "8 parameter pairs, depth-6 normal-form sweep, " << failures
          << " failures";
  return {7, "bs-witnesses", failures == 0, details.str()};
}

CriterionResult criterion_examples(std::uint64_t, long long) {
  long long failures = 0;

  VElement s = pinned({{"0", "1"}, {"1", "0"}});
  VElement t = line_translation();

  if (compose(s, t) != pinned({{"00", "01"}, {"01", "1"}, {"1", "00"}})) {
    ++failures;
  }
  if (t.inverse() != pinned({{"00", "0"}, {"01", "10"}, {"1", "11"}})) {
    ++failures;
  }
  if (t.power(2) !=
      pinned({{"0", "000"}, {"10", "001"}, {"110", "01"}, {"111", "1"}})) {
    ++failures;
  }

  QAutElement ts = theta(s);
  if (ts.cutoff_level() != 2) ++failures;
  const std::vector<std::pair<const char*, const char*>> ts_values = {
      {"^", "0"},  {"0", "^"},  {"1", "1"},   {"00", "01"},  {"01", "00"},
      {"10", "10"}, {"11", "11"}, {"000", "010"}, {"001", "011"},
      {"010", "000"}, {"011", "001"}, {"100", "100"}};
  for (const auto& [w, u] : ts_values) {
    if (ts.apply(Word::from_text(w)) != Word::from_text(u)) ++failures;
  }
  if (ts.minimal_decomposition().v_min !=
      pinned({{"00", "01"}, {"01", "00"}, {"1", "1"}})) {
    ++failures;
  }
  if (compose(ts, theta(t)) != theta(compose(s, t))) ++failures;

  QAutElement transposition = QAutElement::from_parts(
      pinned_table({{"00", "00"}, {"01", "01"}, {"10", "10"}, {"11", "11"}}),
      {{Word::epsilon(), Word::epsilon()},
       {Word::from_bits("0"), Word::from_bits("1")},
       {Word::from_bits("1"), Word::from_bits("0")}});
  if (transposition.cutoff_level() != 2) ++failures;
  if (phi(transposition) != pinned({{"000", "000"},
                                    {"001", "011"},
                                    {"010", "010"},
                                    {"011", "001"},
                                    {"1", "1"}})) {
    ++failures;
  }
  if (phi(ts) != pinned({{"0000", "0001"},
                         {"0001", "0000"},
                         {"001", "1"},
                         {"01", "01"},
                         {"1", "001"}})) {
    ++failures;
  }

  std::vector<FixedPointCertificate> fp = fixed_points(t);
  bool fp_ok = fp.size() == 2;
  if (fp_ok) {
    fp_ok = fp[0].domain == Word::from_bits("0") &&
            fp[0].range == Word::from_bits("00") &&
            fp[0].point == CantorPoint::make("", "0") &&
            fp[0].exponent == -1 && fp[0].attracting &&
            fp[1].domain == Word::from_bits("11") &&
            fp[1].range == Word::from_bits("1") &&
            fp[1].point == CantorPoint::make("", "1") &&
            fp[1].exponent == 1 && !fp[1].attracting;
  }
  if (!fp_ok) ++failures;

  if (torsion_test(s).torsion != true || torsion_test(s).value != 2) {
    ++failures;
  }
  TorsionVerdict tt = torsion_test(t);
  if (tt.torsion || tt.value != 1) ++failures;
  if (!torsion_test(VElement::identity()).torsion) ++failures;

  if (periodic_orbit_lengths(VElement::identity()) !=
      std::set<long long>{1}) {
    ++failures;
  }
  if (periodic_orbit_lengths(s) != std::set<long long>{2}) ++failures;
  if (periodic_orbit_lengths(t) != std::set<long long>{1}) ++failures;

  StabilizedPower sp = stabilizing_power(t);
  if (sp.m != 1 || sp.alpha != t) ++failures;
  SlopeSpectrum spec = slope_spectrum(t);
  if (spec.values != std::set<long long>{-1, 1}) ++failures;
  if (slope_spectrum(t.power(3)).values != std::set<long long>{-3, 3}) {
    ++failures;
  }

  VElement u2 = compose(s, localize(t, Word::from_bits("0")));
  if (stabilizing_power(u2).m != 2) ++failures;
  if (periodic_orbit_lengths(u2) != std::set<long long>{2}) ++failures;

  std::ostringstream details;
  details << "pinned tables, embeddings, dynamics, " << failures
          << " failures";
  return {8, "worked-examples", failures == 0, details.str()};
}

}  // namespace

bool SelfCheckReport::all_passed() const {
  for (const CriterionResult& c : criteria) {
    if (!c.passed) return false;
  }
  return true;
}

std::string SelfCheckReport::to_text() const {
  std::ostringstream out;
  out << "qv selfcheck seed=" << seed << " samples=" << samples << "\n";
  int passed = 0;
  for (const CriterionResult& c : criteria) {
    out << "criterion " << c.id << " " << c.name << ": "
        << (c.passed ? "PASS" : "FAIL") << " (" << c.details << ")\n";
    if (c.passed) ++passed;
  }
  out << "OVERALL: " << (all_passed() ? "PASS" : "FAIL") << " (" << passed
      << "/" << criteria.size() << ")\n";
  return out.str();
}

std::string SelfCheckReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["seed"] = seed;
  doc["samples"] = samples;
  doc["criteria"] = nlohmann::ordered_json::array();
  for (const CriterionResult& c : criteria) {
    doc["criteria"].push_back({{"id", c.id},
                               {"name", c.name},
                               {"passed", c.passed},
                               {"details", c.details}});
  }
  doc["overall"] = all_passed();
  return doc.dump();
}

SelfCheckReport run_acceptance(std::uint64_t seed, long long samples) {
  SelfCheckReport report;
  report.seed = seed;
  report.samples = samples;
  report.criteria.push_back(criterion_group_axioms(seed, samples));
  report.criteria.push_back(criterion_planting(seed, samples));
  report.criteria.push_back(criterion_doubling(seed, samples));
  report.criteria.push_back(criterion_composite(seed, samples));
  report.criteria.push_back(criterion_decomposition(seed, samples));
  report.criteria.push_back(criterion_dynamics(seed, samples));
  report.criteria.push_back(criterion_bs(seed, samples));
  report.criteria.push_back(criterion_examples(seed, samples));
  return report;
}

}  // namespace qv
