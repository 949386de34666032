#include "qv/dynamics.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "qv/antichain.hpp"

namespace qv {

CantorPoint CantorPoint::make(const std::string& head,
                              const std::string& cycle) {
  if (cycle.empty()) {
    fail(ErrorCode::InvalidArgument, "a cycle must be nonempty");
  }
  for (char c : head + cycle) {
    if (c != '0' && c != '1') {
      fail(ErrorCode::ParseError, "points are built from 0/1 strings");
    }
  }
  CantorPoint out;
  out.head_ = head;
  out.cycle_ = cycle;
  for (std::size_t d = 1; d < out.cycle_.size(); ++d) {
    if (out.cycle_.size() % d != 0) continue;
    bool repeats = true;
    for (std::size_t i = d; i < out.cycle_.size() && repeats; ++i) {
      repeats = out.cycle_[i] == out.cycle_[i - d];
    }
    if (repeats) {
      out.cycle_.resize(d);
      break;
    }
  }
  while (!out.head_.empty() && out.head_.back() == out.cycle_.back()) {
    out.head_.pop_back();
    out.cycle_ =
        out.cycle_.back() + out.cycle_.substr(0, out.cycle_.size() - 1);
  }
  return out;
}

char CantorPoint::bit_at(std::size_t i) const {
  if (i < head_.size()) return head_[i];
  return cycle_[(i - head_.size()) % cycle_.size()];
}

Word CantorPoint::prefix(std::size_t n) const {
  std::string bits;
  bits.reserve(n);
  for (std::size_t i = 0; i < n; ++i) bits.push_back(bit_at(i));
  return Word::from_bits(bits);
}

bool CantorPoint::has_prefix(const Word& w) const {
  return prefix(w.length()) == w;
}

bool CantorPoint::operator==(const CantorPoint& other) const {
  return head_ == other.head_ && cycle_ == other.cycle_;
}

bool CantorPoint::operator<(const CantorPoint& other) const {
  if (head_ != other.head_) return head_ < other.head_;
  return cycle_ < other.cycle_;
}

CantorPoint apply_element(const VElement& v, const CantorPoint& point) {
  for (const auto& [a, b] : v.table()) {
    if (!point.has_prefix(a)) continue;
    std::string head = point.head();
    std::string cycle = point.cycle();
    std::size_t k = a.length();
    if (k <= head.size()) {
      head = head.substr(k);
    } else {
      std::size_t r = (k - head.size()) % cycle.size();
      head.clear();
      cycle = cycle.substr(r) + cycle.substr(0, r);
    }
    return CantorPoint::make(b.bits() + head, cycle);
  }
  fail(ErrorCode::UndefinedOnVertex, "no table row covers the point");
}

namespace {

FixedPointCertificate certificate_from_row(const Word& a, const Word& b) {
  if (a.is_prefix_of(b)) {
    Word tail = b.strip_prefix(a);
    return FixedPointCertificate{
        a, b, CantorPoint::make(a.bits(), tail.bits()),
        static_cast<long long>(a.length()) - static_cast<long long>(b.length()),
        true};
  }
  Word tail = a.strip_prefix(b);
  return FixedPointCertificate{
      a, b, CantorPoint::make(b.bits(), tail.bits()),
      static_cast<long long>(a.length()) - static_cast<long long>(b.length()),
      false};
}

}  // namespace

std::vector<FixedPointCertificate> fixed_points(const VElement& v) {
  std::vector<FixedPointCertificate> out;
  for (const auto& [a, b] : v.table()) {
    if (a == b || !comparable(a, b)) continue;
    out.push_back(certificate_from_row(a, b));
  }
  return out;
}

TorsionVerdict torsion_test(const VElement& v, long long bound) {
  VElement w = v;
  for (long long n = 1; n <= bound; ++n) {
    if (w.is_identity()) {
      return TorsionVerdict{true, n, std::nullopt};
    }
    for (const auto& [a, b] : w.table()) {
      if (a != b && comparable(a, b)) {
        return TorsionVerdict{false, n, certificate_from_row(a, b)};
      }
    }
    w = compose(w, v);
  }
  fail(ErrorCode::BoundExceeded,
       "no verdict within " + std::to_string(bound) + " powers");
}

namespace {

struct FixSet {
  std::vector<CantorPoint> points;
  std::vector<Word> cones;
};

FixSet fix_set(const VElement& v) {
  FixSet out;
  for (const auto& [a, b] : v.table()) {
    if (a == b) {
      out.cones.push_back(a);
    } else if (comparable(a, b)) {
      out.points.push_back(certificate_from_row(a, b).point);
    }
  }
  return out;
}

bool point_in_fix_set(const FixSet& f, const CantorPoint& x) {
  for (const Word& u : f.cones) {
    if (x.has_prefix(u)) return true;
  }
  for (const CantorPoint& p : f.points) {
    if (p == x) return true;
  }
  return false;
}

/** Keeps only the words with no proper prefix in the set. */
std::vector<Word> minimal_words(std::vector<Word> words) {
  std::sort(words.begin(), words.end(), lex_less);
  std::vector<Word> out;
  for (const Word& w : words) {
    if (out.empty() || !out.back().is_prefix_of(w)) out.push_back(w);
  }
  return out;
}

bool cone_covered(const Word& a, const std::vector<Word>& minimal_cones) {
  std::vector<Word> inside;
  for (const Word& u : minimal_cones) {
    if (u.is_prefix_of(a)) return true;
    if (a.is_prefix_of(u)) inside.push_back(u.strip_prefix(a));
  }
  return is_complete_antichain(inside) && !inside.empty();
}

std::vector<long long> proper_divisors(long long n) {
  std::vector<long long> out;
  for (long long d = 1; d < n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

std::vector<long long> all_divisors(long long n) {
  auto out = proper_divisors(n);
  out.push_back(n);
  return out;
}

/**
 * Whether v^j fixes something that no smaller power fixes: a witness
 * that some orbit has length exactly j.
 */
bool exact_length_nonempty(long long j,
                           const std::map<long long, FixSet>& fix_sets) {
  const FixSet& fj = fix_sets.at(j);
  std::vector<Word> smaller_cones;
  std::vector<long long> divs = proper_divisors(j);
  for (const CantorPoint& x : fj.points) {
    bool seen = false;
    for (long long e : divs) {
      if (point_in_fix_set(fix_sets.at(e), x)) {
        seen = true;
        break;
      }
    }
    if (!seen) return true;
  }
  for (long long e : divs) {
    const auto& cones = fix_sets.at(e).cones;
    smaller_cones.insert(smaller_cones.end(), cones.begin(), cones.end());
  }
  std::vector<Word> minimal = minimal_words(std::move(smaller_cones));
  for (const Word& a : fj.cones) {
    if (!cone_covered(a, minimal)) return true;
  }
  return false;
}

struct SccResult {
  bool all_trivial = false;
  std::vector<std::size_t> nontrivial_nodes;
};

SccResult strongly_connected_trivial(
    const std::vector<std::vector<int>>& adj) {
  std::size_t n = adj.size();
  std::vector<int> index(n, -1), low(n, 0), on_stack(n, 0);
  std::vector<std::size_t> stack;
  int counter = 0;

  struct Frame {
    std::size_t node;
    std::size_t next_edge;
  };
  SccResult result;
  std::vector<std::vector<std::size_t>> comp_members;
  for (std::size_t start = 0; start < n; ++start) {
    if (index[start] != -1) continue;
    std::vector<Frame> frames{{start, 0}};
    index[start] = low[start] = counter++;
    stack.push_back(start);
    on_stack[start] = 1;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.next_edge < adj[f.node].size()) {
        std::size_t next =
            static_cast<std::size_t>(adj[f.node][f.next_edge++]);
        if (index[next] == -1) {
          index[next] = low[next] = counter++;
          stack.push_back(next);
          on_stack[next] = 1;
          frames.push_back({next, 0});
        } else if (on_stack[next]) {
          low[f.node] = std::min(low[f.node], index[next]);
        }
      } else {
        if (low[f.node] == index[f.node]) {
          std::vector<std::size_t> members;
          for (;;) {
            std::size_t w = stack.back();
            stack.pop_back();
            on_stack[w] = 0;
            members.push_back(w);
            if (w == f.node) break;
          }
          comp_members.push_back(std::move(members));
        }
        std::size_t done = f.node;
        frames.pop_back();
        if (!frames.empty()) {
          low[frames.back().node] =
              std::min(low[frames.back().node], low[done]);
        }
      }
    }
  }
  result.all_trivial = true;
  for (const auto& members : comp_members) {
    if (members.size() > 1) {
      result.all_trivial = false;
      result.nontrivial_nodes.insert(result.nontrivial_nodes.end(),
                                     members.begin(), members.end());
    }
  }
  return result;
}

/**
 * Certifies that every periodic point of alpha is a fixed point, by
 * refining a cone partition until the comparability digraph of the
 * induced cone map has no cycle through distinct cones. A cone with
 * only a self-loop is benign: a rigid map of a cone into a comparable
 * cone has no periodic points beyond its single fixed point.
 */
bool all_orbits_trivial(const VElement& alpha) {
  std::vector<Word> partition =
      refine(alpha.domain_antichain(), alpha.range_antichain()).words();
  const std::size_t max_nodes = std::size_t{1} << 15;
  for (int round = 0; round < 32; ++round) {
    std::size_t n = partition.size();
    std::vector<Word> sorted_lex = partition;
    std::sort(sorted_lex.begin(), sorted_lex.end(), lex_less);
    std::unordered_map<Word, int, WordHash> position;
    for (std::size_t i = 0; i < n; ++i) {
      position.emplace(partition[i], static_cast<int>(i));
    }

    std::vector<std::vector<int>> adj(n);
    for (std::size_t i = 0; i < n; ++i) {
      Word image = *alpha.try_apply(partition[i]);
      Word p = image;
      for (;;) {
        auto it = position.find(p);
        if (it != position.end()) adj[i].push_back(it->second);
        if (p.empty()) break;
        p = p.parent();
      }
      auto lo = std::lower_bound(sorted_lex.begin(), sorted_lex.end(), image,
                                 [](const Word& w, const Word& x) {
                                   return w.bits() < x.bits();
                                 });
      for (auto it = lo; it != sorted_lex.end(); ++it) {
        if (!image.is_prefix_of(*it)) break;
        if (*it != image) adj[i].push_back(position.at(*it));
      }
    }
    SccResult scc = strongly_connected_trivial(adj);
    if (scc.all_trivial) return true;

    std::unordered_set<Word, WordHash> split;
    for (std::size_t node : scc.nontrivial_nodes) {
      split.insert(partition[node]);
    }
    std::vector<Word> next;
    next.reserve(partition.size() + split.size());
    for (const Word& w : partition) {
      if (split.count(w)) {
        next.push_back(w.child(0));
        next.push_back(w.child(1));
      } else {
        next.push_back(w);
      }
    }
    if (next.size() > max_nodes) return false;
    partition = std::move(next);
  }
  return false;
}

constexpr long long kMaxStabilizingPower = 5000;

long long checked_lcm(const std::vector<long long>& values) {
  long long l = 1;
  for (long long x : values) {
    l = l / std::gcd(l, x) * x;
    if (l > kMaxStabilizingPower) {
      fail(ErrorCode::BoundExceeded,
           "orbit lengths require a stabilizing power beyond " +
               std::to_string(kMaxStabilizingPower));
    }
  }
  return l;
}

std::set<long long> lengths_from_fix_sets(
    long long n, const std::map<long long, FixSet>& fix_sets) {
  std::set<long long> out;
  for (long long d : all_divisors(n)) {
    if (exact_length_nonempty(d, fix_sets)) out.insert(d);
  }
  return out;
}

}  // namespace

std::set<long long> periodic_orbit_lengths(const VElement& v) {
  if (v.is_identity()) return {1};

  // Fast path for already-stabilized maps: when something is fixed and
  // the partition certificate shows no orbit through distinct cones,
  // the only finite orbit length is 1. A finite-order map other than
  // the identity cannot pass the certificate, so this cannot mask
  // torsion.
  FixSet first = fix_set(v);
  if ((!first.points.empty() || !first.cones.empty()) &&
      all_orbits_trivial(v)) {
    return {1};
  }

  TorsionVerdict verdict = torsion_test(v);

  if (verdict.torsion) {
    std::map<long long, FixSet> fix_sets;
    for (long long d : all_divisors(verdict.value)) {
      fix_sets.emplace(d, fix_set(v.power(d)));
    }
    return lengths_from_fix_sets(verdict.value, fix_sets);
  }

  const long long hard_scan_limit = 4096;
  long long scan = 8;
  std::map<long long, FixSet> fix_sets;
  VElement running = v;
  long long computed = 1;
  fix_sets.emplace(1, fix_set(running));
  for (;;) {
    while (computed < scan) {
      running = compose(running, v);
      ++computed;
      fix_sets.emplace(computed, fix_set(running));
    }
    std::vector<long long> witnessed;
    for (long long j = 1; j <= scan; ++j) {
      if (exact_length_nonempty(j, fix_sets)) witnessed.push_back(j);
    }
    if (!witnessed.empty()) {
      long long m = checked_lcm(witnessed);
      VElement alpha = v.power(m);
      if (all_orbits_trivial(alpha)) {
        std::map<long long, FixSet> divisor_sets;
        for (long long d : all_divisors(m)) {
          auto cached = fix_sets.find(d);
          if (cached != fix_sets.end()) {
            divisor_sets.emplace(d, cached->second);
          } else {
            divisor_sets.emplace(d, fix_set(v.power(d)));
          }
        }
        return lengths_from_fix_sets(m, divisor_sets);
      }
    }
    scan *= 2;
    if (scan > hard_scan_limit) {
      fail(ErrorCode::BoundExceeded,
           "could not certify the set of orbit lengths");
    }
  }
}

StabilizedPower stabilizing_power(const VElement& v) {
  TorsionVerdict verdict = torsion_test(v);
  if (verdict.torsion) {
    fail(ErrorCode::IsTorsion,
         "a finite-order element has no stabilizing power (order " +
             std::to_string(verdict.value) + ")");
  }
  std::set<long long> lengths = periodic_orbit_lengths(v);
  long long m =
      checked_lcm(std::vector<long long>(lengths.begin(), lengths.end()));
  StabilizedPower out{m, v.power(m)};
  std::set<long long> stabilized = periodic_orbit_lengths(out.alpha);
  if (stabilized != std::set<long long>{1}) {
    fail(ErrorCode::BoundExceeded,
         "stabilizing power verification failed");
  }
  return out;
}

std::vector<FixedPointCertificate> important_points(const VElement& alpha) {
  TorsionVerdict verdict = torsion_test(alpha);
  if (verdict.torsion) {
    fail(ErrorCode::IsTorsion, "finite-order maps have no important points");
  }
  std::set<long long> lengths = periodic_orbit_lengths(alpha);
  if (lengths != std::set<long long>{1}) {
    fail(ErrorCode::HasNontrivialFiniteOrbits,
         "the map has finite orbits longer than fixed points; stabilize "
         "first");
  }
  return fixed_points(alpha);
}

SlopeSpectrum SlopeSpectrum::scaled(long long u) const {
  SlopeSpectrum out;
  for (long long x : values) out.values.insert(u * x);
  return out;
}

long long SlopeSpectrum::max_abs() const {
  long long k = 0;
  for (long long x : values) k = std::max(k, std::llabs(x));
  return k;
}

SlopeSpectrum slope_spectrum(const VElement& alpha) {
  SlopeSpectrum out;
  for (const FixedPointCertificate& cert : important_points(alpha)) {
    out.values.insert(cert.exponent);
  }
  return out;
}

ConjugatePowerResult conjugate_power_check(const VElement& v,
                                           const VElement& w, long long r,
                                           long long s) {
  ConjugatePowerResult result;
  VElement lhs = compose(compose(w.inverse(), v.power(r)), w);
  result.holds = lhs == v.power(s);
  if (!result.holds) return result;

  TorsionVerdict verdict = torsion_test(v);
  result.torsion = verdict.torsion;
  if (verdict.torsion) return result;

  StabilizedPower stab = stabilizing_power(v);
  SlopeSpectrum spectrum = slope_spectrum(stab.alpha);
  result.m = stab.m;
  result.s1 = spectrum.values;
  result.k = spectrum.max_abs();
  if (std::llabs(r) != std::llabs(s)) {
    std::string s1_text;
    for (long long x : result.s1) {
      if (!s1_text.empty()) s1_text += ",";
      s1_text += std::to_string(x);
    }
    fail(ErrorCode::InvariantFalsified,
         "conjugation relates power " + std::to_string(r) + " to power " +
             std::to_string(s) +
             " of an infinite-order element; the exponent spectrum {" +
             s1_text + "} (stabilizing power " + std::to_string(result.m) +
             ", bound " + std::to_string(result.k) +
             ") scales linearly, so |r| must equal |s|");
  }
  return result;
}

}  // namespace qv
