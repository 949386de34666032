#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qv/velement.hpp"
#include "qv/word.hpp"

namespace qv {

/**
 * An eventually periodic point of Cantor space, head·cycle^inf, kept in
 * canonical form: the cycle is primitive and the head does not end
 * with the last cycle character. Equality of canonical forms is
 * equality of points.
 */
class CantorPoint {
 public:
  static CantorPoint make(const std::string& head, const std::string& cycle);

  const std::string& head() const { return head_; }
  const std::string& cycle() const { return cycle_; }

  char bit_at(std::size_t i) const;
  Word prefix(std::size_t n) const;
  bool has_prefix(const Word& w) const;

  bool operator==(const CantorPoint& other) const;
  bool operator!=(const CantorPoint& other) const { return !(*this == other); }
  bool operator<(const CantorPoint& other) const;

 private:
  CantorPoint() = default;
  std::string head_;
  std::string cycle_;
};

/** Image of an eventually periodic point (always eventually periodic). */
CantorPoint apply_element(const VElement& v, const CantorPoint& point);

/**
 * An isolated hyperbolic fixed point read off a reduced table row whose
 * entries are properly comparable. The exponent is |domain| - |range|:
 * negative means the row contracts toward the point (attracting),
 * positive means it expands away (repelling).
 */
struct FixedPointCertificate {
  Word domain;
  Word range;
  CantorPoint point;
  long long exponent = 0;
  bool attracting = false;
};

/** Certificates from all properly comparable rows, sorted by domain. */
std::vector<FixedPointCertificate> fixed_points(const VElement& v);

struct TorsionVerdict {
  bool torsion = false;
  /** Order when torsion; the witnessing power when not. */
  long long value = 0;
  std::optional<FixedPointCertificate> certificate;
};

/**
 * Decides finite order by power iteration: the first power that is the
 * identity proves torsion, the first power with a properly comparable
 * row proves infinite order. Gives up past `bound` with BoundExceeded.
 */
TorsionVerdict torsion_test(const VElement& v, long long bound = 10000);

/** The exact lengths of finite orbits, e.g. {1} for a stabilized map. */
std::set<long long> periodic_orbit_lengths(const VElement& v);

struct StabilizedPower {
  long long m = 0;
  VElement alpha;
};

/**
 * The least power m (the lcm of the finite orbit lengths) for which
 * v^m has only fixed points among its finite orbits. Errors with
 * IsTorsion on finite-order input.
 */
StabilizedPower stabilizing_power(const VElement& v);

/**
 * The isolated hyperbolic fixed points of a stabilized infinite-order
 * map. Errors with IsTorsion or HasNontrivialFiniteOrbits when the
 * preconditions fail.
 */
std::vector<FixedPointCertificate> important_points(const VElement& alpha);

struct SlopeSpectrum {
  std::set<long long> values;

  SlopeSpectrum scaled(long long u) const;
  long long max_abs() const;
  bool operator==(const SlopeSpectrum& other) const {
    return values == other.values;
  }
};

/** Exponents of the important points of a stabilized map. */
SlopeSpectrum slope_spectrum(const VElement& alpha);

struct ConjugatePowerResult {
  bool holds = false;
  /** Engaged when the relation holds: whether v has finite order. */
  std::optional<bool> torsion;
  /** Diagnostics computed when the relation holds for infinite order. */
  long long m = 0;
  std::set<long long> s1;
  long long k = 0;
};

/**
 * Exact test of conjugate_inverse(w)·v^r·w == v^s. When the relation
 * holds for an infinite-order v with |r| != |s| the slope spectrum
 * argument is contradicted, so the check throws InvariantFalsified
 * with diagnostics instead of returning.
 */
ConjugatePowerResult conjugate_power_check(const VElement& v,
                                           const VElement& w, long long r,
                                           long long s);

}  // namespace qv
