#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qv/dynamics.hpp"
#include "qv/velement.hpp"

namespace qv {

/** Acts as f inside the cone [0] and as g inside the cone [1]. */
VElement pair_embed(const VElement& f, const VElement& g);

/** Acts as v inside the cone [w] and as the identity elsewhere. */
VElement localize(const VElement& v, const Word& w);

/** The shift {0 -> 00, 10 -> 01, 11 -> 1}: a global translation. */
VElement line_translation();

struct GeneratorPair {
  VElement a;
  VElement b;
};

/** Two commuting copies of the shift, localized in [0] and [1]. */
GeneratorPair torus_generators();

/** A pair with b^-1·a·b = a^-1 and b^2 of infinite order. */
GeneratorPair klein_generators();

/**
 * Exact cone-containment checks certifying a ping-pong pair: h moves
 * everything in the arena except its repeller into its attractor, both
 * poles sit inside the base cone, and c rotates the arena cones
 * cyclically with order exactly m.
 */
struct PingPongCertificate {
  std::size_t m = 0;
  Word u_plus;
  Word u_minus;
  std::vector<Word> b_cones;
  bool disjoint_ok = false;
  bool order_ok = false;
  bool rotation_ok = false;
  bool forward_ok = false;
  bool backward_ok = false;

  bool passed() const {
    return disjoint_ok && order_ok && rotation_ok && forward_ok &&
           backward_ok;
  }
};

struct FreeProductPair {
  VElement h;
  VElement c;
  PingPongCertificate certificate;
};

/**
 * Generators of the free product of Z (generated by h, of translation
 * type) and Z/mZ (generated by the rotation c), certified by ping-pong
 * on the cones {[1^i·0]}_{i<m-1} and [1^m] inside [1].
 */
FreeProductPair free_product_generators(std::size_t m);

struct BrittonReport {
  std::size_t max_length = 0;
  std::uint64_t words_checked = 0;
  bool all_nontrivial = false;
  std::string failing_word;
};

struct BSWitness {
  std::size_t m = 0;
  int e = 0;
  VElement a;
  VElement b;
  bool relation_holds = false;
  bool a_power_nontrivial = false;
  TorsionVerdict a_torsion;
  PingPongCertificate pingpong;
};

/**
 * Generators A, B in the prefix-replacement group with
 * B^-1·A^m·B = A^(e·m), A of infinite order: a faithful image of the
 * Baumslag-Solitar group BS(m, e·m) built from the free product pair
 * in [0] and the torus (e = 1) or Klein bottle (e = -1) pair in [1].
 */
BSWitness bs_generators(std::size_t m, int e);

/**
 * Evaluates every freely reduced word of length <= max_length over
 * {a, a^-1, b, b^-1} that avoids pinches b^-1·a^(pm)·b and
 * b·a^(pm)·b^-1, and reports whether all are nontrivial.
 */
BrittonReport britton_nontriviality(const BSWitness& witness,
                                    std::size_t max_length);

}  // namespace qv
