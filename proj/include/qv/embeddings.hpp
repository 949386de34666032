#pragma once

#include <cstddef>
#include <cstdint>

#include "qv/qaut.hpp"
#include "qv/rng.hpp"
#include "qv/velement.hpp"

namespace qv {

/**
 * Embeds a prefix-replacement bijection into the quasi-automorphism
 * group. The tree pair is planted under vertex 0, the freed interior
 * vertices are matched by in-order position, and every word starting
 * with 1 is fixed pointwise.
 */
QAutElement theta(const VElement& v);

/** Same construction from a raw (possibly unreduced) bijective table. */
QAutElement theta_from_table(const VElement::Table& table);

/**
 * Recomputes theta after `expansions` random elementary expansions of
 * the table and checks the result is unchanged each time.
 */
bool verify_theta_well_defined(const VElement& v, std::size_t expansions,
                               Rng& rng);

/**
 * Embeds a quasi-automorphism into the prefix-replacement group by
 * doubling every tree vertex into a carrier leaf and a vertex leaf:
 * each vertex w gets children hat(w)·0 (structure) and hat(w)·1
 * (the vertex itself), with hat(ε) = ε, hat(w0) = hat(w)·00,
 * hat(w1) = hat(w)·01.
 */
VElement phi(const QAutElement& tau);

/**
 * Same construction from the disjoint decomposition at the given level,
 * which must be at least the cutoff level.
 */
VElement phi_at_level(const QAutElement& tau, std::size_t level);

/**
 * Checks phi is unchanged when computed from decompositions at levels
 * cutoff+1 .. cutoff+extra_levels.
 */
bool verify_phi_well_defined(const QAutElement& tau,
                             std::size_t extra_levels);

}  // namespace qv
