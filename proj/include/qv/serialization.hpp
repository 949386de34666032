#pragma once

#include <string>

#include "qv/qaut.hpp"
#include "qv/velement.hpp"

namespace qv {

/**
 * Text format: one `a -> b` line per table row, `^` for the empty
 * word, canonically sorted on output. Parse errors carry line and
 * column positions.
 */
VElement parse_v_text(const std::string& text);
std::string serialize_v_text(const VElement& v);

/** JSON format: {"pairs": [["a","b"], ...]}. */
VElement parse_v_json(const std::string& text);
std::string serialize_v_json(const VElement& v);

/**
 * JSON format: {"level": k, "v_part": [["w","u"], ...],
 * "bijection": [["w","u"], ...]} with v_part's domain the full level k
 * and the bijection defined on all shorter words. Serialization uses
 * the cutoff level.
 */
QAutElement parse_qaut_json(const std::string& text);
std::string serialize_qaut_json(const QAutElement& tau);

}  // namespace qv
