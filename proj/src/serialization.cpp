#include "qv/serialization.hpp"

#include <sstream>

#include "json.hpp"

namespace qv {

namespace {

using ordered_json = nlohmann::ordered_json;

[[noreturn]] void parse_fail(std::size_t line, std::size_t column,
                             const std::string& message) {
  fail(ErrorCode::ParseError, "line " + std::to_string(line) + ", column " +
                                  std::to_string(column) + ": " + message);
}

bool word_char(char c) { return c == '0' || c == '1' || c == '^'; }

Word read_word_token(const std::string& line, std::size_t lineno,
                     std::size_t& pos) {
  std::size_t start = pos;
  while (pos < line.size() && word_char(line[pos])) ++pos;
  if (pos == start) {
    parse_fail(lineno, start + 1, "expected a binary word or '^'");
  }
  std::string token = line.substr(start, pos - start);
  if (token == "^") return Word::epsilon();
  for (std::size_t i = 0; i < token.size(); ++i) {
    if (token[i] == '^') {
      parse_fail(lineno, start + i + 1,
                 "'^' stands alone for the empty word");
    }
  }
  return Word::from_bits(token);
}

void skip_spaces(const std::string& line, std::size_t& pos) {
  while (pos < line.size() &&
         (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) {
    ++pos;
  }
}

ordered_json parse_json_or_fail(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

VElement::Table table_from_json(const ordered_json& node, const char* field) {
  if (!node.is_array()) {
    fail(ErrorCode::ParseError,
         std::string("'") + field + "' must be an array of word pairs");
  }
  VElement::Table out;
  for (const auto& entry : node) {
    if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
        !entry[1].is_string()) {
      fail(ErrorCode::ParseError,
           std::string("every entry of '") + field +
               "' must be a pair of word strings");
    }
    out.emplace_back(Word::from_text(entry[0].get<std::string>()),
                     Word::from_text(entry[1].get<std::string>()));
  }
  return out;
}

ordered_json table_to_json(const VElement::Table& table) {
  ordered_json out = ordered_json::array();
  for (const auto& [a, b] : table) {
    out.push_back({a.text(), b.text()});
  }
  return out;
}

}  // namespace

VElement parse_v_text(const std::string& text) {
  VElement::Table pairs;
  std::istringstream stream(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(stream, line)) {
    ++lineno;
    std::size_t pos = 0;
    skip_spaces(line, pos);
    if (pos == line.size()) continue;
    Word a = read_word_token(line, lineno, pos);
    skip_spaces(line, pos);
    if (pos + 1 >= line.size() || line[pos] != '-' || line[pos + 1] != '>') {
      parse_fail(lineno, pos + 1, "expected '->' between the two words");
    }
    pos += 2;
    skip_spaces(line, pos);
    Word b = read_word_token(line, lineno, pos);
    skip_spaces(line, pos);
    if (pos != line.size()) {
      parse_fail(lineno, pos + 1, "unexpected trailing characters");
    }
    pairs.emplace_back(a, b);
  }
  if (pairs.empty()) {
    fail(ErrorCode::ParseError, "no table rows found");
  }
  return VElement::from_pairs(pairs);
}

std::string serialize_v_text(const VElement& v) {
  std::string out;
  for (const auto& [a, b] : v.table()) {
    out += a.text();
    out += " -> ";
    out += b.text();
    out += "\n";
  }
  return out;
}

VElement parse_v_json(const std::string& text) {
  ordered_json doc = parse_json_or_fail(text);
  if (!doc.is_object() || !doc.contains("pairs")) {
    fail(ErrorCode::ParseError, "expected an object with a 'pairs' field");
  }
  return VElement::from_pairs(table_from_json(doc["pairs"], "pairs"));
}

std::string serialize_v_json(const VElement& v) {
  ordered_json doc;
  doc["pairs"] = table_to_json(v.table());
  return doc.dump();
}

QAutElement parse_qaut_json(const std::string& text) {
  ordered_json doc = parse_json_or_fail(text);
  if (!doc.is_object() || !doc.contains("level") || !doc.contains("v_part") ||
      !doc.contains("bijection")) {
    fail(ErrorCode::ParseError,
         "expected an object with 'level', 'v_part' and 'bijection'");
  }
  if (!doc["level"].is_number_unsigned()) {
    fail(ErrorCode::ParseError, "'level' must be a nonnegative integer");
  }
  std::size_t level = doc["level"].get<std::size_t>();
  VElement::Table v_part = table_from_json(doc["v_part"], "v_part");
  VElement::Table bijection = table_from_json(doc["bijection"], "bijection");
  for (const auto& [w, u] : v_part) {
    if (w.length() != level) {
      fail(ErrorCode::MalformedDecomposition,
           "v_part domain word '" + w.text() +
               "' does not sit at the declared level");
    }
  }
  return QAutElement::from_parts(v_part, bijection);
}

std::string serialize_qaut_json(const QAutElement& tau) {
  DisjointDecomposition parts = tau.cutoff_form();
  ordered_json doc;
  doc["level"] = parts.level;
  doc["v_part"] = table_to_json(parts.v_part);
  doc["bijection"] = table_to_json(parts.bijection);
  return doc.dump();
}

}  // namespace qv
