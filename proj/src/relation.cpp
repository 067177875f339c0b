#include "imset/relation.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace imset {

ParseError::ParseError(const std::string& message, std::size_t offset)
    : std::runtime_error(message + " (at byte " + std::to_string(offset) + ")"),
      offset_(offset) {}

namespace {

// Recursive-descent parser for the ASCII relation grammar:
//   statement := set "_||_" set "|" set
//   set       := "e" | digit+
//   relation  := side ("=" side)+        side := "[" statement ("+" statement)* "]"
//   binomial  := prod "-" prod           prod := "[" statement ("*" statement)* "]"
class Cursor {
 public:
  explicit Cursor(const std::string& text) : s_(text) {}

  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }
  bool eat(const std::string& tok) {
    skip_ws();
    if (s_.compare(pos_, tok.size(), tok) == 0) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }
  void expect(const std::string& tok) {
    if (!eat(tok)) fail("expected '" + tok + "'");
  }
  bool at_end() {
    skip_ws();
    return pos_ >= s_.size();
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

  SetMask parse_set() {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == 'e') {
      ++pos_;
      return 0;
    }
    if (pos_ >= s_.size() || !isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected a set ('e' or digits 1..9)");
    SetMask m = 0;
    while (pos_ < s_.size() && isdigit(static_cast<unsigned char>(s_[pos_]))) {
      int d = s_[pos_] - '0';
      if (d == 0) fail("variable indices are 1..9");
      if (m & (1u << (d - 1))) fail("duplicate index in set");
      m = static_cast<SetMask>(m | (1u << (d - 1)));
      ++pos_;
    }
    return m;
  }

  CIStatement parse_statement() {
    std::size_t start = pos_;
    SetMask lhs = parse_set();
    expect("_||_");
    SetMask rhs = parse_set();
    expect("|");
    SetMask cond = parse_set();
    try {
      return CIStatement(lhs, rhs, cond);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), start);
    }
  }

  std::vector<CIStatement> parse_bracketed(char sep) {
    expect("[");
    std::vector<CIStatement> terms;
    terms.push_back(parse_statement());
    while (eat(std::string(1, sep))) terms.push_back(parse_statement());
    expect("]");
    return terms;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

int ambient_n(const std::vector<RelationSide>& sides,
              const std::optional<CIStatement>& target) {
  int n = 2;
  for (const auto& side : sides)
    for (const auto& t : side.terms) n = std::max(n, t.max_index());
  if (target) n = std::max(n, target->max_index());
  return n;
}

}  // namespace

CIStatement parse_statement(const std::string& text) {
  Cursor c(text);
  CIStatement s = c.parse_statement();
  if (!c.at_end()) c.fail("trailing input after statement");
  return s;
}

CIRelation parse_relation(const std::string& text) {
  Cursor c(text);
  CIRelation rel;
  rel.sides.push_back({c.parse_bracketed('+')});
  while (c.eat("=")) rel.sides.push_back({c.parse_bracketed('+')});
  if (!c.at_end()) c.fail("trailing input after relation");
  if (rel.sides.size() < 2) c.fail("a relation needs at least two sides");
  // Promote a trailing single non-elementary statement to the target slot;
  // the side itself stays in place.
  const auto& last = rel.sides.back().terms;
  if (last.size() == 1 && !last[0].elementary()) rel.target = last[0];
  rel.n = ambient_n(rel.sides, rel.target);
  return rel;
}

BinomialExpr parse_binomial(const std::string& text) {
  Cursor c(text);
  BinomialExpr b;
  b.plus = c.parse_bracketed('*');
  c.expect("-");
  b.minus = c.parse_bracketed('*');
  if (!c.at_end()) c.fail("trailing input after binomial");
  auto sorted = [](std::vector<CIStatement> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  if (sorted(b.plus) == sorted(b.minus)) c.fail("binomial is zero");
  return b;
}

std::vector<RelationFileEntry> parse_relation_stream(std::istream& in) {
  std::vector<RelationFileEntry> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    RelationFileEntry entry;
    entry.line = lineno;
    try {
      entry.relation = parse_relation(line);
    } catch (const ParseError& e) {
      entry.error = e.what();
    }
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<RelationFileEntry> parse_relation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open relation file: " + path);
  return parse_relation_stream(in);
}

std::string render(const CIStatement& s) {
  return mask_to_string(s.lhs()) + " _||_ " + mask_to_string(s.rhs()) + " | " +
         mask_to_string(s.cond());
}

std::string render(const CIRelation& r) {
  std::ostringstream out;
  auto side = [&](const RelationSide& s) {
    out << "[";
    for (std::size_t i = 0; i < s.terms.size(); ++i) {
      if (i) out << " + ";
      out << render(s.terms[i]);
    }
    out << "]";
  };
  for (std::size_t i = 0; i < r.sides.size(); ++i) {
    if (i) out << " = ";
    side(r.sides[i]);
  }
  // The target, when present, is also the final side; nothing more to print.
  return out.str();
}

std::string statement_to_json(const CIStatement& s) {
  nlohmann::json j;
  j["I"] = mask_to_list(s.lhs());
  j["J"] = mask_to_list(s.rhs());
  j["K"] = mask_to_list(s.cond());
  return j.dump();
}

}  // namespace imset
