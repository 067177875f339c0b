#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "imset/statement.hpp"

namespace imset {

// A formal sum of CI statements (one bracketed side of a relation).
// Multiset semantics: duplicates are allowed and significant.
struct RelationSide {
  std::vector<CIStatement> terms;
};

// A chain of >= 2 equal sides.  When the final side is a single
// non-elementary statement it is promoted to `target`.
struct CIRelation {
  std::vector<RelationSide> sides;
  std::optional<CIStatement> target;
  int n = 0;  // smallest ambient n covering every index mentioned
};

// x+ - x- as formal products of statements (variables of Q[E_n]).
struct BinomialExpr {
  std::vector<CIStatement> plus;
  std::vector<CIStatement> minus;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

CIStatement parse_statement(const std::string& text);
CIRelation parse_relation(const std::string& text);
BinomialExpr parse_binomial(const std::string& text);

struct RelationFileEntry {
  int line = 0;  // 1-based
  std::optional<CIRelation> relation;
  std::string error;  // nonempty iff the line failed to parse
};

std::vector<RelationFileEntry> parse_relation_file(const std::string& path);
std::vector<RelationFileEntry> parse_relation_stream(std::istream& in);

std::string render(const CIStatement& s);
std::string render(const CIRelation& r);

std::string statement_to_json(const CIStatement& s);

}  // namespace imset
