#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "tjurina/detvar.hpp"
#include "tjurina/errors.hpp"
#include "tjurina/parse.hpp"

namespace tjurina {

// Text format for a determinantal presentation:
//
//   # comment
//   vars x y z w
//   type 2 3 2
//   row (w^3) (y) (x)
//   row (z) (w) (y^3)
//   label optional free text
//
// `vars` and `type` must precede the `row` lines; exactly m rows of n
// parenthesised expressions are required.
namespace detail {

// Splits "(e1) (e2) ..." into the expression bodies, tracking nesting.
inline std::vector<std::string> split_parenthesised(const std::string& text,
                                                    std::size_t line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) { ++i; continue; }
    if (text[i] != '(')
      throw ParseError("expected '(' before matrix entry", line, i + 1);
    int depth = 1;
    std::size_t start = ++i;
    while (i < text.size() && depth > 0) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')') --depth;
      ++i;
    }
    if (depth != 0) throw ParseError("unbalanced '(' in matrix row", line, start);
    out.push_back(text.substr(start, i - 1 - start));
  }
  return out;
}

inline std::vector<std::string> split_words(const std::string& text) {
  std::istringstream in(text);
  std::vector<std::string> out;
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

}  // namespace detail

inline DetPresentation parse_presentation(const std::string& text) {
  VarSet::Ptr vars;
  int m = 0, n = 0, t = 0;
  bool have_type = false;
  std::vector<std::vector<Polynomial>> rows;
  std::string label;

  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw.substr(0, raw.find('#'));
    std::istringstream ls(line);
    std::string keyword;
    if (!(ls >> keyword)) continue;
    std::string rest;
    std::getline(ls, rest);

    if (keyword == "vars") {
      if (vars) throw ParseError("duplicate 'vars' line", lineno, 1);
      auto names = detail::split_words(rest);
      if (names.empty()) throw ParseError("'vars' needs at least one name", lineno, 1);
      vars = VarSet::make(names);
    } else if (keyword == "type") {
      if (have_type) throw ParseError("duplicate 'type' line", lineno, 1);
      std::istringstream ts(rest);
      if (!(ts >> m >> n >> t))
        throw ParseError("'type' needs three integers m n t", lineno, 1);
      std::string extra;
      if (ts >> extra) throw ParseError("trailing text after 'type m n t'", lineno, 1);
      if (m < 1 || n < 1)
        throw ParseError("matrix dimensions must be positive", lineno, 1);
      if (t < 1 || t > std::min(m, n))
        throw ParseError("need 1 <= t <= min(m, n)", lineno, 1);
      have_type = true;
    } else if (keyword == "row") {
      if (!vars) throw ParseError("'row' before 'vars'", lineno, 1);
      if (!have_type) throw ParseError("'row' before 'type'", lineno, 1);
      if (static_cast<int>(rows.size()) == m)
        throw ParseError("more than m 'row' lines", lineno, 1);
      auto pieces = detail::split_parenthesised(rest, lineno);
      if (static_cast<int>(pieces.size()) != n)
        throw ParseError("expected " + std::to_string(n) + " entries, found " +
                             std::to_string(pieces.size()),
                         lineno, 1);
      std::vector<Polynomial> row;
      for (const auto& body : pieces) row.push_back(parse_poly(body, vars, lineno));
      rows.push_back(std::move(row));
    } else if (keyword == "label") {
      size_t first = rest.find_first_not_of(" \t");
      label = first == std::string::npos ? "" : rest.substr(first);
    } else {
      throw ParseError("unknown directive '" + keyword + "'", lineno, 1);
    }
  }
  if (!vars) throw ParseError("missing 'vars' line");
  if (!have_type) throw ParseError("missing 'type' line");
  if (static_cast<int>(rows.size()) != m)
    throw ParseError("expected " + std::to_string(m) + " 'row' lines, found " +
                     std::to_string(rows.size()));
  DetPresentation p{vars, PolyMatrix::from_rows(vars, rows), t, label};
  return p;
}

inline DetPresentation parse_presentation_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open presentation file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_presentation(buf.str());
}

}  // namespace tjurina
