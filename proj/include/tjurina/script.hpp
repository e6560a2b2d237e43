#pragma once

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tjurina/errors.hpp"
#include "tjurina/parse.hpp"
#include "tjurina/poly_matrix.hpp"
#include "tjurina/presentation_io.hpp"

namespace tjurina {

// Data model for a resolution script (.rsc): a chain of matrix presentations
// connected by chart transforms, with per-chart expectations, exceptional
// divisor declarations, incidence claims, and global dual-graph edges.
//
//   step 1
//   vars x y z
//   claim y^2 + x^3 + x*z^3
//   matrix 2 2
//   row (y) (x^2 + z^3)
//   row (-x) (y)
//   chart 1
//     rename a2 -> w
//     coords x z w
//     expect singular @ (0, 0, 0)
//     divisor E1 = x, z
//
//   step 2
//   from 1 chart 1
//   ...
//   chart 2
//     ...
//     incidence E1 E2 @ (0, 0, 0) smooth
//
//   edge E1 E2
//
// Every step after the first names its parent chart with `from`; the parent
// chart's surviving generator (in its renamed coordinates) must reproduce the
// child's claimed equation up to sign, which the runner verifies.

struct ScriptRename {
  std::string from;
  std::string to;
  bool negate = false;
};

struct ScriptDivisor {
  std::string name;
  std::vector<Polynomial> gens;  // over the chart's declared coords
  std::size_t line = 0;
};

struct ScriptIncidence {
  std::string a;
  std::string b;
  bool empty = false;
  std::vector<Rational> point;  // coords of the meeting point, when !empty
  bool smooth = false;          // expected verdict at the point, when !empty
  std::size_t line = 0;
};

struct ScriptExpect {
  enum class Kind { none, smooth, singular };
  Kind kind = Kind::none;
  std::vector<Rational> point;  // the singular point, for Kind::singular
  std::size_t line = 0;
};

struct ScriptChart {
  int index = 0;  // chart column: I = {index}
  VarSet::Ptr coords;
  std::vector<ScriptRename> renames;
  std::vector<Polynomial> saturate_by;  // over coords
  ScriptExpect expect;
  std::vector<ScriptDivisor> divisors;
  std::vector<ScriptIncidence> incidences;
  std::size_t line = 0;

  const ScriptDivisor* find_divisor(const std::string& name) const {
    for (const auto& d : divisors)
      if (d.name == name) return &d;
    return nullptr;
  }
};

struct ScriptStep {
  int number = 0;
  int from_step = 0;   // 0 for the first step
  int from_chart = 0;  // 0 for the first step
  VarSet::Ptr vars;
  std::optional<Polynomial> claim;
  std::optional<PolyMatrix> matrix;
  std::vector<ScriptChart> charts;
  std::size_t line = 0;

  const ScriptChart* find_chart(int index) const {
    for (const auto& c : charts)
      if (c.index == index) return &c;
    return nullptr;
  }
};

struct ResolutionScript {
  std::vector<ScriptStep> steps;
  std::vector<std::pair<std::string, std::string>> edges;

  const ScriptStep* find_step(int number) const {
    for (const auto& s : steps)
      if (s.number == number) return &s;
    return nullptr;
  }
};

namespace detail {

class ScriptParser {
 public:
  explicit ScriptParser(const std::string& text) : in_(text) {}

  ResolutionScript parse() {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++lineno_;
      std::string line = raw.substr(0, raw.find('#'));
      std::istringstream ls(line);
      std::string keyword;
      if (!(ls >> keyword)) continue;
      std::string rest;
      std::getline(ls, rest);
      dispatch(keyword, rest);
    }
    finish_step();
    if (script_.steps.empty()) throw ParseError("script has no steps");
    return std::move(script_);
  }

 private:
  void dispatch(const std::string& keyword, const std::string& rest) {
    if (keyword == "step") return begin_step(rest);
    if (keyword == "edge") return parse_edge(rest);
    if (!step_) fail("'" + keyword + "' outside of a step");
    if (keyword == "from") return parse_from(rest);
    if (keyword == "vars") return parse_vars(rest);
    if (keyword == "claim") return parse_claim(rest);
    if (keyword == "matrix") return parse_matrix(rest);
    if (keyword == "row") return parse_row(rest);
    if (keyword == "chart") return begin_chart(rest);
    if (!chart_) fail("'" + keyword + "' outside of a chart");
    if (keyword == "coords") return parse_coords(rest);
    if (keyword == "rename") return parse_rename(rest);
    if (keyword == "saturate") return parse_saturate(rest);
    if (keyword == "expect") return parse_expect(rest);
    if (keyword == "divisor") return parse_divisor(rest);
    if (keyword == "incidence") return parse_incidence(rest);
    fail("unknown directive '" + keyword + "'");
  }

  void begin_step(const std::string& rest) {
    finish_step();
    step_.emplace();
    step_->line = lineno_;
    matrix_rows_expected_ = 0;
    matrix_cols_ = 0;
    matrix_rows_.clear();
    std::istringstream ss(rest);
    if (!(ss >> step_->number)) fail("'step' needs a number");
    int expected = static_cast<int>(script_.steps.size()) + 1;
    if (step_->number != expected)
      fail("steps must be numbered consecutively; expected step " +
           std::to_string(expected));
  }

  void parse_from(const std::string& rest) {
    if (chart_) fail("'from' must precede the step's charts");
    std::istringstream ss(rest);
    std::string chart_word;
    if (!(ss >> step_->from_step >> chart_word >> step_->from_chart) ||
        chart_word != "chart")
      fail("expected 'from <step> chart <index>'");
    const ScriptStep* parent = script_.find_step(step_->from_step);
    if (!parent) fail("'from' refers to an unknown step");
    if (!parent->find_chart(step_->from_chart))
      fail("'from' refers to an unknown chart of step " +
           std::to_string(step_->from_step));
  }

  void parse_vars(const std::string& rest) {
    if (step_->vars) fail("duplicate 'vars' in step");
    auto names = split_words(rest);
    if (names.empty()) fail("'vars' needs at least one name");
    step_->vars = VarSet::make(names);
  }

  void parse_claim(const std::string& rest) {
    if (!step_->vars) fail("'claim' before 'vars'");
    if (step_->claim) fail("duplicate 'claim' in step");
    step_->claim = parse_poly(rest, step_->vars, lineno_);
  }

  void parse_matrix(const std::string& rest) {
    if (!step_->vars) fail("'matrix' before 'vars'");
    if (matrix_rows_expected_ > 0 || step_->matrix) fail("duplicate 'matrix' in step");
    std::istringstream ss(rest);
    int m = 0, n = 0;
    if (!(ss >> m >> n)) fail("'matrix' needs dimensions m n");
    if (m != n) fail("resolution scripts use square presentation matrices");
    if (m < 1) fail("matrix dimensions must be positive");
    matrix_rows_expected_ = m;
    matrix_cols_ = n;
    matrix_rows_.clear();
  }

  void parse_row(const std::string& rest) {
    if (matrix_rows_expected_ == 0) fail("'row' before 'matrix'");
    if (static_cast<int>(matrix_rows_.size()) == matrix_rows_expected_)
      fail("more 'row' lines than the declared matrix height");
    auto pieces = split_parenthesised(rest, lineno_);
    if (static_cast<int>(pieces.size()) != matrix_cols_)
      fail("expected " + std::to_string(matrix_cols_) + " entries in row");
    std::vector<Polynomial> row;
    for (const auto& body : pieces)
      row.push_back(parse_poly(body, step_->vars, lineno_));
    matrix_rows_.push_back(std::move(row));
    if (static_cast<int>(matrix_rows_.size()) == matrix_rows_expected_)
      step_->matrix = PolyMatrix::from_rows(step_->vars, matrix_rows_);
  }

  void begin_chart(const std::string& rest) {
    finish_chart();
    require_step_header();
    chart_.emplace();
    chart_->line = lineno_;
    std::istringstream ss(rest);
    if (!(ss >> chart_->index)) fail("'chart' needs a column index");
    if (chart_->index < 1 || chart_->index > matrix_cols_)
      fail("chart index out of range");
    if (step_->find_chart(chart_->index)) fail("duplicate chart in step");
  }

  void parse_coords(const std::string& rest) {
    if (chart_->coords) fail("duplicate 'coords' in chart");
    auto names = split_words(rest);
    if (names.empty()) fail("'coords' needs at least one name");
    chart_->coords = VarSet::make(names);
  }

  void parse_rename(const std::string& rest) {
    for (const auto& piece : split_on_commas(rest)) {
      std::istringstream ss(piece);
      std::string from, arrow, to;
      if (!(ss >> from >> arrow >> to) || arrow != "->")
        fail("expected 'rename <old> -> <new>'");
      std::string extra;
      if (ss >> extra) fail("trailing text in 'rename'");
      ScriptRename r;
      r.from = from;
      r.negate = !to.empty() && to[0] == '-';
      r.to = r.negate ? to.substr(1) : to;
      if (r.to.empty()) fail("empty rename target");
      chart_->renames.push_back(std::move(r));
    }
  }

  void parse_saturate(const std::string& rest) {
    require_coords();
    chart_->saturate_by.push_back(parse_poly(rest, chart_->coords, lineno_));
  }

  void parse_expect(const std::string& rest) {
    if (chart_->expect.kind != ScriptExpect::Kind::none)
      fail("duplicate 'expect' in chart");
    chart_->expect.line = lineno_;
    std::istringstream ss(rest);
    std::string what;
    ss >> what;
    if (what == "smooth") {
      std::string extra;
      if (ss >> extra) fail("trailing text after 'expect smooth'");
      chart_->expect.kind = ScriptExpect::Kind::smooth;
      return;
    }
    if (what != "singular") fail("expected 'expect smooth' or 'expect singular @ (...)'");
    chart_->expect.kind = ScriptExpect::Kind::singular;
    std::string at;
    if (!(ss >> at) || at != "@") fail("'expect singular' needs '@ (point)'");
    std::string point_text;
    std::getline(ss, point_text);
    chart_->expect.point = parse_point(point_text);
  }

  void parse_divisor(const std::string& rest) {
    require_coords();
    auto eq = rest.find('=');
    if (eq == std::string::npos) fail("expected 'divisor <name> = <gens>'");
    std::istringstream ns(rest.substr(0, eq));
    ScriptDivisor d;
    d.line = lineno_;
    std::string extra;
    if (!(ns >> d.name) || (ns >> extra)) fail("divisor needs exactly one name");
    if (chart_->find_divisor(d.name)) fail("duplicate divisor '" + d.name + "'");
    for (const auto& piece : split_on_commas(rest.substr(eq + 1)))
      d.gens.push_back(parse_poly(piece, chart_->coords, lineno_));
    if (d.gens.empty()) fail("divisor needs at least one generator");
    chart_->divisors.push_back(std::move(d));
  }

  void parse_incidence(const std::string& rest) {
    require_coords();
    ScriptIncidence inc;
    inc.line = lineno_;
    std::istringstream ss(rest);
    std::string tail;
    if (!(ss >> inc.a >> inc.b >> tail)) fail("expected 'incidence <A> <B> ...'");
    if (inc.a == inc.b) fail("incidence needs two distinct divisors");
    for (const auto* name : {&inc.a, &inc.b})
      if (!chart_->find_divisor(*name))
        fail("incidence refers to undeclared divisor '" + *name + "'");
    if (tail == "empty") {
      std::string extra;
      if (ss >> extra) fail("trailing text after 'incidence ... empty'");
      inc.empty = true;
    } else if (tail == "@") {
      std::string point_text;
      std::getline(ss, point_text);
      auto verdict_at = point_text.rfind(')');
      if (verdict_at == std::string::npos) fail("incidence point needs '(...)'");
      std::string verdict;
      std::istringstream vs(point_text.substr(verdict_at + 1));
      if (!(vs >> verdict) || (verdict != "smooth" && verdict != "singular"))
        fail("incidence needs a final 'smooth' or 'singular' verdict");
      std::string extra;
      if (vs >> extra) fail("trailing text after incidence verdict");
      inc.point = parse_point(point_text.substr(0, verdict_at + 1));
      inc.smooth = verdict == "smooth";
    } else {
      fail("expected '@ (point) smooth|singular' or 'empty'");
    }
    chart_->incidences.push_back(std::move(inc));
  }

  void parse_edge(const std::string& rest) {
    std::istringstream ss(rest);
    std::string a, b, extra;
    if (!(ss >> a >> b) || (ss >> extra)) fail("expected 'edge <A> <B>'");
    if (a == b) fail("edge needs two distinct divisors");
    script_.edges.emplace_back(a, b);
  }

  // "( 0, 1/2, -1 )" -> constants, one per chart coordinate.
  std::vector<Rational> parse_point(const std::string& text) {
    require_coords();
    auto open = text.find('(');
    auto close = text.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open)
      fail("expected a parenthesised point");
    std::vector<Rational> point;
    for (const auto& piece : split_on_commas(text.substr(open + 1, close - open - 1))) {
      Polynomial c = parse_poly(piece, chart_->coords, lineno_);
      if (!c.is_constant()) fail("point coordinates must be constants");
      point.push_back(c.constant_term());
    }
    if (static_cast<int>(point.size()) != chart_->coords->size())
      fail("point has " + std::to_string(point.size()) + " coordinates, chart has " +
           std::to_string(chart_->coords->size()));
    return point;
  }

  std::vector<std::string> split_on_commas(const std::string& text) {
    std::vector<std::string> out;
    std::string piece;
    std::istringstream ss(text);
    while (std::getline(ss, piece, ',')) {
      if (piece.find_first_not_of(" \t") == std::string::npos)
        fail("empty item in comma-separated list");
      out.push_back(piece);
    }
    return out;
  }

  static std::vector<std::string> split_words(const std::string& text) {
    std::istringstream ss(text);
    std::vector<std::string> out;
    for (std::string w; ss >> w;) out.push_back(w);
    return out;
  }

  void require_coords() {
    if (!chart_ || !chart_->coords)
      fail("this directive needs the chart's 'coords' line first");
  }

  void require_step_header() {
    if (!step_->vars) fail("step is missing its 'vars' line");
    if (!step_->claim) fail("step is missing its 'claim' line");
    if (!step_->matrix) fail("step is missing its matrix");
    if (step_->number > 1 && step_->from_step == 0)
      fail("step " + std::to_string(step_->number) + " is missing its 'from' line");
  }

  void finish_chart() {
    if (!chart_) return;
    if (!chart_->coords) fail("chart is missing its 'coords' line");
    if (chart_->expect.kind == ScriptExpect::Kind::none)
      fail("chart is missing its 'expect' line");
    step_->charts.push_back(std::move(*chart_));
    chart_.reset();
  }

  void finish_step() {
    if (!step_) return;
    finish_chart();
    require_step_header();
    if (step_->charts.empty()) fail("step has no charts");
    script_.steps.push_back(std::move(*step_));
    step_.reset();
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, lineno_, 1);
  }

  std::istringstream in_;
  std::size_t lineno_ = 0;
  ResolutionScript script_;
  std::optional<ScriptStep> step_;
  std::optional<ScriptChart> chart_;
  int matrix_rows_expected_ = 0;
  int matrix_cols_ = 0;
  std::vector<std::vector<Polynomial>> matrix_rows_;
};

}  // namespace detail

inline ResolutionScript parse_script(const std::string& text) {
  return detail::ScriptParser(text).parse();
}

inline ResolutionScript parse_script_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open script file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_script(buf.str());
}

}  // namespace tjurina
