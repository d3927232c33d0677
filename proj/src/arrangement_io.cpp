#include "symtutte/arrangement_io.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "symtutte/errors.hpp"
#include "symtutte/symmetric.hpp"
#include <json.hpp>

namespace symtutte {

namespace {

struct Token {
  enum Kind { Int, Ident, Sym, End } kind;
  std::string text;
};

std::vector<Token> tokenize(const std::string& line, std::size_t line_no) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const char c = line[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      out.push_back({Token::Int, line.substr(i, j - i)});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      // z<digits> is one token; other identifiers are alphabetic runs.
      std::size_t j = i + 1;
      if (c == 'z')
        while (j < line.size() && std::isdigit(static_cast<unsigned char>(line[j]))) ++j;
      else
        while (j < line.size() && std::isalpha(static_cast<unsigned char>(line[j]))) ++j;
      out.push_back({Token::Ident, line.substr(i, j - i)});
      i = j;
    } else if (std::string("()+-*^=:").find(c) != std::string::npos) {
      out.push_back({Token::Sym, std::string(1, c)});
      ++i;
    } else {
      throw ParseError(line_no, out.size() + 1, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Token::End, ""});
  return out;
}

class LineParser {
 public:
  LineParser(std::vector<Token> toks, std::size_t line_no, unsigned m, unsigned n)
      : toks_(std::move(toks)), line_(line_no), m_(m), n_(n) {}

  const Token& peek() const { return toks_[pos_]; }
  bool at_sym(const char* s) const { return peek().kind == Token::Sym && peek().text == s; }
  bool at_end() const { return peek().kind == Token::End; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, pos_ + 1, what); }

  void expect_sym(const char* s) {
    if (!at_sym(s)) fail(std::string("expected '") + s + "'" + found());
    ++pos_;
  }

  std::string found() const {
    return at_end() ? ", found end of line" : ", found '" + peek().text + "'";
  }

  Integer integer() {
    if (peek().kind != Token::Int) fail("expected an integer" + found());
    return Integer(toks_[pos_++].text);
  }

  // w or w^k
  CycElem root() {
    ++pos_;
    long k = 1;
    if (at_sym("^")) {
      ++pos_;
      k = integer().get_si();
    }
    return CycElem::root_power(m_, k);
  }

  bool at_root() const { return peek().kind == Token::Ident && peek().text == "w"; }

  // [int ['*']] w^k | int
  CycElem atom() {
    if (at_root()) return root();
    if (peek().kind != Token::Int) fail("expected a coefficient" + found());
    const Integer c = integer();
    if (at_sym("*")) {
      ++pos_;
      if (!at_root()) fail("expected 'w' after '*'" + found());
      return CycElem::integer(m_, c) * root();
    }
    if (at_root()) return CycElem::integer(m_, c) * root();
    return CycElem::integer(m_, c);
  }

  // [sign] atom {sign atom}
  CycElem expression() {
    CycElem acc(m_);
    bool first = true;
    while (true) {
      bool neg = false;
      if (at_sym("+") || at_sym("-")) {
        neg = at_sym("-");
        ++pos_;
      } else if (!first) {
        break;
      }
      CycElem a = atom();
      acc += neg ? -a : a;
      first = false;
      if (!(at_sym("+") || at_sym("-"))) break;
    }
    return acc;
  }

  CycElem coefficient_expression() {
    if (at_sym("(")) {
      ++pos_;
      CycElem c = expression();
      expect_sym(")");
      return c;
    }
    return expression();
  }

  unsigned variable() {
    if (peek().kind != Token::Ident || peek().text.size() < 2 || peek().text[0] != 'z')
      fail("expected a variable z<index>" + found());
    const unsigned long idx = std::stoul(peek().text.substr(1));
    if (idx < 1 || idx > n_) fail("variable " + peek().text + " out of range z1..z" + std::to_string(n_));
    ++pos_;
    return static_cast<unsigned>(idx - 1);
  }

  // term := [coef] z<idx>; coef := int | w-atom | '(' expr ')'
  std::pair<CycElem, unsigned> term() {
    CycElem c = CycElem::integer(m_, 1);
    if (at_sym("(")) {
      ++pos_;
      c = expression();
      expect_sym(")");
      if (at_sym("*")) ++pos_;
    } else if (peek().kind == Token::Int || at_root()) {
      c = atom();
      if (at_sym("*")) ++pos_;
    }
    return {c, variable()};
  }

  Hyperplane equation() {
    Hyperplane h{std::vector<CycElem>(n_, CycElem(m_)), CycElem(m_)};
    bool first = true;
    while (!at_sym("=")) {
      bool neg = false;
      if (at_sym("+") || at_sym("-")) {
        neg = at_sym("-");
        ++pos_;
      } else if (!first) {
        fail("expected '+', '-' or '='" + found());
      }
      auto [c, idx] = term();
      h.coeffs[idx] += neg ? -c : c;
      first = false;
    }
    if (first) fail("equation has no terms");
    ++pos_;
    h.rhs = coefficient_expression();
    if (!at_end()) fail("unexpected trailing input" + found());
    return h;
  }

  std::size_t pos_ = 0;

 private:
  std::vector<Token> toks_;
  std::size_t line_;
  unsigned m_;
  unsigned n_;
};

unsigned header_value(const std::vector<Token>& toks, std::size_t line_no, const char* name) {
  if (toks.size() != 4 || toks[0].kind != Token::Ident || toks[0].text != name || toks[1].text != "=" ||
      toks[2].kind != Token::Int)
    throw ParseError(line_no, 0, std::string("expected header '") + name + " = <int>'");
  return static_cast<unsigned>(std::stoul(toks[2].text));
}

}  // namespace

Arrangement ArrangementFile::arrangement() const {
  if (kind) return expand_representatives(reps, *kind, m, n);
  return Arrangement(m, n, hyperplanes);
}

ArrangementFile parse_arrangement(const std::string& text) {
  ArrangementFile f;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  int header = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto toks = tokenize(line, line_no);
    if (header == 0) {
      f.m = header_value(toks, line_no, "m");
      if (f.m == 0) throw ParseError(line_no, 3, "root order must be positive");
      ++header;
      continue;
    }
    if (header == 1) {
      f.n = header_value(toks, line_no, "n");
      ++header;
      continue;
    }
    LineParser p(std::move(toks), line_no, f.m, f.n);
    if (p.peek().kind == Token::Ident && p.peek().text == "rep") {
      ++p.pos_;
      if (p.peek().kind != Token::Ident || (p.peek().text != "sh" && p.peek().text != "csh"))
        p.fail("expected 'sh' or 'csh'" + p.found());
      const SymmetryKind k = p.peek().text == "sh" ? SymmetryKind::SH : SymmetryKind::CSH;
      ++p.pos_;
      p.expect_sym(":");
      if (!f.hyperplanes.empty()) throw ParseError(line_no, 1, "cannot mix representative and hyperplane lines");
      if (f.kind && *f.kind != k) throw ParseError(line_no, 2, "all representative lines must share a symmetry kind");
      f.kind = k;
      const Hyperplane h = p.equation();
      std::size_t j = h.coeffs.size();
      while (j > 0 && to_number_field(h.coeffs[j - 1]).is_zero()) --j;
      RepresentativeEquation e{std::vector<CycElem>(h.coeffs.begin(), h.coeffs.begin() + j), h.rhs};
      try {
        validate(e);
      } catch (const InvalidHyperplane& err) {
        throw ParseError(line_no, 0, err.what());
      }
      f.reps.push_back(std::move(e));
    } else {
      if (f.kind) throw ParseError(line_no, 1, "cannot mix representative and hyperplane lines");
      Hyperplane h = p.equation();
      if (std::all_of(h.coeffs.begin(), h.coeffs.end(), [](const CycElem& c) { return to_number_field(c).is_zero(); }))
        throw ParseError(line_no, 0, "zero coefficient vector");
      f.hyperplanes.push_back(std::move(h));
    }
  }
  if (header < 2) throw ParseError(line_no, 0, "missing header lines 'm = <int>' and 'n = <int>'");
  return f;
}

std::string render_coefficient(const CycElem& c) {
  bool integral = true;
  for (std::size_t i = 1; i < c.coords().size(); ++i)
    if (c[i] != 0) integral = false;
  if (integral) return c[0].get_str();
  return "(" + to_string(c) + ")";
}

namespace {

std::string render_equation(const std::vector<CycElem>& coeffs, const CycElem& rhs) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const CycElem& c = coeffs[i];
    if (c.is_zero()) continue;
    const std::string var = "z" + std::to_string(i + 1);
    std::string coef = render_coefficient(c);
    bool neg = false;
    if (coef[0] == '-') {
      neg = true;
      coef = coef.substr(1);
    }
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    out += coef == "1" ? var : coef + " " + var;
  }
  // Coefficient vectors that are zero only in Q(w) still need a term.
  if (out.empty()) out = "0 z1";
  return out + " = " + render_coefficient(rhs);
}

}  // namespace

std::string render_arrangement(const ArrangementFile& f) {
  std::ostringstream os;
  os << "m = " << f.m << "\n" << "n = " << f.n << "\n";
  if (f.kind) {
    for (const auto& e : f.reps) os << "rep " << to_string(*f.kind) << ": " << render_equation(e.coeffs, e.rhs) << "\n";
  } else {
    for (const auto& h : f.hyperplanes) os << render_equation(h.coeffs, h.rhs) << "\n";
  }
  return os.str();
}

ArrangementFile file_from(const Arrangement& a) {
  ArrangementFile f;
  f.m = a.root_order();
  f.n = a.dim();
  f.hyperplanes = a.hyperplanes();
  return f;
}

std::string to_json(const BivarPoly& p) {
  nlohmann::ordered_json j;
  j["vars"] = {p.vars()[0], p.vars()[1]};
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({e.first, e.second, c.get_str()});
  j["terms"] = terms;
  return j.dump();
}

std::string to_json(const Poly& p, const std::string& var) {
  nlohmann::ordered_json j;
  j["vars"] = {var};
  auto terms = nlohmann::ordered_json::array();
  for (std::size_t e = 0; e < p.coeffs().size(); ++e)
    if (p.coeffs()[e] != 0) terms.push_back({e, p.coeffs()[e].get_str()});
  j["terms"] = terms;
  return j.dump();
}

}  // namespace symtutte
