#ifndef SOLVCERT_PARSER_HPP
#define SOLVCERT_PARSER_HPP

#include <cctype>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include <gmpxx.h>

#include "solvcert/algebra.hpp"
#include "solvcert/errors.hpp"
#include "solvcert/field.hpp"
#include "solvcert/polynomial.hpp"

// Presentation files, one declaration per line:
//
//   field 0            characteristic, 0 or a prime
//   vars X Y Z         variable names, X1 > X2 > ... in the term order
//   lowey 5            optional: adjoin <X>^5
//   gen X^2 + Y^2      a generator; repeatable
//   # comment
//
// expr   := term (("+" | "-") term)*
// term   := factor ("*" factor)*
// factor := RATIONAL | IDENT ("^" INT)? | "(" expr ")" ("^" INT)? | "-" factor

namespace solvcert {

/// Field-independent content of a presentation file. Generator texts are kept
/// with their positions and parsed once the field is known.
struct PresentationSource {
  struct Generator {
    std::string text;
    int line;
    int column;  // column of text[0]
  };
  FieldSpec field;
  std::vector<std::string> vars;
  std::optional<std::uint32_t> lowey;
  std::vector<Generator> generators;
};

namespace detail {

inline bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

inline std::uint64_t parse_uint(const std::string& s, int line, int column, std::uint64_t max) {
  if (s.empty()) throw ParseError("expected a non-negative integer", line, column);
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw ParseError("expected a non-negative integer", line, column + static_cast<int>(i));
    if (v > (max - static_cast<std::uint64_t>(s[i] - '0')) / 10) throw ParseError("integer too large", line, column);
    v = v * 10 + static_cast<std::uint64_t>(s[i] - '0');
  }
  return v;
}

/// Splits a line into whitespace-separated words with 1-based columns.
inline std::vector<std::pair<std::string, int>> words(const std::string& line) {
  std::vector<std::pair<std::string, int>> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    out.emplace_back(line.substr(i, j - i), static_cast<int>(i) + 1);
    i = j;
  }
  return out;
}

template <class F>
class ExprParser {
 public:
  using Poly = Polynomial<F>;

  ExprParser(const F& field, const std::vector<std::string>& vars, const std::string& text, int line, int column)
      : field_(field), n_(vars.size()), text_(text), line_(line), column_(column) {
    for (std::size_t i = 0; i < vars.size(); ++i) index_.emplace(vars[i], i);
  }

  Poly parse() {
    Poly p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_, column_ + static_cast<int>(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string digits() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  std::uint32_t exponent() {
    skip_space();
    std::size_t at = pos_;
    std::string d = digits();
    if (d.empty()) fail("expected an exponent");
    return static_cast<std::uint32_t>(
        parse_uint(d, line_, column_ + static_cast<int>(at), std::numeric_limits<std::uint32_t>::max()));
  }

  Poly expr() {
    Poly p = term();
    while (true) {
      if (accept('+'))
        p += term();
      else if (accept('-'))
        p -= term();
      else
        return p;
    }
  }

  Poly term() {
    Poly p = factor();
    while (accept('*')) p *= factor();
    return p;
  }

  Poly factor() {
    skip_space();
    if (pos_ == text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!accept(')')) fail("expected ')'");
      if (accept('^')) p = p.pow(exponent());
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num(digits()), den(1);
      if (accept('/')) {
        std::string d = digits();
        if (d.empty()) fail("expected a denominator");
        den = mpz_class(d);
        if (den == 0) fail("zero denominator");
      }
      try {
        return Poly::constant(field_, n_, field_.from_mpz(num, den));
      } catch (const FieldError& e) {
        fail(e.what());
      }
    }
    if (is_ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
      std::string name = text_.substr(start, pos_ - start);
      auto it = index_.find(name);
      if (it == index_.end()) {
        pos_ = start;
        fail("undeclared variable '" + name + "'");
      }
      std::uint32_t e = 1;
      if (accept('^')) e = exponent();
      return Poly::term(field_, Monomial::variable(n_, it->second, e), field_.one());
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const F& field_;
  std::size_t n_;
  const std::string& text_;
  int line_;
  int column_;
  std::size_t pos_ = 0;
  std::unordered_map<std::string, std::size_t> index_;
};

}  // namespace detail

inline PresentationSource parse_source(const std::string& text) {
  PresentationSource src;
  bool have_field = false, have_vars = false;
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw.substr(0, raw.find('#'));
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto ws = detail::words(line);
    if (ws.empty()) continue;
    const auto& [kw, kw_col] = ws[0];
    if (kw == "field") {
      if (have_field) throw ParseError("duplicate field line", line_no, kw_col);
      if (ws.size() != 2) throw ParseError("field takes one integer", line_no, kw_col);
      src.field = make_field_spec(detail::parse_uint(ws[1].first, line_no, ws[1].second, 0xFFFFFFFFull));
      have_field = true;
    } else if (kw == "vars") {
      if (have_vars) throw ParseError("duplicate vars line", line_no, kw_col);
      if (ws.size() < 2) throw ParseError("vars needs at least one name", line_no, kw_col);
      for (std::size_t i = 1; i < ws.size(); ++i) {
        const auto& [name, col] = ws[i];
        if (!detail::is_ident_start(name[0])) throw ParseError("bad variable name '" + name + "'", line_no, col);
        for (std::size_t k = 1; k < name.size(); ++k)
          if (!detail::is_ident_char(name[k]))
            throw ParseError("bad variable name '" + name + "'", line_no, col + static_cast<int>(k));
        for (const auto& v : src.vars)
          if (v == name) throw ParseError("variable '" + name + "' declared twice", line_no, col);
        src.vars.push_back(name);
      }
      have_vars = true;
    } else if (kw == "lowey") {
      if (src.lowey) throw ParseError("duplicate lowey line", line_no, kw_col);
      if (ws.size() != 2) throw ParseError("lowey takes one integer", line_no, kw_col);
      src.lowey = static_cast<std::uint32_t>(detail::parse_uint(ws[1].first, line_no, ws[1].second, 100000));
    } else if (kw == "gen") {
      if (ws.size() < 2) throw ParseError("gen needs an expression", line_no, kw_col);
      std::size_t start = static_cast<std::size_t>(ws[1].second - 1);
      src.generators.push_back({line.substr(start), line_no, ws[1].second});
    } else {
      throw ParseError("unknown declaration '" + kw + "'", line_no, kw_col);
    }
  }
  if (!have_field) throw ParseError("missing field line", line_no + 1, 1);
  if (!have_vars) throw ParseError("missing vars line", line_no + 1, 1);
  return src;
}

template <class F>
IdealPresentation<F> build_presentation(const PresentationSource& src, const F& field) {
  if (!(field.spec() == src.field)) throw FieldError("field does not match the file's characteristic");
  std::vector<Polynomial<F>> gens;
  for (const auto& g : src.generators) {
    auto p = detail::ExprParser<F>(field, src.vars, g.text, g.line, g.column).parse();
    if (p.is_zero()) throw ZeroPolynomialError("line " + std::to_string(g.line) + ": generator is zero");
    gens.push_back(std::move(p));
  }
  return IdealPresentation<F>(field, src.vars.size(), std::move(gens), src.lowey, src.vars);
}

/// Parses a single polynomial over the given variables.
template <class F>
Polynomial<F> parse_polynomial(const F& field, const std::vector<std::string>& vars, const std::string& text) {
  return detail::ExprParser<F>(field, vars, text, 1, 1).parse();
}

/// Canonical text form; parsing it back yields an equal presentation.
template <class F>
std::string print_presentation(const IdealPresentation<F>& p) {
  std::string out = "field " + std::to_string(p.field.characteristic()) + "\nvars";
  for (const auto& v : p.names) out += " " + v;
  out += "\n";
  if (p.power_cap) out += "lowey " + std::to_string(*p.power_cap) + "\n";
  for (const auto& g : p.generators) out += "gen " + g.to_string(p.names) + "\n";
  return out;
}

}  // namespace solvcert

#endif  // SOLVCERT_PARSER_HPP
