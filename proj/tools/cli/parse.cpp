#include "parse.hpp"

#include <cctype>
#include <map>
#include <optional>

namespace berktrees::cli {

namespace {

std::string describe(std::size_t offset, const std::set<std::string>& expected, const std::string& text) {
  std::string msg = "syntax error at offset " + std::to_string(offset) + " in '" + text + "': expected one of";
  for (const auto& e : expected) msg += " " + e;
  return msg;
}

using Term = PuiseuxSeries::Term;

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool at_end() { return peek() == '\0'; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) error({std::string("'") + c + "'"});
  }
  [[noreturn]] void error(std::set<std::string> expected) {
    skip_ws();
    throw SyntaxError(pos_, std::move(expected), std::string(text_));
  }

  std::string digits() {
    std::string out;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) out += text_[pos_++];
    return out;
  }

  // Unsigned decimal or p/q.
  Rational number() {
    if (!std::isdigit(static_cast<unsigned char>(peek())) && peek() != '.') error({"number"});
    std::string s = digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      std::string frac = digits();
      if (frac.empty()) error({"digit"});
      return parse_rational((s.empty() ? "0" : s) + "." + frac);
    }
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      std::string den = digits();
      if (den.empty()) error({"digit"});
      if (den.find_first_not_of('0') == std::string::npos) fail(ErrorCode::kSyntaxError, "zero denominator in '" + std::string(text_) + "'");
      return parse_rational(s + "/" + den);
    }
    return parse_rational(s);
  }

  Rational signed_number() {
    bool neg = false;
    if (accept('-')) {
      neg = true;
    } else {
      accept('+');
    }
    Rational q = number();
    return neg ? Rational(-q) : q;
  }

  // "(" a ")" | "(" a "i" ")" | "(" a (+|-) b "i" ")", after the opening paren.
  ExactComplex complex_body() {
    Rational a = signed_number();
    if (accept('i')) {
      expect(')');
      return {Rational(0), a};
    }
    Rational b(0);
    if (peek() == '+' || peek() == '-') {
      bool neg = text_[pos_] == '-';
      ++pos_;
      b = number();
      if (neg) b = -b;
      expect('i');
    }
    expect(')');
    return {a, b};
  }

  Rational exponent() {
    if (accept('(')) {
      Rational e = signed_number();
      expect(')');
      return e;
    }
    return signed_number();
  }

  // t-part after the 't': ["^" exp].
  Rational t_power() { return accept('^') ? exponent() : Rational(1); }

  // One term of a series; an O-term sets `o` instead.
  // With `allow_z` also reads a trailing z-power into `zpow`.
  void term(bool negative, std::vector<Term>& out, std::optional<Rational>& o, bool allow_z, int* zpow) {
    const std::size_t start = pos_;
    if (peek() == 'O') {
      ++pos_;
      expect('(');
      expect('t');
      Rational e = t_power();
      expect(')');
      if (o) error({"term"});
      if (negative) {
        pos_ = start;
        error({"'+' before O-term"});
      }
      o = e;
      return;
    }
    std::optional<ExactComplex> coef;
    if (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '.') {
      coef = ExactComplex(number());
    } else if (accept('(')) {
      coef = complex_body();
    }
    bool star = coef && accept('*');
    Rational e(0);
    bool has_t = false;
    if (accept('t')) {
      has_t = true;
      e = t_power();
    }
    if (allow_z) {
      bool star2 = (has_t || coef) && !star && accept('*');
      if (accept('z')) {
        *zpow = 1;
        if (accept('^')) {
          std::string d = digits();
          if (d.empty()) error({"integer"});
          *zpow = std::stoi(d);
        }
      } else if (star2) {
        error({"'z'"});
      }
      if (!coef && !has_t && *zpow == 0 && !star2) {
        pos_ = start;
        error({"number", "'('", "'t'", "'z'", "'['"});
      }
    } else if (!coef && !has_t) {
      error({"number", "'('", "'t'", "'O'"});
    }
    if (star && !has_t && (!allow_z || *zpow == 0)) error({"'t'"});
    ExactComplex c = coef.value_or(ExactComplex::one());
    if (negative) c = -c;
    out.push_back({e, c});
  }

  PuiseuxSeries build(std::vector<Term> terms, const std::optional<Rational>& o) {
    if (o) return PuiseuxSeries::from_terms(std::move(terms), ExpBound(*o));
    return PuiseuxSeries::from_terms(std::move(terms));
  }

  // series until `close` (or end of text when close is '\0').
  PuiseuxSeries series(char close) {
    std::vector<Term> terms;
    std::optional<Rational> o;
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    for (;;) {
      term(negative, terms, o, false, nullptr);
      char c = peek();
      if (c == close) break;
      if (c == '+' || c == '-') {
        ++pos_;
        negative = c == '-';
        continue;
      }
      std::set<std::string> exp{"'+'", "'-'"};
      exp.insert(close == '\0' ? "end of input" : std::string("'") + close + "'");
      error(exp);
    }
    return build(std::move(terms), o);
  }

  SeriesPoly polynomial() {
    std::map<int, PuiseuxSeries> coeffs;
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    for (;;) {
      int zpow = 0;
      if (accept('[')) {
        PuiseuxSeries s = series(']');
        expect(']');
        accept('*');
        if (accept('z')) {
          zpow = 1;
          if (accept('^')) {
            std::string d = digits();
            if (d.empty()) error({"integer"});
            zpow = std::stoi(d);
          }
        }
        coeffs[zpow] = coeffs[zpow] + (negative ? -s : s);
      } else {
        std::vector<Term> one;
        std::optional<Rational> o;
        term(negative, one, o, true, &zpow);
        if (o) error({"term"});
        coeffs[zpow] = coeffs[zpow] + PuiseuxSeries::from_terms(std::move(one));
      }
      char c = peek();
      if (c == '\0') break;
      if (c == '+' || c == '-') {
        ++pos_;
        negative = c == '-';
        continue;
      }
      error({"'+'", "'-'", "end of input"});
    }
    SeriesPoly out;
    for (const auto& [k, s] : coeffs) {
      if (out.size() <= static_cast<std::size_t>(k)) out.resize(k + 1);
      out[k] = s;
    }
    return out;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SyntaxError::SyntaxError(std::size_t offset, std::set<std::string> expected, const std::string& text)
    : Error(ErrorCode::kSyntaxError, describe(offset, expected, text)), offset_(offset), expected_(std::move(expected)) {}

PuiseuxSeries parse_series(std::string_view text) {
  Scanner s(text);
  PuiseuxSeries out = s.series('\0');
  if (!s.at_end()) s.error({"end of input"});
  return out;
}

PointP1L parse_point(std::string_view text) {
  std::string_view t = text;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
  if (t == "inf" || t == "∞") return PointP1L::infinity();
  return parse_series(text);
}

SeriesPoly parse_polynomial(std::string_view text) {
  Scanner s(text);
  return s.polynomial();
}

}  // namespace berktrees::cli
