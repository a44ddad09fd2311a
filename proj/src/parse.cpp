#include "lgcy/parse.hpp"

#include <cctype>
#include <map>

namespace lgcy {

namespace {

struct RawFactor {
  std::size_t var;
  unsigned power;
};

class Parser {
 public:
  Parser(std::string_view text, std::size_t start, std::vector<std::string> names, bool fixed)
      : text_(text), pos_(start), names_(std::move(names)), fixed_(fixed) {}

  Polynomial parse() {
    std::vector<std::pair<Rational, std::vector<RawFactor>>> raw;
    skip_ws();
    bool negative = false;
    if (peek('+') || peek('-')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    while (true) {
      auto term = parse_term();
      if (negative) term.first = -term.first;
      raw.push_back(std::move(term));
      skip_ws();
      if (pos_ == text_.size()) break;
      if (!peek('+') && !peek('-')) fail("expected '+', '-' or end of input");
      negative = text_[pos_] == '-';
      ++pos_;
    }
    const std::size_t n = names_.size();
    if (n == 0) throw Error(ErrorCode::SyntaxError, "polynomial has no variables", 0);
    if (n > kMaxVars) throw Error(ErrorCode::InvalidArgument, "too many variables");
    std::vector<Polynomial::Term> terms;
    for (auto& [c, factors] : raw) {
      Monomial m(n);
      for (const auto& f : factors) m.set(f.var, m[f.var] + f.power);
      terms.push_back({m, c});
    }
    return Polynomial::from_terms(n, std::move(terms));
  }

  const std::vector<std::string>& names() const { return names_; }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::SyntaxError, what + " at offset " + std::to_string(pos_), pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  Integer parse_int() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::pair<Rational, std::vector<RawFactor>> parse_term() {
    Rational coeff(1);
    std::vector<RawFactor> factors;
    while (true) {
      skip_ws();
      if (pos_ >= text_.size()) fail("expected a coefficient or variable");
      char c = text_[pos_];
      if (std::isdigit(static_cast<unsigned char>(c))) {
        Integer num = parse_int();
        Integer den = 1;
        if (peek('/')) {
          ++pos_;
          std::size_t at = pos_;
          den = parse_int();
          if (den == 0) {
            pos_ = at;
            fail("zero denominator");
          }
        }
        Rational q(num, den);
        q.canonicalize();
        coeff *= q;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        factors.push_back(parse_power());
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      if (!peek('*')) break;
      ++pos_;
    }
    return {coeff, factors};
  }

  RawFactor parse_power() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string name(text_.substr(start, pos_ - start));
    std::size_t index = names_.size();
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) index = i;
    if (index == names_.size()) {
      if (fixed_) throw Error(ErrorCode::UnknownVariable, "unknown variable '" + name + "'", start);
      names_.push_back(name);
    }
    unsigned power = 1;
    if (peek('^')) {
      ++pos_;
      Integer e = parse_int();
      if (e == 0 || e > 65535) fail("exponent out of range");
      power = static_cast<unsigned>(e.get_ui());
    }
    return {index, power};
  }

  std::string_view text_;
  std::size_t pos_;
  std::vector<std::string> names_;
  bool fixed_;
};

}  // namespace

PolynomialSource parse_polynomial(std::string_view text) {
  std::size_t start = 0;
  std::vector<std::string> header;
  bool fixed = false;
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text.substr(first, 5) == "vars:") {
    std::size_t eol = text.find('\n', first);
    std::string_view line = text.substr(first + 5, eol == std::string_view::npos ? std::string_view::npos : eol - first - 5);
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) header.emplace_back(line.substr(i, j - i));
      i = j;
    }
    if (header.empty()) throw Error(ErrorCode::SyntaxError, "empty variable header", first);
    fixed = true;
    start = eol == std::string_view::npos ? text.size() : eol + 1;
  }
  Parser p(text, start, header, fixed);
  Polynomial poly = p.parse();
  return {p.names(), std::string(text), std::move(poly)};
}

Polynomial parse_polynomial(std::string_view text, std::span<const std::string> names) {
  Parser p(text, 0, {names.begin(), names.end()}, true);
  return p.parse();
}

std::string render(const PolynomialSource& src) {
  std::string out = "vars:";
  for (const auto& n : src.names) out += " " + n;
  return out + "\n" + to_string(src.poly, src.names);
}

}  // namespace lgcy
