#include "qhtop/radial_symbol.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>

namespace qhtop {

namespace {

constexpr double kPowerMergeTol = 1e-12;

bool same_power(double a, double b) {
  return std::abs(a - b) <= kPowerMergeTol * std::max(1.0, std::abs(a));
}

}  // namespace

RadialSymbol::RadialSymbol(std::initializer_list<SymbolTerm> terms)
    : terms_(terms) {
  normalize();
}

RadialSymbol::RadialSymbol(std::vector<SymbolTerm> terms)
    : terms_(std::move(terms)) {
  normalize();
}

RadialSymbol RadialSymbol::power(double coeff, double exponent) {
  return RadialSymbol{{coeff, exponent, 0}};
}

RadialSymbol RadialSymbol::power_log(double coeff, double exponent) {
  return RadialSymbol{{coeff, exponent, 1}};
}

void RadialSymbol::normalize() {
  for (const SymbolTerm& t : terms_) {
    if (t.log_exp != 0 && t.log_exp != 1) {
      throw std::invalid_argument("log exponent must be 0 or 1");
    }
  }
  std::sort(terms_.begin(), terms_.end(),
            [](const SymbolTerm& a, const SymbolTerm& b) {
              if (!same_power(a.power, b.power)) return a.power < b.power;
              return a.log_exp < b.log_exp;
            });
  std::vector<SymbolTerm> merged;
  for (const SymbolTerm& t : terms_) {
    if (!merged.empty() && same_power(merged.back().power, t.power) &&
        merged.back().log_exp == t.log_exp) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(t);
    }
  }
  // Exactly cancelling intermediates (and their roundoff residue) go first;
  // only the surviving terms must respect the integrability floor.
  double scale = 0.0;
  for (const SymbolTerm& t : merged) scale = std::max(scale, std::abs(t.coeff));
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [&](const SymbolTerm& t) {
                                return std::abs(t.coeff) <= 1e-14 * scale;
                              }),
               merged.end());
  for (const SymbolTerm& t : merged) {
    if (!(t.power > -2.0)) {
      throw std::invalid_argument("radial symbol power must exceed -2, got " +
                                  std::to_string(t.power));
    }
  }
  terms_ = std::move(merged);
}

bool RadialSymbol::has_log() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const SymbolTerm& t) { return t.log_exp != 0; });
}

double RadialSymbol::min_power() const {
  double m = std::numeric_limits<double>::infinity();
  for (const SymbolTerm& t : terms_) m = std::min(m, t.power);
  return m;
}

RadialSymbol& RadialSymbol::operator+=(const RadialSymbol& other) {
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  normalize();
  return *this;
}

RadialSymbol RadialSymbol::scaled(double c) const {
  std::vector<SymbolTerm> out = terms_;
  for (SymbolTerm& t : out) t.coeff *= c;
  return RadialSymbol(std::move(out));
}

double RadialSymbol::operator()(double r) const {
  double v = 0.0;
  const double lr = std::log(r);
  for (const SymbolTerm& t : terms_) {
    double term = t.coeff * std::pow(r, t.power);
    if (t.log_exp) term *= lr;
    v += term;
  }
  return v;
}

RadialSymbol RadialSymbol::shifted(double shift) const {
  std::vector<SymbolTerm> out = terms_;
  for (SymbolTerm& t : out) t.power += shift;
  return RadialSymbol(std::move(out));
}

bool RadialSymbol::approx_equal(const RadialSymbol& other, double tol) const {
  const RadialSymbol diff = *this - other;
  double scale = 1.0;
  for (const SymbolTerm& t : terms_) scale = std::max(scale, std::abs(t.coeff));
  for (const SymbolTerm& t : other.terms_)
    scale = std::max(scale, std::abs(t.coeff));
  for (const SymbolTerm& t : diff.terms()) {
    if (std::abs(t.coeff) > tol * scale) return false;
  }
  return true;
}

bool RadialSymbol::proportional_to(const RadialSymbol& other, double tol) const {
  if (terms_.size() != other.terms_.size()) return false;
  if (terms_.empty()) return false;
  double ratio = 0.0;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const SymbolTerm& a = terms_[i];
    const SymbolTerm& b = other.terms_[i];
    if (!same_power(a.power, b.power) || a.log_exp != b.log_exp) return false;
    const double r = b.coeff / a.coeff;
    if (i == 0) {
      ratio = r;
    } else if (std::abs(r - ratio) > tol * std::max(1.0, std::abs(ratio))) {
      return false;
    }
  }
  return ratio != 0.0;
}

std::string RadialSymbol::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const SymbolTerm& t : terms_) {
    const double c = t.coeff;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    os << std::abs(c) << "*r^" << t.power;
    if (t.log_exp) os << "*log";
  }
  return os.str();
}

namespace {

// Hand-rolled scanner for the symbol grammar. Terms are
//   [coeff '*'] 'r' ['^' number] ['*' 'log']   or a bare coefficient,
// joined by '+'/'-'. Numbers are decimals or fractions p/q.
class SymbolScanner {
 public:
  explicit SymbolScanner(std::string_view text) : text_(text) {}

  RadialSymbol parse() {
    std::vector<SymbolTerm> terms;
    skip_ws();
    if (at_end()) throw SymbolParseError("empty symbol", 0);
    double sign = 1.0;
    if (peek() == '+' || peek() == '-') {
      sign = (next() == '-') ? -1.0 : 1.0;
    }
    terms.push_back(parse_term(sign));
    skip_ws();
    while (!at_end()) {
      const char c = peek();
      if (c != '+' && c != '-') {
        throw SymbolParseError("expected '+' or '-'", pos_);
      }
      next();
      terms.push_back(parse_term(c == '-' ? -1.0 : 1.0));
      skip_ws();
    }
    return RadialSymbol(std::move(terms));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  char next() { return text_[pos_++]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) next();
  }

  double parse_number() {
    skip_ws();
    const std::size_t start = pos_;
    if (!at_end() && (peek() == '+' || peek() == '-')) next();
    bool digits = false;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) ||
                         peek() == '.')) {
      digits = true;
      next();
    }
    if (!digits) throw SymbolParseError("expected a number", start);
    double value = std::stod(std::string(text_.substr(start, pos_ - start)));
    skip_ws();
    if (!at_end() && peek() == '/') {
      next();
      skip_ws();
      const std::size_t dstart = pos_;
      while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) ||
                           peek() == '.' || peek() == '-')) {
        next();
      }
      if (dstart == pos_) throw SymbolParseError("expected denominator", dstart);
      const double den =
          std::stod(std::string(text_.substr(dstart, pos_ - dstart)));
      if (den == 0.0) throw SymbolParseError("zero denominator", dstart);
      value /= den;
    }
    return value;
  }

  SymbolTerm parse_term(double sign) {
    skip_ws();
    SymbolTerm term{sign, 0.0, 0};
    bool saw_factor = false;
    if (at_end()) throw SymbolParseError("expected a term", pos_);
    if (peek() != 'r' && peek() != 'l') {
      term.coeff = sign * parse_number();
      saw_factor = true;
      skip_ws();
      if (at_end() || peek() != '*') return term;
      next();  // '*'
      skip_ws();
    }
    if (!at_end() && peek() == 'r') {
      next();
      skip_ws();
      if (!at_end() && peek() == '^') {
        next();
        term.power = parse_number();
      } else {
        term.power = 1.0;
      }
      saw_factor = true;
      skip_ws();
      if (!at_end() && peek() == '*') {
        next();
        skip_ws();
        expect_log();
        term.log_exp = 1;
      }
      return term;
    }
    if (!at_end() && peek() == 'l') {
      expect_log();
      term.log_exp = 1;
      return term;
    }
    if (!saw_factor) throw SymbolParseError("expected 'r' or a number", pos_);
    return term;
  }

  void expect_log() {
    if (text_.substr(pos_, 3) != "log") {
      throw SymbolParseError("expected 'log'", pos_);
    }
    pos_ += 3;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RadialSymbol parse_symbol(std::string_view text) {
  return SymbolScanner(text).parse();
}

}  // namespace qhtop
