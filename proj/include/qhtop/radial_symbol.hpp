#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qhtop {

/// One term c * r^p * (log r)^e of a radial symbol, e in {0,1}.
struct SymbolTerm {
  double coeff = 0.0;
  double power = 0.0;
  int log_exp = 0;
};

/// Finite sum of power/log-power terms on (0,1].
///
/// Every power must exceed -2 so the symbol lies in L^1([0,1], r dr) and its
/// Mellin transform is defined on Re z >= 2. Terms with equal (power, log_exp)
/// are merged; vanished coefficients are dropped.
class RadialSymbol {
 public:
  RadialSymbol() = default;
  RadialSymbol(std::initializer_list<SymbolTerm> terms);
  explicit RadialSymbol(std::vector<SymbolTerm> terms);

  static RadialSymbol constant(double c) { return power(c, 0.0); }
  static RadialSymbol power(double coeff, double exponent);
  static RadialSymbol power_log(double coeff, double exponent);

  const std::vector<SymbolTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool has_log() const;
  double min_power() const;  // +inf convention for the zero symbol

  RadialSymbol& operator+=(const RadialSymbol& other);
  RadialSymbol scaled(double c) const;
  friend RadialSymbol operator+(RadialSymbol a, const RadialSymbol& b) {
    a += b;
    return a;
  }
  friend RadialSymbol operator-(RadialSymbol a, const RadialSymbol& b) {
    a += b.scaled(-1.0);
    return a;
  }

  /// Pointwise value at r in (0,1].
  double operator()(double r) const;

  /// r^shift * this (exponent shift; powers must stay > -2).
  RadialSymbol shifted(double shift) const;

  bool approx_equal(const RadialSymbol& other, double tol = 1e-12) const;

  /// True when other == c * this for a single nonzero constant c.
  bool proportional_to(const RadialSymbol& other, double tol = 1e-10) const;

  std::string str() const;

 private:
  void normalize();
  std::vector<SymbolTerm> terms_;
};

struct SymbolParseError : std::runtime_error {
  SymbolParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), pos(position) {}
  std::size_t pos;
};

/// Parses "3*r^-1 - r^3", "1/2*r^2*log", "1", ... Coefficients are decimals
/// or fractions p/q; exponents are decimals or fractions; an optional trailing
/// *log marks a log factor.
RadialSymbol parse_symbol(std::string_view text);

}  // namespace qhtop
