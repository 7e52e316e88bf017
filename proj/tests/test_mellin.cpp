#include <cmath>
#include <random>

#include "doctest.h"
#include "qhtop/mellin.hpp"
#include "qhtop/oracle.hpp"

using namespace qhtop;

namespace {

bool close(double a, double b, double tol = 1e-12) {
  return std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

}  // namespace

TEST_CASE("symbol invariants: merging, zero dropping, power floor") {
  const RadialSymbol s{{1.0, 2.0, 0}, {2.0, 2.0, 0}, {1.0, 1.0, 0}, {-1.0, 1.0, 0}};
  REQUIRE(s.terms().size() == 1);
  CHECK(s.terms().front().coeff == doctest::Approx(3.0));
  CHECK_THROWS_AS(RadialSymbol::power(1.0, -2.0), std::invalid_argument);
  CHECK_THROWS_AS(RadialSymbol::power(1.0, -2.5), std::invalid_argument);
}

TEST_CASE("symbol parser round trips the grammar") {
  const RadialSymbol a = parse_symbol("3*r^-1 - r^3");
  CHECK(a.terms().size() == 2);
  CHECK(a.terms().front().power == doctest::Approx(-1.0));
  CHECK(a.terms().front().coeff == doctest::Approx(3.0));

  const RadialSymbol b = parse_symbol("1/2*r^-1 + 1/2*r");
  CHECK(b.terms().front().coeff == doctest::Approx(0.5));

  const RadialSymbol c = parse_symbol("r^2*log");
  CHECK(c.terms().front().log_exp == 1);

  const RadialSymbol d = parse_symbol("1");
  CHECK(d.terms().front().power == doctest::Approx(0.0));

  CHECK_THROWS_AS(parse_symbol("2*q^3"), SymbolParseError);
  CHECK_THROWS_AS(parse_symbol(""), SymbolParseError);
  try {
    parse_symbol("r^2 $ 3");
  } catch (const SymbolParseError& e) {
    CHECK(e.pos == 4);
  }
}

TEST_CASE("Mellin transform closed forms") {
  // r^0 at z=2 is 1/2; r^3 at z=5 is 1/8; r^-1 log r at z=4 is -1/9.
  CHECK(close(mellin_of_symbol(RadialSymbol::constant(1.0))(2.0), 0.5));
  CHECK(close(mellin_of_symbol(RadialSymbol::power(1.0, 3.0))(5.0), 0.125));
  CHECK(close(mellin_of_symbol(RadialSymbol::power_log(1.0, -1.0))(4.0),
              -1.0 / 9.0));
  // Quadrature twins for the same values.
  CHECK(std::abs(quad_mellin(RadialSymbol::power(1.0, 3.0), 5.0) - 0.125) <
        1e-11);
  CHECK(std::abs(quad_mellin(RadialSymbol::power_log(1.0, -1.0), 4.0) +
                 1.0 / 9.0) < 1e-11);
}

TEST_CASE("Mellin transform is linear") {
  const RadialSymbol f = RadialSymbol::power(1.0, 1.5) +
                         RadialSymbol::power_log(2.0, 0.25);
  const RadialSymbol g = RadialSymbol::power(1.0, -0.5);
  const double alpha = 2.5, beta = -1.25;
  const RadialSymbol combo = f.scaled(alpha) + g.scaled(beta);
  for (double z : {2.0, 3.7, 11.0}) {
    CHECK(close(mellin_of_symbol(combo)(z),
                alpha * mellin_of_symbol(f)(z) + beta * mellin_of_symbol(g)(z)));
  }
}

TEST_CASE("Mellin convolution closed forms") {
  // r * r^-1 = (r^-1 - r)/2, checked against the defining integral at 0.5.
  const RadialSymbol conv =
      mellin_convolve(RadialSymbol::power(1.0, 1.0), RadialSymbol::power(1.0, -1.0));
  const RadialSymbol expected =
      RadialSymbol::power(0.5, -1.0) + RadialSymbol::power(-0.5, 1.0);
  CHECK(conv.approx_equal(expected));
  CHECK(std::abs(quad_mellin_convolve(RadialSymbol::power(1.0, 1.0),
                                      RadialSymbol::power(1.0, -1.0), 0.5) -
                 conv(0.5)) < 1e-11);
  CHECK(conv(0.5) == doctest::Approx(0.75));

  // Equal powers pick up a log factor.
  const RadialSymbol same =
      mellin_convolve(RadialSymbol::power(1.0, 2.0), RadialSymbol::power(1.0, 2.0));
  CHECK(same.approx_equal(RadialSymbol::power_log(-1.0, 2.0)));

  // (r *_M r^3)^ at z=3 equals 1/(z+1) * 1/(z+3) = 1/24.
  const RadialSymbol conv13 =
      mellin_convolve(RadialSymbol::power(1.0, 1.0), RadialSymbol::power(1.0, 3.0));
  CHECK(close(mellin_of_symbol(conv13)(3.0), 1.0 / 24.0));

  CHECK_THROWS_AS(mellin_convolve(RadialSymbol::power_log(1.0, 1.0),
                                  RadialSymbol::power_log(1.0, 2.0)),
                  UnsupportedTermError);
  CHECK_THROWS_AS(mellin_convolve(RadialSymbol::power(1.0, 1.0),
                                  RadialSymbol::power_log(1.0, 1.0)),
                  UnsupportedTermError);
}

TEST_CASE("convolution theorem on random power pairs") {
  std::mt19937 rng(1234);
  std::uniform_real_distribution<double> p(-1.99, 6.0);
  for (int i = 0; i < 50; ++i) {
    const RadialSymbol f = RadialSymbol::power(1.0, p(rng));
    const RadialSymbol g = RadialSymbol::power(1.0, p(rng));
    const RadialSymbol conv = mellin_convolve(f, g);
    for (int z = 2; z <= 12; ++z) {
      const double lhs = mellin_of_symbol(conv)(z);
      const double rhs = mellin_of_symbol(f)(z) * mellin_of_symbol(g)(z);
      CHECK(std::abs(lhs - rhs) <= 1e-12 * (1.0 + std::abs(rhs)));
    }
  }
  // A log factor on one side, too.
  const RadialSymbol f = RadialSymbol::power(2.0, 1.0);
  const RadialSymbol g = RadialSymbol::power_log(1.0, 3.0);
  const RadialSymbol conv = mellin_convolve(f, g);
  for (int z = 2; z <= 12; ++z) {
    CHECK(close(mellin_of_symbol(conv)(z),
                mellin_of_symbol(f)(z) * mellin_of_symbol(g)(z), 1e-12));
  }
}

TEST_CASE("log-Gamma with sign tracking") {
  CHECK(log_gamma_signed(0.5).sign == 1);
  // Gamma(-0.5) = -2 sqrt(pi)
  const LogGamma neg = log_gamma_signed(-0.5);
  CHECK(neg.sign == -1);
  CHECK(std::exp(neg.log_abs) == doctest::Approx(2.0 * std::sqrt(M_PI)));
  // Gamma(-1.5) = 4 sqrt(pi)/3 > 0
  CHECK(log_gamma_signed(-1.5).sign == 1);
  CHECK_THROWS_AS(log_gamma_signed(0.0), PoleError);
  CHECK_THROWS_AS(log_gamma_signed(-3.0), PoleError);
}

TEST_CASE("Gamma ratio evaluation") {
  // Gamma(x)/Gamma(x+1) = 1/x with x=(z-1)/2: the ratio is 2/(z-1).
  GammaRatioTransform g;
  g.prefactor = 1.0;
  g.scale = 2.0;
  g.num_offsets = {-1.0};
  g.den_offsets = {1.0};
  CHECK(close(gamma_ratio_eval(g, 3.0), 1.0));
  CHECK(close(gamma_ratio_eval(g, 5.0), 0.5));

  // The canonical degree-(1,6) family at m=3 halves to (6 r^8 - 5 r^6)^.
  GammaRatioTransform fam;
  fam.prefactor = 0.5;
  fam.scale = 2.0;
  fam.num_offsets = {6.0, -2.0};
  fam.den_offsets = {-4.0, 10.0};
  const double expected = 6.0 / 16.0 - 5.0 / 14.0;
  CHECK(close(gamma_ratio_eval(fam, 8.0), expected, 1e-11));
  fam.prefactor = 1.0;
  CHECK(close(gamma_ratio_eval(fam, 8.0), 2.0 * expected, 1e-11));

  // m + k1 = 0 collapses the family to 2 k1/(z - k2).
  GammaRatioTransform collapse;
  collapse.scale = 2.0;
  collapse.num_offsets = {-3.0, 3.0};  // k2=-3, m+k1-k2 = 3
  collapse.den_offsets = {5.0, -3.0};  // 2k1-k2 = 5, m+k1+k2 = -3
  CHECK(close(gamma_ratio_eval(collapse, 2.0), 0.4));
}

TEST_CASE("Gamma ratio pole bookkeeping") {
  // Unmatched numerator pole of Gamma((z-4)/2) at z=4.
  GammaRatioTransform g;
  g.scale = 2.0;
  g.num_offsets = {-4.0, 5.0};
  g.den_offsets = {6.0, -3.0};
  CHECK_THROWS_AS(gamma_ratio_eval(g, 4.0), PoleError);
  CHECK(gamma_ratio_has_pole(g));

  // Unmatched denominator pole gives zero.
  GammaRatioTransform h;
  h.scale = 2.0;
  h.num_offsets = {1.0};
  h.den_offsets = {-2.0};
  CHECK(gamma_ratio_eval(h, 2.0) == 0.0);

  // Matched poles: Gamma((z-2)/2)/Gamma((z-4)/2) -> (z-4)/2 at z=2 is -1.
  GammaRatioTransform paired;
  paired.scale = 2.0;
  paired.num_offsets = {-2.0};
  paired.den_offsets = {-4.0};
  CHECK(close(gamma_ratio_eval(paired, 2.0), -1.0));
  CHECK_FALSE(gamma_ratio_has_pole(paired));
}

TEST_CASE("Gamma recurrence across the scale") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> off(-3.0, 6.0);
  std::uniform_int_distribution<int> scale(1, 4);
  for (int i = 0; i < 30; ++i) {
    GammaRatioTransform g;
    g.scale = 2.0 * scale(rng);
    g.num_offsets = {off(rng), off(rng)};
    g.den_offsets = {off(rng), off(rng)};
    for (double z = 2.0; z <= 40.0; z += 3.7) {
      double expected = 1.0;
      for (double a : g.num_offsets) expected *= (z + a);
      for (double b : g.den_offsets) expected /= (z + b);
      const double lhs = gamma_ratio_eval(g, z + g.scale) / gamma_ratio_eval(g, z);
      CHECK(std::abs(lhs - expected) <= 1e-11 * std::max(1.0, std::abs(expected)));
    }
  }
}

TEST_CASE("partial fractions of telescoping ratios") {
  // Degree (1,-3) at m=-1: exactly 2 r^3.
  GammaRatioTransform g;
  g.scale = 2.0;
  g.num_offsets = {-3.0, 3.0};
  g.den_offsets = {5.0, -3.0};
  const auto sym = gamma_ratio_to_partial_fractions(g);
  REQUIRE(sym.has_value());
  CHECK(sym->approx_equal(RadialSymbol::power(2.0, 3.0)));

  // Degree (1,6) at m=3: 12 r^8 - 10 r^6 at C=1, halving to 6 r^8 - 5 r^6.
  GammaRatioTransform fam;
  fam.scale = 2.0;
  fam.num_offsets = {6.0, -2.0};
  fam.den_offsets = {-4.0, 10.0};
  const auto f1 = gamma_ratio_to_partial_fractions(fam);
  REQUIRE(f1.has_value());
  CHECK(f1->approx_equal(RadialSymbol::power(12.0, 8.0) +
                         RadialSymbol::power(-10.0, 6.0)));
  fam.prefactor = 0.5;
  const auto f2 = gamma_ratio_to_partial_fractions(fam);
  REQUIRE(f2.has_value());
  CHECK(f2->approx_equal(RadialSymbol::power(6.0, 8.0) +
                         RadialSymbol::power(-5.0, 6.0)));

  // Degree (1,2) at m=1: 2 r^2 on the nose.
  GammaRatioTransform third;
  third.scale = 2.0;
  third.num_offsets = {2.0, 0.0};
  third.den_offsets = {0.0, 4.0};
  const auto f3 = gamma_ratio_to_partial_fractions(third);
  REQUIRE(f3.has_value());
  CHECK(f3->approx_equal(RadialSymbol::power(2.0, 2.0)));

  // Non-telescoping offsets stay Mellin-side.
  GammaRatioTransform irr;
  irr.scale = 6.0;
  irr.num_offsets = {-1.0, 4.0};
  irr.den_offsets = {7.0, 2.0};
  CHECK_FALSE(gamma_ratio_to_partial_fractions(irr).has_value());
}

TEST_CASE("partial fraction round trip") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> k1d(1, 4);
  std::uniform_int_distribution<int> nd(0, 2);
  for (int i = 0; i < 20; ++i) {
    // Random member of the always-rational family: m = (2n+1) k1.
    const int k1 = k1d(rng);
    const int n = nd(rng);
    const double m = (2 * n + 1) * k1;
    const int k2 = static_cast<int>(m) + k1 + 2 + (i % 3);
    GammaRatioTransform g;
    g.scale = 2.0 * k1;
    g.num_offsets = {static_cast<double>(k2), m + k1 - k2};
    g.den_offsets = {2.0 * k1 - k2, m + k1 + k2};
    const auto sym = gamma_ratio_to_partial_fractions(g);
    REQUIRE(sym.has_value());
    for (int z = 2; z <= 30; ++z) {
      const double lhs = gamma_ratio_eval(g, z);
      const double rhs = mellin_of_symbol(*sym)(z);
      CHECK(std::abs(lhs - rhs) <= 1e-11 * std::max(1.0, std::abs(lhs)));
    }
  }
}

TEST_CASE("boundedness classification of the canonical families") {
  CHECK(t_function_classify(TSide::Phi, 1, -3, -1.0).condition == 1);
  CHECK(t_function_classify(TSide::Phi, 1, 1, 0.0).condition == 2);
  CHECK(t_function_classify(TSide::Phi, 1, 6, 3.0).condition == 3);
  CHECK_FALSE(t_function_classify(TSide::Phi, 1, -4, 0.0).condition.has_value());
  CHECK_FALSE(t_function_classify(TSide::Phi, 1, 6, 2.0).condition.has_value());

  CHECK(t_function_classify(TSide::Psi, 1, -3, -1.0).condition == 1);
  CHECK(t_function_classify(TSide::Psi, 2, 1, 1.0).condition == 2);
  CHECK(t_function_classify(TSide::Psi, 1, 6, 3.0).condition == 3);
  CHECK_FALSE(t_function_classify(TSide::Psi, 2, 6, 4.0).condition.has_value());

  CHECK_THROWS_AS(t_function_classify(TSide::Phi, 0, 1, 0.0),
                  std::invalid_argument);
}

TEST_CASE("unbounded classification implies a pole in the half-plane") {
  for (int k1 = 1; k1 <= 4; ++k1) {
    for (int k2 = -6; k2 <= 8; ++k2) {
      for (int mi = -1; mi <= 7; ++mi) {
        const double m = mi;
        GammaRatioTransform g;
        g.scale = 2.0 * k1;
        g.num_offsets = {static_cast<double>(k2), m + k1 - k2};
        g.den_offsets = {2.0 * k1 - k2, m + k1 + k2};
        if (!t_function_classify(TSide::Phi, k1, k2, m).condition) {
          CHECK(gamma_ratio_has_pole(g));
        }
      }
    }
  }
}

TEST_CASE("monotonicity certificates") {
  const MonotoneCertificate f_inc =
      monotonicity_certificate(MonotoneKind::F, 2.0, 1.0, 2.1, 50.0, 200);
  CHECK(f_inc.pass);
  CHECK(f_inc.increasing);

  const MonotoneCertificate f_dec =
      monotonicity_certificate(MonotoneKind::F, -1.0, 0.5, 0.1, 50.0, 200);
  CHECK(f_dec.pass);
  CHECK_FALSE(f_dec.increasing);

  const MonotoneCertificate g_inc =
      monotonicity_certificate(MonotoneKind::G, 0.5, 1.0, -20.0, 0.4, 200);
  CHECK(g_inc.pass);
  CHECK(g_inc.increasing);

  const MonotoneCertificate g_dec =
      monotonicity_certificate(MonotoneKind::G, 2.5, 1.0, -20.0, 0.9, 200);
  CHECK(g_dec.pass);
  CHECK_FALSE(g_dec.increasing);

  CHECK_THROWS_AS(
      monotonicity_certificate(MonotoneKind::F, 1.0, -1.0, 2.0, 3.0, 10),
      std::invalid_argument);
}
