#include <cmath>

#include "doctest.h"
#include "qhtop/regression.hpp"
#include "qhtop/theorems.hpp"
#include "qhtop/verify.hpp"

using namespace qhtop;

TEST_CASE("harmonic commutator classification") {
  // Unit opposite degrees: the balancing symbol, rank 0.
  const TheoremVerdict c5 = classify_h_commutator(1, -1, 2.0);
  CHECK(c5.finite_rank);
  CHECK(c5.principal_condition() == 5);
  CHECK(c5.predicted_rank == 0);
  const RadialSymbol* phi5 = c5.symbol("phi")->symbol_witness();
  REQUIRE(phi5 != nullptr);
  // (m+1)/2 r^-1 - (m-1)/2 r up to the family constant.
  const RadialSymbol display =
      RadialSymbol::power(1.5, -1.0) + RadialSymbol::power(-0.5, 1.0);
  CHECK(phi5->proportional_to(display));

  // Degree (1,-3) at the boundary m=-1: r^3 family, rank 2.
  const TheoremVerdict c6 = classify_h_commutator(1, -3, -1.0);
  CHECK(c6.principal_condition() == 6);
  CHECK(c6.predicted_rank == 2);
  CHECK(c6.predicted_range == std::vector<int>{-2, 0});
  REQUIRE(c6.symbol("phi")->symbol_witness() != nullptr);
  CHECK(c6.symbol("phi")->symbol_witness()->proportional_to(
      RadialSymbol::power(1.0, 3.0)));
  CHECK(c6.note.find("m = -1") != std::string::npos);

  // Degree (1,6) at m=3: the odd-multiple product family, rank 6.
  const TheoremVerdict c9 = classify_h_commutator(1, 6, 3.0);
  CHECK(c9.principal_condition() == 9);
  CHECK(c9.predicted_rank == 6);
  CHECK(c9.predicted_range == std::vector<int>{1, 2, 3, 4, 5, 6});
  REQUIRE(c9.symbol("phi")->symbol_witness() != nullptr);
  CHECK(c9.symbol("phi")->symbol_witness()->proportional_to(
      RadialSymbol::power(6.0, 8.0) + RadialSymbol::power(-5.0, 6.0)));

  // No condition: radial against a twisted symbol.
  CHECK_FALSE(classify_h_commutator(0, 5, 2.0).finite_rank);
  // Opposite large equal degrees: no admissible symbol.
  CHECK_FALSE(classify_h_commutator(2, -2, 1.0).finite_rank);
  // Odd-multiple gate: m must be an odd multiple of |k1|.
  CHECK_FALSE(classify_h_commutator(1, 6, 2.0).finite_rank);

  // Overlapping degenerate conditions are all listed.
  const TheoremVerdict trivial = classify_h_commutator(0, 0, 0.0);
  CHECK(trivial.conditions == std::vector<int>{1, 2, 3});
}

TEST_CASE("harmonic gensemi classification") {
  const TheoremVerdict c5 = classify_h_gensemi(1, -3, -1.0);
  CHECK(c5.principal_condition() == 5);
  CHECK(c5.predicted_rank == 2);
  CHECK(c5.predicted_range == std::vector<int>{-1, 0});
  CHECK(c5.symbol("phi")->symbol_witness()->proportional_to(
      RadialSymbol::power(1.0, 3.0)));
  CHECK(c5.symbol("psi")->symbol_witness()->proportional_to(
      RadialSymbol::power(1.0, 2.0)));

  const TheoremVerdict c6 = classify_h_gensemi(2, -1, 6.0);
  CHECK(c6.principal_condition() == 6);
  CHECK(c6.predicted_rank == 1);
  REQUIRE(c6.symbol("phi")->symbol_witness() != nullptr);
  CHECK(c6.symbol("phi")->symbol_witness()->proportional_to(
      RadialSymbol::power(3.0, -1.0) + RadialSymbol::power(-1.0, 3.0)));
  CHECK(c6.symbol("psi")->symbol_witness()->proportional_to(
      RadialSymbol::power(1.0, 1.0) + RadialSymbol::power(1.0, 5.0)));

  const TheoremVerdict c8 = classify_h_gensemi(1, 6, 3.0);
  CHECK(c8.principal_condition() == 8);
  CHECK(c8.predicted_rank == 6);
  CHECK(c8.symbol("phi")->symbol_witness()->proportional_to(
      RadialSymbol::power(6.0, 8.0) + RadialSymbol::power(-5.0, 6.0)));
  CHECK(c8.symbol("psi")->symbol_witness()->proportional_to(
      RadialSymbol::power(7.0, 9.0) + RadialSymbol::power(-6.0, 7.0)));

  // phi and psi must share one constant: check against the raw pair by
  // dividing out the display normalization.
  const double phi_lead = c8.symbol("phi")->symbol_witness()->terms().back().coeff;
  const double psi_lead = c8.symbol("psi")->symbol_witness()->terms().back().coeff;
  CHECK(phi_lead / 6.0 == doctest::Approx(psi_lead / 7.0));

  // The commutator band without the product identity: m+2 <= |k2| < m+|k1|+2
  // and m not an odd multiple of |k1|.
  CHECK(classify_h_commutator(3, 2, 0.0).finite_rank);
  CHECK_FALSE(classify_h_gensemi(3, 2, 0.0).finite_rank);
}

TEST_CASE("Bergman commutator classification") {
  const TheoremVerdict c7 = classify_b_commutator(2, -1, 6.0);
  CHECK(c7.principal_condition() == 7);
  CHECK(c7.predicted_rank == 1);
  CHECK(c7.predicted_range == std::vector<int>{1});

  const TheoremVerdict c6 = classify_b_commutator(1, -3, -1.0);
  CHECK(c6.principal_condition() == 6);
  CHECK(c6.predicted_rank == 1);
  CHECK(c6.predicted_range == std::vector<int>{0});

  const TheoremVerdict c4 = classify_b_commutator(1, 2, 0.0);
  CHECK(c4.principal_condition() == 4);
  CHECK(c4.predicted_rank == 0);

  // Same-degree case collapses to the monomial family.
  const TheoremVerdict same = classify_b_commutator(2, 2, 1.0);
  CHECK(same.principal_condition() == 4);
  REQUIRE(same.symbol("phi")->symbol_witness() != nullptr);
  CHECK(same.symbol("phi")->symbol_witness()->proportional_to(
      RadialSymbol::power(1.0, 1.0)));
}

TEST_CASE("Bergman product symbol") {
  CHECK(bergman_psi(2, 1.0, -2, RadialSymbol::power(1.0, 2.0))
            .approx_equal(RadialSymbol::power(4.0, 0.0) +
                          RadialSymbol::power(-3.0, -1.0)));
  CHECK(bergman_psi(3, 5.0, -1, RadialSymbol::power(1.0, -1.0))
            .approx_equal(RadialSymbol::power(1.0, 4.0)));
  // m + k1 = 0 drops the integral term: psi = phi / r^k1 exactly.
  CHECK(bergman_psi(2, -2.0, 3, RadialSymbol::power(5.0, 4.0))
            .approx_equal(RadialSymbol::power(5.0, 2.0)));
  // Colliding exponents leave a log factor: degrees (1,-2), m1 = 1, phi = 1
  // has m1+k2 = -1 = m2-k1, so psi = r^-1 (1 + 2 log r).
  const RadialSymbol log_case = bergman_psi(1, 1.0, -2, RadialSymbol::constant(1.0));
  CHECK(log_case.approx_equal(RadialSymbol::power(1.0, -1.0) +
                              RadialSymbol::power_log(2.0, -1.0)));
}

TEST_CASE("Bergman monomial gensemi classification") {
  // (3, r^5)(-4, r^3): psi = 8r - 7, rank k1 - 1 = 2 on {1, z}.
  const TheoremVerdict v = classify_b_gensemi_monomial(3, 5.0, -4, 3.0);
  CHECK(v.finite_rank);
  CHECK(v.conditions == std::vector<int>{1});
  CHECK(v.predicted_rank == 2);
  CHECK(v.predicted_range == std::vector<int>{0, 1});
  CHECK(v.symbol("psi")->symbol_witness()->approx_equal(
      RadialSymbol::power(8.0, 1.0) + RadialSymbol::power(-7.0, 0.0)));

  // (2, r)(-2, r^2): psi = 4 - 3/r, rank -k2-1 = 1 on {1}.
  const TheoremVerdict u = classify_b_gensemi_monomial(2, 1.0, -2, 2.0);
  CHECK(u.predicted_rank == 1);
  CHECK(u.predicted_range == std::vector<int>{0});

  // Non-integrable psi: both exponents would collide below the floor.
  const TheoremVerdict bad = classify_b_gensemi_monomial(1, -1.0, -1, -1.0);
  CHECK_FALSE(bad.finite_rank);

  // Nonnegative k2 always closes with rank 0.
  const TheoremVerdict quiet = classify_b_gensemi_monomial(2, 1.0, 3, 2.0);
  CHECK(quiet.finite_rank);
  CHECK(quiet.predicted_rank == 0);
}

TEST_CASE("cross validation agrees on marquee instances") {
  const ValidationReport a = cross_validate(classify_h_commutator(1, -3, -1.0));
  CHECK(a.ok());
  CHECK(a.computed_rank == 2);

  const ValidationReport b = cross_validate(classify_h_gensemi(1, 6, 3.0));
  CHECK(b.ok());
  CHECK(b.computed_rank == 6);

  const ValidationReport c = cross_validate(classify_b_commutator(2, -1, 6.0));
  CHECK(c.ok());
  CHECK(c.computed_rank == 1);

  const ValidationReport d =
      cross_validate(classify_b_gensemi_monomial(3, 5.0, -4, 3.0));
  CHECK(d.ok());
  CHECK(d.computed_rank == 2);

  // Rank-0 verdicts must produce genuinely zero maps.
  const ValidationReport e = cross_validate(classify_h_commutator(1, -1, 0.5));
  CHECK(e.ok());
  CHECK(e.computed_rank == 0);
}

TEST_CASE("rank equivalence on a gensemi verdict") {
  const RankEquivalence eq =
      validate_rank_equivalence(classify_h_gensemi(1, -3, -1.0));
  CHECK(eq.applicable);
  CHECK(eq.ranks_equal);
  CHECK(eq.rank_forward == 2);
  CHECK(eq.commutator_bounded);
}

TEST_CASE("cross-space agreement and the rank discrepancy") {
  CHECK(cross_space_checks(1, -3, -1.0).ok());
  CHECK(cross_space_checks(2, -1, 6.0).ok());
  CHECK(cross_space_checks(4, 4, 2.0).ok());
  CHECK(cross_space_checks(0, 3, 1.0).ok());

  const DiscrepancyReport d = rank_discrepancy_instance(0.0);
  CHECK(d.harmonic_commutator_zero);
  CHECK(d.harmonic_gensemi_zero);
  CHECK(d.bergman_rank_one);
  CHECK(d.bergman_form_exact);
  CHECK(d.bergman_reversed_zero);
  CHECK(d.ok());
  CHECK(rank_discrepancy_instance(2.0).ok());
}

TEST_CASE("corollary verdicts") {
  const RadialSymbol r2 = RadialSymbol::power(1.0, 2.0);

  CHECK(cor_radial_commutator(0, r2).finite_rank);
  CHECK_FALSE(cor_radial_commutator(3, r2).finite_rank);
  CHECK(cor_radial_commutator(3, RadialSymbol::constant(4.0)).finite_rank);

  // Monomial pair: (2,2,5,5) matches the exponent condition.
  const CorollaryVerdict comr = cor_monomial_pair_commutator(2, 2.0, 5, 5.0);
  CHECK(comr.finite_rank);
  CHECK(comr.conditions == std::vector<int>{2});
  CHECK_FALSE(cor_monomial_pair_commutator(2, 2.0, 5, 4.0).finite_rank);

  // Equal degree and exponent: psi is the two-power balance.
  const CorollaryVerdict mono = cor_monomial_pair_gensemi(2, 1.0, 2, 1.0);
  CHECK(mono.finite_rank);
  CHECK(mono.conditions == std::vector<int>{1});
  REQUIRE_FALSE(mono.symbols.empty());
  CHECK(mono.symbols.front().transform.symbol_witness()->approx_equal(
      RadialSymbol::power(0.75, 3.0) + RadialSymbol::power(0.25, -1.0)));

  // Semicommutator characterization.
  CHECK(cor_semicommutator(1, 1.0, 3, RadialSymbol::power(1.0, 3.0)).finite_rank);
  CHECK_FALSE(
      cor_semicommutator(1, 0.5, 3, RadialSymbol::power(1.0, 3.0)).finite_rank);
  CHECK(cor_semicommutator(-2, 2.0, 1, RadialSymbol::power(1.0, -1.0)).finite_rank);
}

TEST_CASE("classifier symbols break under perturbation") {
  // Negative direction: adding 0.1 r^{m+1} to the constructed symbol must
  // destroy margin vanishing.
  const TheoremVerdict v = classify_h_commutator(1, -3, -1.0);
  const RadialSymbol phi = *v.symbol("phi")->symbol_witness();
  const RadialSymbol perturbed = phi + RadialSymbol::power(0.1, 0.0);
  const QHOperator t1(Space::Harmonic, 1, RadialSymbol::power(1.0, -1.0));
  const QHOperator t2(Space::Harmonic, -3, perturbed);
  const RankReport r = detect_rank(
      commutator_map(t1, t2, commutator_window(Space::Harmonic, 1, -3, 20)),
      SupportWindow::from_degrees(1, -3), MapKind::Commutator);
  CHECK_FALSE(r.margin_ok);
}

TEST_CASE("reference instances all reproduce") {
  for (const ReferenceResult& r : run_reference_suite()) {
    INFO(r.name, ": ", r.detail);
    CHECK(r.pass);
  }
}

TEST_CASE("small grid sweeps stay green") {
  GridSpec g;
  g.k1_lo = -3;
  g.k1_hi = 3;
  g.k2_lo = -3;
  g.k2_hi = 3;
  g.m_lo = -1.0;
  g.m_hi = 3.0;
  const SweepSummary hc = sweep_h_commutator(g);
  INFO(hc.first_failure());
  CHECK(hc.pass());
  CHECK(hc.odd_rank_count == 0);
  const SweepSummary hg = sweep_h_gensemi(g);
  INFO(hg.first_failure());
  CHECK(hg.pass());
  const SweepSummary bc = sweep_b_commutator(g);
  INFO(bc.first_failure());
  CHECK(bc.pass());
  const SweepSummary bg = sweep_b_gensemi(g);
  INFO(bg.first_failure());
  CHECK(bg.pass());
  const SweepSummary cs = sweep_cross_space(g);
  INFO(cs.first_failure());
  CHECK(cs.pass());
}

TEST_CASE("cross validation rejects doctored predictions") {
  TheoremVerdict wrong_rank = classify_h_commutator(1, -3, -1.0);
  wrong_rank.predicted_rank = 4;
  CHECK_FALSE(cross_validate(wrong_rank).ok());

  TheoremVerdict wrong_range = classify_h_commutator(1, -3, -1.0);
  wrong_range.predicted_range = {0, 1};
  CHECK_FALSE(cross_validate(wrong_range).ok());
}

TEST_CASE("irrational Gamma-side symbols validate through evaluation alone") {
  // Degrees (3,-1): the symbol family stays Mellin-side (no closed form),
  // and the commutator still comes out with rank |k1|+|k2|-2 = 2.
  const TheoremVerdict v = classify_h_commutator(3, -1, 0.0);
  CHECK(v.principal_condition() == 7);
  CHECK(v.symbol("phi")->symbol_witness() == nullptr);
  CHECK(v.symbol("phi")->gamma_side() != nullptr);
  const ValidationReport r = cross_validate(v);
  CHECK(r.ok());
  CHECK(r.computed_rank == 2);

  // Same family on the Bergman space: rank 1 at z^{max(k1,k2)-1}.
  const TheoremVerdict b = classify_b_commutator(3, -1, 0.0);
  const ValidationReport rb = cross_validate(b);
  CHECK(rb.ok());
  CHECK(rb.computed_rank == 1);
  CHECK(rb.report.range == std::vector<int>{2});
}

TEST_CASE("conjugate-monomial corollary variants") {
  // [T_{e^{-2i t} r^2}, T_{e^{ik2 t} phi}]: k2 < 2 with phi = C r^{-k2}.
  CHECK(cor_monomial_commutator(true, 2, -1, RadialSymbol::power(2.0, 1.0))
            .finite_rank);
  CHECK_FALSE(cor_monomial_commutator(true, 2, -1, RadialSymbol::power(1.0, 2.0))
                  .finite_rank);
  CHECK_FALSE(cor_monomial_commutator(true, 2, 3, RadialSymbol::power(1.0, 3.0))
                  .finite_rank);

  // Products need the matched psi with the same constant.
  CHECK(cor_monomial_gensemi(false, 2, 1, RadialSymbol::power(3.0, 1.0),
                             RadialSymbol::power(3.0, 3.0))
            .finite_rank);
  CHECK_FALSE(cor_monomial_gensemi(false, 2, 1, RadialSymbol::power(3.0, 1.0),
                                   RadialSymbol::power(1.0, 3.0))
                  .finite_rank);
  CHECK(cor_monomial_gensemi(true, 2, 1, RadialSymbol::power(1.0, -1.0),
                             RadialSymbol::power(1.0, 1.0))
            .finite_rank);

  // Radial products demand degree zero.
  CHECK_FALSE(cor_radial_gensemi(RadialSymbol::power(1.0, 2.0), 3,
                                 RadialSymbol::power(1.0, 3.0),
                                 RadialSymbol::power(1.0, 2.0))
                  .finite_rank);
}

TEST_CASE("corollary sweep agrees with direct computation") {
  const SweepSummary s = sweep_corollaries();
  INFO(s.first_failure());
  CHECK(s.pass());
}

TEST_CASE("fractional exponents sweep cleanly") {
  // The classifications accept any real m >= -1; quarter-integer steps
  // exercise the Gamma families away from every telescoping coincidence.
  GridSpec g;
  g.k1_lo = -3;
  g.k1_hi = 3;
  g.k2_lo = -3;
  g.k2_hi = 3;
  g.m_lo = -1.0;
  g.m_hi = 2.0;
  g.m_step = 0.75;
  const SweepSummary hc = sweep_h_commutator(g);
  INFO(hc.first_failure());
  CHECK(hc.pass());
  CHECK(hc.odd_rank_count == 0);
  const SweepSummary hg = sweep_h_gensemi(g);
  INFO(hg.first_failure());
  CHECK(hg.pass());
  const SweepSummary bg = sweep_b_gensemi(g);
  INFO(bg.first_failure());
  CHECK(bg.pass());

  // Half-integer exponent collision in the Bergman product identity:
  // m1 + k2 = m2 - k1 with both halves.
  const TheoremVerdict log_cell = classify_b_gensemi_monomial(2, 1.5, -1, 2.5);
  CHECK(log_cell.finite_rank);
  CHECK(log_cell.symbol("psi")->symbol_witness()->has_log());
  CHECK(cross_validate(log_cell).ok());
}

TEST_CASE("grid spec parsing") {
  const GridSpec g = parse_grid_spec("k1=-6..6,k2=-2..2,m=-1..7:0.5");
  CHECK(g.k1_lo == -6);
  CHECK(g.k1_hi == 6);
  CHECK(g.k2_lo == -2);
  CHECK(g.k2_hi == 2);
  CHECK(g.m_lo == doctest::Approx(-1.0));
  CHECK(g.m_hi == doctest::Approx(7.0));
  CHECK(g.m_step == doctest::Approx(0.5));
  CHECK_THROWS_AS(parse_grid_spec("k1=1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid_spec("q=1..2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_grid_spec("m=1..2:0"), std::invalid_argument);
}
