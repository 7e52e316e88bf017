#pragma once

#include <string>
#include <vector>

#include "qhtop/regression.hpp"
#include "qhtop/theorems.hpp"

namespace qhtop {

struct GridSpec {
  int k1_lo = -6, k1_hi = 6;
  int k2_lo = -6, k2_hi = 6;
  double m_lo = -1.0, m_hi = 7.0, m_step = 1.0;
};

/// Parses "k1=-6..6,k2=-6..6,m=-1..7".
GridSpec parse_grid_spec(const std::string& text);

struct CellRecord {
  std::string check;
  int k1 = 0, k2 = 0;
  double m = 0.0, m2 = 0.0;
  int condition = 0;
  bool constructible = false;
  bool pass = true;
  int predicted_rank = -1;
  int computed_rank = -1;
  std::string detail;
};

struct SweepSummary {
  std::string name;
  int cells = 0;
  int validated = 0;  // cells with a constructible instance actually computed
  int failed = 0;
  int odd_rank_count = 0;  // harmonic commutator sweeps only
  std::vector<CellRecord> records;

  bool pass() const { return failed == 0; }
  std::string first_failure() const;
};

// Classifier-versus-computation sweeps over the parameter grid.
SweepSummary sweep_h_commutator(const GridSpec& g, int margin = 20,
                                double tol = 1e-10);
SweepSummary sweep_h_gensemi(const GridSpec& g, int margin = 20,
                             double tol = 1e-10,
                             bool with_equivalence = true);
SweepSummary sweep_b_commutator(const GridSpec& g, int margin = 20,
                                double tol = 1e-10);
SweepSummary sweep_b_gensemi(const GridSpec& g, int margin = 20,
                             double tol = 1e-10);
SweepSummary sweep_cross_space(const GridSpec& g, int margin = 20,
                               double tol = 1e-10);

// Corollary verdicts against direct computation.
SweepSummary sweep_corollaries(int margin = 20, double tol = 1e-10);

// Identity (|l|+1) lambda_{k,l} = (|l+k|+1) lambda_{k,-l-k} on its grid.
SweepSummary sweep_lamre(double tol = 1e-11);

// Quadrature oracles against the closed forms.
SweepSummary sweep_oracle_mellin(int draws = 500, unsigned seed = 42);
SweepSummary sweep_oracle_projection(int draws = 300, unsigned seed = 43);

// Monotonicity certificates over randomized parameter draws.
SweepSummary sweep_monotonicity(int draws_per_case = 20, int grid_points = 200,
                                unsigned seed = 44);

// Perturbed symbols must lose finite rank at the window.
SweepSummary sweep_negative_control(int draws = 100, unsigned seed = 7,
                                    int margin = 20, double tol = 1e-10);

// Named instances with known exact canonical forms.
SweepSummary sweep_reference_instances(double rel_tol = 1e-9);

// The rank 0-versus-1 instance across the two spaces.
SweepSummary sweep_discrepancy(int margin = 20, double tol = 1e-10);

/// All sweeps at their default sizes, in a stable order.
std::vector<SweepSummary> run_all(const GridSpec& g, int margin = 20,
                                  double tol = 1e-10);

}  // namespace qhtop
