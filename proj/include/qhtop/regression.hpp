#pragma once

#include <string>
#include <vector>

#include "qhtop/theorems.hpp"

namespace qhtop {

/// A named instance with a known exact canonical form: operators, the
/// expected rank, and the expected rank-one coefficients (range index ->
/// coefficient). These pin down the machinery end to end at concrete values.
struct ReferenceInstance {
  std::string name;
  Space space = Space::Harmonic;
  MapKind kind = MapKind::Commutator;
  int k1 = 0, k2 = 0;
  RadialSymbol phi1, phi2, psi;  // psi ignored for commutators
  int expected_rank = 0;
  std::vector<CanonicalTerm> expected;  // index + coeff; partners unchecked
};

struct ReferenceResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

const std::vector<ReferenceInstance>& reference_instances();

/// Runs one instance: builds the map, requires margin vanishing, the exact
/// rank, and every canonical coefficient to rel_tol.
ReferenceResult run_reference_instance(const ReferenceInstance& inst,
                                       double rel_tol = 1e-9, int margin = 20);

std::vector<ReferenceResult> run_reference_suite(double rel_tol = 1e-9,
                                                 int margin = 20);

}  // namespace qhtop
