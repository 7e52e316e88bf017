#include "qhtop/regression.hpp"

#include <cmath>
#include <sstream>

namespace qhtop {

namespace {

RadialSymbol rp(double c, double p) { return RadialSymbol::power(c, p); }

std::vector<ReferenceInstance> build_instances() {
  std::vector<ReferenceInstance> out;

  // Harmonic commutators.
  out.push_back({"h-comm (1,r^-1)x(-3,r^3) = 1/2(1@z^2) - 1/2(zb^2@1)",
                 Space::Harmonic, MapKind::Commutator, 1, -3, rp(1, -1),
                 rp(1, 3), {}, 2,
                 {{0, 0.5, {}}, {-2, -0.5, {}}}});
  out.push_back({"h-comm (2,r^6)x(-1,3/r-r^3) = -19/30(1@zb - z@1)",
                 Space::Harmonic, MapKind::Commutator, 2, -1, rp(1, 6),
                 rp(3, -1) + rp(-1, 3), {}, 2,
                 {{0, -19.0 / 30.0, {}}, {1, 19.0 / 30.0, {}}}});
  out.push_back({"h-comm (1,r)x(2,2r^2) = -2/3(z@zb^2 - z^2@zb)",
                 Space::Harmonic, MapKind::Commutator, 1, 2, rp(1, 1),
                 rp(2, 2), {}, 2,
                 {{1, -2.0 / 3.0, {}}, {2, 2.0 / 3.0, {}}}});
  out.push_back(
      {"h-comm (1,r^3)x(6,6r^8-5r^6): three +/- pairs", Space::Harmonic,
       MapKind::Commutator, 1, 6, rp(1, 3), rp(6, 8) + rp(-5, 6), {}, 6,
       {{1, -5.0 / 24.0, {}},
        {6, 5.0 / 24.0, {}},
        {2, -27.0 / 196.0, {}},
        {5, 27.0 / 196.0, {}},
        {3, -1.0 / 21.0, {}},
        {4, 1.0 / 21.0, {}}}});

  // Harmonic generalized semicommutators.
  out.push_back({"h-gensemi (1,r^-1)(-3,r^3)-psi r^2 = 1/2(1@z^2)+1/6(zb@z)",
                 Space::Harmonic, MapKind::GenSemicommutator, 1, -3, rp(1, -1),
                 rp(1, 3), rp(1, 2), 2,
                 {{0, 0.5, {}}, {-1, 1.0 / 6.0, {}}}});
  out.push_back({"h-gensemi (2,r^6)(-1,3/r-r^3)-psi r+r^5 = 19/30(z@1)",
                 Space::Harmonic, MapKind::GenSemicommutator, 2, -1, rp(1, 6),
                 rp(3, -1) + rp(-1, 3), rp(1, 1) + rp(1, 5), 1,
                 {{1, 19.0 / 30.0, {}}}});
  out.push_back(
      {"h-gensemi (1,r)(2,2r^2)-psi 2r^3 = -(z@zb^2)-1/3(z^2@zb)",
       Space::Harmonic, MapKind::GenSemicommutator, 1, 2, rp(1, 1), rp(2, 2),
       rp(2, 3), 2, {{1, -1.0, {}}, {2, -1.0 / 3.0, {}}}});
  out.push_back({"h-gensemi (1,r^3)(6,6r^8-5r^6)-psi 7r^9-6r^7: six blocks",
                 Space::Harmonic, MapKind::GenSemicommutator, 1, 6, rp(1, 3),
                 rp(6, 8) + rp(-5, 6), rp(7, 9) + rp(-6, 7), 6,
                 {{1, -2.0 / 9.0, {}},
                  {6, -1.0 / 72.0, {}},
                  {2, -5.0 / 28.0, {}},
                  {5, -2.0 / 49.0, {}},
                  {3, -8.0 / 63.0, {}},
                  {4, -5.0 / 63.0, {}}}});

  // Bergman commutators.
  out.push_back({"b-comm (2,r^6)x(-1,3/r-r^3) = -3/2(z@1)", Space::Bergman,
                 MapKind::Commutator, 2, -1, rp(1, 6), rp(3, -1) + rp(-1, 3),
                 {}, 1, {{1, -1.5, {}}}});
  out.push_back({"b-comm (1,r^-1)x(-3,r^3) = -(1@z^2)", Space::Bergman,
                 MapKind::Commutator, 1, -3, rp(1, -1), rp(1, 3), {}, 1,
                 {{0, -1.0, {}}}});

  // Bergman generalized semicommutators (monomial family).
  out.push_back({"b-gensemi (2,r)(-2,r^2)-psi 4-3/r = 2(1@1)", Space::Bergman,
                 MapKind::GenSemicommutator, 2, -2, rp(1, 1), rp(1, 2),
                 rp(4, 0) + rp(-3, -1), 1, {{0, 2.0, {}}}});
  out.push_back({"b-gensemi (3,r^5)(-1,r^-1)-psi r^4 = -3/4(z^2@1)",
                 Space::Bergman, MapKind::GenSemicommutator, 3, -1, rp(1, 5),
                 rp(1, -1), rp(1, 4), 1, {{2, -0.75, {}}}});
  out.push_back({"b-gensemi (3,r^5)(-4,r^3)-psi 8r-7 = 4/3(1@z)+4/5(z@z^2)",
                 Space::Bergman, MapKind::GenSemicommutator, 3, -4, rp(1, 5),
                 rp(1, 3), rp(8, 1) + rp(-7, 0), 2,
                 {{0, 4.0 / 3.0, {}}, {1, 4.0 / 5.0, {}}}});
  out.push_back({"b-gensemi (1,r^-1)(-3,r^3)-psi r^2 = -(1@z^2)",
                 Space::Bergman, MapKind::GenSemicommutator, 1, -3, rp(1, -1),
                 rp(1, 3), rp(1, 2), 1, {{0, -1.0, {}}}});

  return out;
}

}  // namespace

const std::vector<ReferenceInstance>& reference_instances() {
  static const std::vector<ReferenceInstance> instances = build_instances();
  return instances;
}

ReferenceResult run_reference_instance(const ReferenceInstance& inst,
                                       double rel_tol, int margin) {
  ReferenceResult res;
  res.name = inst.name;

  const QHOperator t1(inst.space, inst.k1, inst.phi1);
  const QHOperator t2(inst.space, inst.k2, inst.phi2);
  CoeffMap map;
  if (inst.kind == MapKind::Commutator) {
    map = commutator_map(
        t1, t2, commutator_window(inst.space, inst.k1, inst.k2, margin));
  } else {
    map = gen_semicommutator_map(
        t1, t2, mellin_of_symbol(inst.psi),
        gensemi_window(inst.space, inst.k1, inst.k2, margin));
  }
  const SupportWindow w = SupportWindow::from_degrees(inst.k1, inst.k2);
  const RankReport report = detect_rank(map, w, inst.kind);

  std::ostringstream os;
  bool ok = true;
  if (!report.margin_ok) {
    ok = false;
    os << "margin violated (worst " << report.worst_margin << "); ";
  }
  if (report.rank != inst.expected_rank) {
    ok = false;
    os << "rank " << report.rank << " != " << inst.expected_rank << "; ";
  }
  for (const CanonicalTerm& want : inst.expected) {
    bool found = false;
    for (const CanonicalTerm& got : report.canonical) {
      if (got.index != want.index) continue;
      found = true;
      const double err = std::abs(got.coeff - want.coeff);
      if (err > rel_tol * std::max(1.0, std::abs(want.coeff))) {
        ok = false;
        os << "C_" << want.index << " = " << got.coeff << " != " << want.coeff
           << "; ";
      }
    }
    if (!found) {
      ok = false;
      os << "missing block at index " << want.index << "; ";
    }
  }
  res.pass = ok;
  res.detail = os.str();
  return res;
}

std::vector<ReferenceResult> run_reference_suite(double rel_tol, int margin) {
  std::vector<ReferenceResult> out;
  for (const ReferenceInstance& inst : reference_instances()) {
    out.push_back(run_reference_instance(inst, rel_tol, margin));
  }
  return out;
}

}  // namespace qhtop
