#include "qhtop/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace qhtop {

namespace {

constexpr double kTol = 1e-9;

bool near_zero(double x) { return std::abs(x) <= kTol; }

int sign_of(long long x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// Nontrivial default witness for conditions that admit every radial symbol.
RadialSymbol default_witness() {
  return RadialSymbol{{1.0, 2.0, 0}, {0.5, 0.0, 0}};
}

std::vector<int> to_sorted_vector(const std::set<int>& s) {
  return std::vector<int>(s.begin(), s.end());
}

void push_symbol(TheoremVerdict& v, const std::string& role,
                 MellinTransform t) {
  v.symbols.push_back({role, std::move(t)});
}

void note_boundary(TheoremVerdict& v) {
  if (std::abs(v.m + 1.0) <= kTol) {
    v.note = v.note.empty() ? "m = -1 boundary instance"
                            : v.note + "; m = -1 boundary instance";
  }
}

}  // namespace

const MellinTransform* TheoremVerdict::symbol(const std::string& role) const {
  for (const ConstructedSymbol& s : symbols) {
    if (s.role == role) return &s.transform;
  }
  return nullptr;
}

GammaRatioTransform phi_gamma_family(int k1, int k2, double m) {
  if (k1 == 0 || k2 == 0) {
    throw std::invalid_argument("Gamma family needs nonzero degrees");
  }
  const double K1 = std::abs(k1);
  const double K2 = sign_of(static_cast<long long>(k1) * k2) * std::abs(k2);
  GammaRatioTransform g;
  g.prefactor = 1.0;
  g.scale = 2.0 * K1;
  g.num_offsets = {K2, m + K1 - K2};
  g.den_offsets = {2.0 * K1 - K2, m + K1 + K2};
  return g;
}

GammaRatioTransform psi_gamma_family(int k1, int k2, double m) {
  if (k1 == 0 || k2 == 0) {
    throw std::invalid_argument("Gamma family needs nonzero degrees");
  }
  const double K1 = std::abs(k1);
  const double K2 = sign_of(static_cast<long long>(k1) * k2) * std::abs(k2);
  GammaRatioTransform g;
  g.prefactor = 1.0;
  g.scale = 2.0 * K1;
  g.num_offsets = {K1 + K2, m - K2};
  g.den_offsets = {K1 - K2, m + 2.0 * K1 + K2};
  return g;
}

TheoremVerdict classify_h_commutator(int k1, int k2, double m) {
  TheoremVerdict v;
  v.theorem = TheoremId::HCommute;
  v.space = Space::Harmonic;
  v.kind = MapKind::Commutator;
  v.k1 = k1;
  v.k2 = k2;
  v.m = m;
  if (m < -1.0 - kTol) throw std::invalid_argument("requires m >= -1");

  const long long prod = static_cast<long long>(k1) * k2;
  const int a1 = std::abs(k1), a2 = std::abs(k2);

  if (k1 == 0 && near_zero(m)) v.conditions.push_back(1);
  if (k2 == 0) v.conditions.push_back(2);
  if (k1 == 0 && k2 == 0) v.conditions.push_back(3);
  if (k1 == k2 && k1 != 0) v.conditions.push_back(4);
  if (prod == -1) v.conditions.push_back(5);
  if (prod < -1 && a2 >= 2 && near_zero(m + a1)) v.conditions.push_back(6);
  if (prod < -1 && a2 == 1) v.conditions.push_back(7);
  if (prod > 0 && a1 != a2) {
    if (a2 < m + a1 + 2 - kTol) {
      v.conditions.push_back(8);
    } else if (odd_multiple_index(m, a1)) {
      v.conditions.push_back(9);
    }
  }
  if (v.conditions.empty()) {
    v.finite_rank = false;
    return v;
  }
  v.finite_rank = true;
  note_boundary(v);

  switch (v.principal_condition()) {
    case 1:
    case 3:
      push_symbol(v, "phi", mellin_of_symbol(default_witness()));
      v.note += (v.note.empty() ? "" : "; ");
      v.note += "every radial symbol commutes; default witness";
      break;
    case 2:
      push_symbol(v, "phi", mellin_of_symbol(RadialSymbol::constant(1.0)));
      break;
    case 4:
      push_symbol(v, "phi", mellin_of_symbol(RadialSymbol::power(1.0, m)));
      break;
    default:
      push_symbol(v, "phi", MellinTransform(phi_gamma_family(k1, k2, m)));
      break;
  }

  if (v.principal_condition() <= 5) {
    v.predicted_rank = 0;
    v.range_exact = true;
    return v;
  }
  v.predicted_rank = (k1 + k2) % 2 != 0 ? a1 + a2 - 1 : a1 + a2 - 2;
  v.predicted_range =
      to_sorted_vector(SupportWindow::from_degrees(k1, k2).lambda1);
  v.range_exact = true;
  return v;
}

TheoremVerdict classify_h_gensemi(int k1, int k2, double m) {
  TheoremVerdict v;
  v.theorem = TheoremId::HGenSemi;
  v.space = Space::Harmonic;
  v.kind = MapKind::GenSemicommutator;
  v.k1 = k1;
  v.k2 = k2;
  v.m = m;
  if (m < -1.0 - kTol) throw std::invalid_argument("requires m >= -1");

  const long long prod = static_cast<long long>(k1) * k2;
  const int a1 = std::abs(k1), a2 = std::abs(k2);

  if (k1 == 0 && near_zero(m)) v.conditions.push_back(1);
  if (k2 == 0) v.conditions.push_back(2);
  if (k1 == 0 && k2 == 0) v.conditions.push_back(3);
  if (prod == -1) v.conditions.push_back(4);
  if (prod < -1 && a2 >= 2 && near_zero(m + a1)) v.conditions.push_back(5);
  if (prod < -1 && a2 == 1) v.conditions.push_back(6);
  if (prod > 0) {
    if (a2 < m + 2 - kTol) {
      v.conditions.push_back(7);
    } else if (odd_multiple_index(m, a1)) {
      v.conditions.push_back(8);
    }
  }
  if (v.conditions.empty()) {
    v.finite_rank = false;
    return v;
  }
  v.finite_rank = true;
  note_boundary(v);

  switch (v.principal_condition()) {
    case 1: {
      const RadialSymbol phi = default_witness();
      push_symbol(v, "phi", mellin_of_symbol(phi));
      push_symbol(v, "psi", mellin_of_symbol(phi));
      break;
    }
    case 2:
      push_symbol(v, "phi", mellin_of_symbol(RadialSymbol::constant(1.0)));
      push_symbol(v, "psi", mellin_of_symbol(RadialSymbol::power(1.0, m)));
      break;
    case 3: {
      const RadialSymbol phi = RadialSymbol::power(1.0, m + 1.0);
      push_symbol(v, "phi", mellin_of_symbol(phi));
      push_symbol(v, "psi", mellin_of_symbol(radial_product_psi(m, phi)));
      break;
    }
    default:
      push_symbol(v, "phi", MellinTransform(phi_gamma_family(k1, k2, m)));
      push_symbol(v, "psi", MellinTransform(psi_gamma_family(k1, k2, m)));
      break;
  }

  if (v.principal_condition() <= 4) {
    v.predicted_rank = 0;
    v.range_exact = true;
    return v;
  }
  v.predicted_rank = std::max({a1 - 1, a2 - 1, std::abs(k1 + k2) - 1});
  v.predicted_range =
      to_sorted_vector(SupportWindow::from_degrees(k1, k2).lambda2);
  v.range_exact = true;
  return v;
}

TheoremVerdict classify_b_commutator(int k1, int k2, double m) {
  TheoremVerdict v;
  v.theorem = TheoremId::BCommute;
  v.space = Space::Bergman;
  v.kind = MapKind::Commutator;
  v.k1 = k1;
  v.k2 = k2;
  v.m = m;
  if (m < -1.0 - kTol) throw std::invalid_argument("requires m >= -1");

  const long long prod = static_cast<long long>(k1) * k2;
  const int a1 = std::abs(k1), a2 = std::abs(k2);

  if (k1 == 0 && near_zero(m)) v.conditions.push_back(1);
  if (k2 == 0) v.conditions.push_back(2);
  if (k1 == 0 && k2 == 0) v.conditions.push_back(3);
  if (prod > 0) {
    if (a2 < m + a1 + 2 - kTol) {
      v.conditions.push_back(4);
    } else if (odd_multiple_index(m, a1)) {
      v.conditions.push_back(5);
    }
  }
  if (prod < 0 && a2 >= 2 && near_zero(m + a1)) v.conditions.push_back(6);
  if (prod < 0 && a2 == 1) v.conditions.push_back(7);
  if (v.conditions.empty()) {
    v.finite_rank = false;
    return v;
  }
  v.finite_rank = true;
  note_boundary(v);

  switch (v.principal_condition()) {
    case 1:
    case 3:
      push_symbol(v, "phi", mellin_of_symbol(default_witness()));
      break;
    case 2:
      push_symbol(v, "phi", mellin_of_symbol(RadialSymbol::constant(1.0)));
      break;
    default:
      push_symbol(v, "phi", MellinTransform(phi_gamma_family(k1, k2, m)));
      break;
  }

  if (v.principal_condition() <= 5) {
    v.predicted_rank = 0;
    v.range_exact = true;
    return v;
  }
  v.predicted_rank = 1;
  v.predicted_range = {std::max(k1, k2) - 1};
  v.range_exact = true;
  return v;
}

RadialSymbol radial_product_psi(double m, const RadialSymbol& phi) {
  std::vector<SymbolTerm> out;
  for (const SymbolTerm& t : phi.terms()) {
    const double q = t.power - m;
    if (t.log_exp == 0) {
      if (std::abs(q) <= kTol) {
        // int_r^1 dt/t = -log r
        out.push_back({t.coeff, m, 0});
        out.push_back({t.coeff * m, m, 1});
      } else {
        out.push_back({t.coeff * t.power / q, t.power, 0});
        out.push_back({-t.coeff * m / q, m, 0});
      }
    } else {
      if (std::abs(q) <= kTol) {
        throw UnsupportedTermError(
            "radial product identity needs a log^2 term here");
      }
      out.push_back({t.coeff * t.power / q, t.power, 1});
      out.push_back({t.coeff * m / (q * q), m, 0});
      out.push_back({-t.coeff * m / (q * q), t.power, 0});
    }
  }
  return RadialSymbol(std::move(out));
}

RadialSymbol bergman_psi(int k1, double m, int k2, const RadialSymbol& phi) {
  std::vector<SymbolTerm> out;
  const double c0 = m + k1;
  for (const SymbolTerm& t : phi.terms()) {
    out.push_back({t.coeff, t.power - k1, t.log_exp});  // phi / r^k1
    if (c0 == 0.0) continue;                            // integral term drops
    const double q = t.power - m - k1 - k2;
    if (t.log_exp == 0) {
      if (std::abs(q) <= kTol) {
        out.push_back({t.coeff * c0, m + k2, 1});
      } else {
        out.push_back({-t.coeff * c0 / q, m + k2, 0});
        out.push_back({t.coeff * c0 / q, t.power - k1, 0});
      }
    } else {
      if (std::abs(q) <= kTol) {
        throw UnsupportedTermError(
            "Bergman product identity needs a log^2 term here");
      }
      out.push_back({t.coeff * c0 / (q * q), m + k2, 0});
      out.push_back({-t.coeff * c0 / (q * q), t.power - k1, 0});
      out.push_back({t.coeff * c0 / q, t.power - k1, 1});
    }
  }
  return RadialSymbol(std::move(out));
}

TheoremVerdict classify_b_gensemi_monomial(int k1, double m1, int k2,
                                           double m2) {
  TheoremVerdict v;
  v.theorem = TheoremId::BGenSemiMonomial;
  v.space = Space::Bergman;
  v.kind = MapKind::GenSemicommutator;
  v.k1 = k1;
  v.k2 = k2;
  v.m = m1;
  v.m2 = m2;
  if (m1 < -1.0 - kTol || m2 < -1.0 - kTol) {
    throw std::invalid_argument("requires m1, m2 >= -1");
  }

  // Integrability of psi: (1) both powers survive, (2) the first collapses,
  // (3) the second collapses.
  const bool c1 = !near_zero(k1 + m1) && !near_zero(k2 - m2) &&
                  m1 + k2 >= -1.0 - kTol && m2 - k1 >= -1.0 - kTol;
  const bool c2 = near_zero(k1 + m1) && m2 - k1 >= -1.0 - kTol;
  const bool c3 = near_zero(k2 - m2) && m1 + k2 >= -1.0 - kTol;
  if (c1) v.conditions.push_back(1);
  if (c2) v.conditions.push_back(2);
  if (c3) v.conditions.push_back(3);
  if (v.conditions.empty()) {
    v.finite_rank = false;
    return v;
  }
  v.finite_rank = true;

  const RadialSymbol phi = RadialSymbol::power(1.0, m2);
  push_symbol(v, "phi", mellin_of_symbol(phi));
  push_symbol(v, "psi", mellin_of_symbol(bergman_psi(k1, m1, k2, phi)));

  v.range_exact = true;
  if (k1 + k2 >= 0) {
    if (k2 >= 0) {
      v.predicted_rank = 0;
    } else if (k2 == -1) {
      v.predicted_rank = (c2 || c3) ? 1 : 0;
      if (v.predicted_rank == 1) v.predicted_range = {k1 - 1};
    } else {  // k2 <= -2: only condition (1) is compatible here
      v.predicted_rank = -k2 - 1;
      for (int i = k1 + k2; i <= k1 - 2; ++i) v.predicted_range.push_back(i);
    }
  } else {
    if (k1 <= 0) {
      v.predicted_rank = 0;
    } else if (k1 == 1) {
      v.predicted_rank = c2 ? 1 : 0;
      if (v.predicted_rank == 1) v.predicted_range = {0};
    } else {
      v.predicted_rank = k1 - 1;
      for (int i = 0; i <= k1 - 2; ++i) v.predicted_range.push_back(i);
    }
  }
  return v;
}

namespace {

struct BuiltMaps {
  bool built = false;
  CoeffMap map;
  SupportWindow support;
  std::string why_not;
};

BuiltMaps build_map(const TheoremVerdict& v, int margin) {
  BuiltMaps out;
  const MellinTransform* phi = v.symbol("phi");
  if (phi == nullptr) {
    out.why_not = "no constructed symbol";
    return out;
  }
  const RadialSymbol first = RadialSymbol::power(1.0, v.m);
  const QHOperator t1(v.space, v.k1, first);
  const QHOperator t2(v.space, v.k2, *phi);
  out.support = SupportWindow::from_degrees(v.k1, v.k2);
  if (v.kind == MapKind::Commutator) {
    out.map = commutator_map(t1, t2,
                             commutator_window(v.space, v.k1, v.k2, margin));
  } else {
    const MellinTransform* psi = v.symbol("psi");
    if (psi == nullptr) {
      out.why_not = "no constructed psi";
      return out;
    }
    out.map = gen_semicommutator_map(
        t1, t2, *psi, gensemi_window(v.space, v.k1, v.k2, margin));
  }
  out.built = true;
  return out;
}

bool reconstruction_matches(const CoeffMap& map,
                            const std::vector<CanonicalTerm>& canonical,
                            double tol) {
  const CoeffMap rebuilt = reconstruct_from_canonical(
      canonical, map.space, map.net_degree, Window{map.lo, map.hi});
  double scale = 1.0;
  for (const auto& [s, c] : map.entries) scale = std::max(scale, std::abs(c));
  for (const auto& [s, c] : map.entries) {
    if (std::abs(c - rebuilt.at(s)) > tol * scale) return false;
  }
  return true;
}

}  // namespace

ValidationReport cross_validate(const TheoremVerdict& v, int margin,
                                double tol) {
  ValidationReport r;
  r.predicted_rank = v.predicted_rank;
  if (!v.finite_rank) {
    r.skipped = true;
    r.mismatch = "no admissible symbol; nothing to validate";
    return r;
  }
  const BuiltMaps built = build_map(v, margin);
  if (!built.built) {
    r.skipped = true;
    r.mismatch = built.why_not;
    return r;
  }
  r.constructible = true;
  r.report = detect_rank(built.map, built.support, v.kind, tol);
  r.computed_rank = r.report.rank;
  r.margin_ok = r.report.margin_ok;
  r.rank_ok = r.report.rank == v.predicted_rank;
  if (v.range_exact) {
    std::vector<int> predicted = v.predicted_range;
    std::sort(predicted.begin(), predicted.end());
    r.range_ok = r.report.range == predicted;
  } else {
    r.range_ok = r.report.range_in_lambda;
  }
  r.pairing_ok = r.report.pairing_ok;
  r.parity_ok = r.report.parity_ok;
  r.bound_ok = r.report.bound_ok;
  r.reconstruction_ok =
      reconstruction_matches(built.map, r.report.canonical, tol);
  if (!r.ok()) {
    std::ostringstream os;
    os << "k1=" << v.k1 << " k2=" << v.k2 << " m=" << v.m << " cond="
       << v.principal_condition() << ": ";
    if (!r.margin_ok) os << "margin violated (worst " << r.report.worst_margin << "); ";
    if (!r.rank_ok)
      os << "rank " << r.computed_rank << " != predicted " << v.predicted_rank
         << "; ";
    if (!r.range_ok) os << "range mismatch; ";
    if (!r.pairing_ok) os << "pairing failed; ";
    if (!r.parity_ok) os << "odd rank; ";
    if (!r.bound_ok) os << "bound exceeded; ";
    if (!r.reconstruction_ok) os << "canonical form does not rebuild map; ";
    r.mismatch = os.str();
  }
  return r;
}

RankEquivalence validate_rank_equivalence(const TheoremVerdict& v, int margin,
                                          double tol) {
  if (v.kind != MapKind::GenSemicommutator || !v.finite_rank) {
    RankEquivalence eq;
    eq.applicable = false;
    eq.note = "needs a finite-rank generalized semicommutator verdict";
    return eq;
  }
  const MellinTransform* phi = v.symbol("phi");
  const MellinTransform* psi = v.symbol("psi");
  if (phi == nullptr || psi == nullptr) {
    RankEquivalence eq;
    eq.applicable = false;
    eq.note = "no constructed symbols";
    return eq;
  }
  const QHOperator t1(v.space, v.k1, RadialSymbol::power(1.0, v.m));
  const QHOperator t2(v.space, v.k2, *phi);
  return rank_equivalence_check(t1, t2, *psi, margin, tol);
}

CrossSpaceReport cross_space_checks(int k1, int k2, double m, int margin,
                                    double tol) {
  CrossSpaceReport r;
  const TheoremVerdict h = classify_h_commutator(k1, k2, m);
  const TheoremVerdict b = classify_b_commutator(k1, k2, m);
  r.verdicts_agree = h.finite_rank == b.finite_rank;
  if (!r.verdicts_agree) {
    r.detail = "finite-rank classifications disagree";
    return r;
  }

  if (h.finite_rank) {
    // Same constructed symbol through both spaces: margin vanishing on one
    // space must imply it on the other.
    const MellinTransform* phi = h.symbol("phi");
    const QHOperator h1(Space::Harmonic, k1, RadialSymbol::power(1.0, m));
    const QHOperator h2(Space::Harmonic, k2, *phi);
    const QHOperator b1(Space::Bergman, k1, RadialSymbol::power(1.0, m));
    const QHOperator b2(Space::Bergman, k2, *phi);
    const SupportWindow w = SupportWindow::from_degrees(k1, k2);
    const RankReport hr = detect_rank(
        commutator_map(h1, h2, commutator_window(Space::Harmonic, k1, k2, margin)),
        w, MapKind::Commutator, tol);
    const RankReport br = detect_rank(
        commutator_map(b1, b2, commutator_window(Space::Bergman, k1, k2, margin)),
        w, MapKind::Commutator, tol);
    r.computed_agree = hr.margin_ok == br.margin_ok && hr.margin_ok;
    if (!r.computed_agree) r.detail = "computed margin vanishing disagrees";
  }

  const TheoremVerdict g = classify_h_gensemi(k1, k2, m);
  if (g.finite_rank && g.symbol("phi") != nullptr &&
      g.symbol("psi") != nullptr) {
    const QHOperator b1(Space::Bergman, k1, RadialSymbol::power(1.0, m));
    const QHOperator b2(Space::Bergman, k2, *g.symbol("phi"));
    const CoeffMap fwd = gen_semicommutator_map(
        b1, b2, *g.symbol("psi"), gensemi_window(Space::Bergman, k1, k2, margin));
    const CoeffMap rev = gen_semicommutator_map(
        b2, b1, *g.symbol("psi"), gensemi_window(Space::Bergman, k2, k1, margin));
    const RankReport rf = detect_rank(fwd, SupportWindow::from_degrees(k1, k2),
                                      MapKind::GenSemicommutator, tol);
    const RankReport rr = detect_rank(rev, SupportWindow::from_degrees(k2, k1),
                                      MapKind::GenSemicommutator, tol);
    r.gensemi_transfer = rf.margin_ok && rr.margin_ok;
    if (!r.gensemi_transfer) {
      r.detail = "harmonic product identity did not transfer to the Bergman space";
    }
  }
  return r;
}

DiscrepancyReport rank_discrepancy_instance(double m, int margin, double tol) {
  DiscrepancyReport out;
  const RadialSymbol phi =
      RadialSymbol::power((m + 1.0) / 2.0, -1.0) +
      RadialSymbol::power(-(m - 1.0) / 2.0, 1.0);
  const RadialSymbol one = RadialSymbol::constant(1.0);
  const MellinTransform psi = mellin_of_symbol(one);

  const QHOperator h1(Space::Harmonic, 1, RadialSymbol::power(1.0, m));
  const QHOperator h2(Space::Harmonic, -1, phi);
  const SupportWindow w = SupportWindow::from_degrees(1, -1);
  const RankReport h_comm = detect_rank(
      commutator_map(h1, h2, commutator_window(Space::Harmonic, 1, -1, margin)),
      w, MapKind::Commutator, tol);
  const RankReport h_prod = detect_rank(
      gen_semicommutator_map(h1, h2, psi,
                             gensemi_window(Space::Harmonic, 1, -1, margin)),
      w, MapKind::GenSemicommutator, tol);
  out.harmonic_commutator_zero = h_comm.margin_ok && h_comm.rank == 0;
  out.harmonic_gensemi_zero = h_prod.margin_ok && h_prod.rank == 0;

  const QHOperator b1(Space::Bergman, 1, RadialSymbol::power(1.0, m));
  const QHOperator b2(Space::Bergman, -1, phi);
  const CoeffMap b_comm =
      commutator_map(b1, b2, commutator_window(Space::Bergman, 1, -1, margin));
  const RankReport b_rep = detect_rank(b_comm, w, MapKind::Commutator, tol);
  out.bergman_rank_one = b_rep.margin_ok && b_rep.rank == 1;
  // -[T1, T2] = 1 (x) 1: one canonical block at index 0 with coefficient -1.
  out.bergman_form_exact =
      b_rep.canonical.size() == 1 && b_rep.canonical.front().index == 0 &&
      std::abs(b_rep.canonical.front().coeff + 1.0) <= 1e-12;

  const CoeffMap b_rev = gen_semicommutator_map(
      b2, b1, psi, gensemi_window(Space::Bergman, -1, 1, margin));
  const RankReport b_rev_rep = detect_rank(
      b_rev, SupportWindow::from_degrees(-1, 1), MapKind::GenSemicommutator, tol);
  out.bergman_reversed_zero = b_rev_rep.margin_ok && b_rev_rep.rank == 0;
  return out;
}

// ---------------------------------------------------------------------------
// Corollaries

namespace {

CorollaryVerdict make_verdict(std::string name) {
  CorollaryVerdict v;
  v.name = std::move(name);
  return v;
}

bool is_constant_symbol(const RadialSymbol& s) {
  return s.terms().size() == 1 && s.terms().front().log_exp == 0 &&
         std::abs(s.terms().front().power) <= kTol;
}

bool is_monomial(const RadialSymbol& s, double exponent) {
  return s.terms().size() == 1 && s.terms().front().log_exp == 0 &&
         std::abs(s.terms().front().power - exponent) <= kTol;
}

// phi = C r^a and psi = C r^b for one shared nonzero C.
bool shared_constant_monomials(const RadialSymbol& phi, double a,
                               const RadialSymbol& psi, double b) {
  if (!is_monomial(phi, a) || !is_monomial(psi, b)) return false;
  const double cphi = phi.terms().front().coeff;
  const double cpsi = psi.terms().front().coeff;
  return std::abs(cphi - cpsi) <= kTol * std::max(1.0, std::abs(cphi));
}

}  // namespace

CorollaryVerdict cor_radial_commutator(int k, const RadialSymbol& phi1) {
  CorollaryVerdict v = make_verdict("radial-commutator");
  v.finite_rank = (k == 0) || is_constant_symbol(phi1);
  v.predicted_rank = 0;
  return v;
}

CorollaryVerdict cor_equal_degree_commutator(int k, const RadialSymbol& phi1,
                                             const RadialSymbol& phi2) {
  if (k == 0) throw std::invalid_argument("needs k != 0");
  CorollaryVerdict v = make_verdict("equal-degree-commutator");
  v.finite_rank = phi1.proportional_to(phi2);
  v.predicted_rank = 0;
  return v;
}

CorollaryVerdict cor_opposite_degree_commutator(int k,
                                                const RadialSymbol& phi1,
                                                const RadialSymbol& phi2) {
  if (k == 0) throw std::invalid_argument("needs k != 0");
  CorollaryVerdict v = make_verdict("opposite-degree-commutator");
  v.predicted_rank = 0;
  if (std::abs(k) != 1) return v;
  const RadialSymbol conv = mellin_convolve(phi1, phi2);
  const RadialSymbol target =
      mellin_convolve(RadialSymbol::power(1.0, 1.0), RadialSymbol::power(1.0, -1.0));
  v.finite_rank = conv.proportional_to(target) || target.proportional_to(conv);
  return v;
}

CorollaryVerdict cor_monomial_commutator(bool conjugated, int k1, int k2,
                                         const RadialSymbol& phi) {
  if (!(k1 > 0 || k1 == -1)) throw std::invalid_argument("needs k1 > 0 or -1");
  CorollaryVerdict v = make_verdict(conjugated ? "monomial-commutator-conj"
                                               : "monomial-commutator");
  v.predicted_rank = 0;
  if (!conjugated) {
    v.finite_rank = k2 > -2 && !phi.is_zero() &&
                    phi.proportional_to(RadialSymbol::power(1.0, k2));
  } else {
    v.finite_rank = k2 < 2 && !phi.is_zero() &&
                    phi.proportional_to(RadialSymbol::power(1.0, -k2));
  }
  if (v.finite_rank) {
    const TheoremVerdict t = classify_h_commutator(conjugated ? -k1 : k1, k2,
                                                   static_cast<double>(k1));
    v.predicted_rank = t.predicted_rank;
    v.conditions = t.conditions;
  }
  return v;
}

CorollaryVerdict cor_monomial_pair_commutator(int k1, double m1, int k2,
                                              double m2) {
  if (k1 == 0 || k2 == 0) throw std::invalid_argument("needs k1 k2 != 0");
  CorollaryVerdict v = make_verdict("monomial-pair-commutator");
  if (k1 == k2 && std::abs(m1 - m2) <= kTol) v.conditions.push_back(1);
  if (std::abs(k1 - m1) <= kTol && std::abs(k2 - m2) <= kTol)
    v.conditions.push_back(2);
  if (std::abs(k1 + m1) <= kTol && std::abs(k2 + m2) <= kTol)
    v.conditions.push_back(3);
  v.finite_rank = !v.conditions.empty();
  if (v.finite_rank) {
    const TheoremVerdict t = classify_h_commutator(k1, k2, m1);
    v.predicted_rank = t.finite_rank ? t.predicted_rank : 0;
  }
  return v;
}

CorollaryVerdict cor_radial_gensemi(const RadialSymbol& phi1, int k,
                                    const RadialSymbol& phi2,
                                    const RadialSymbol& psi) {
  if (is_constant_symbol(phi1)) {
    throw std::invalid_argument("needs a nonconstant phi1");
  }
  CorollaryVerdict v = make_verdict("radial-gensemi");
  v.predicted_rank = 0;
  if (k != 0) return v;
  const RadialSymbol lhs = mellin_convolve(RadialSymbol::constant(1.0), psi);
  const RadialSymbol rhs = mellin_convolve(phi1, phi2);
  v.finite_rank = lhs.approx_equal(rhs, 1e-10);
  return v;
}

CorollaryVerdict cor_opposite_degree_gensemi(int k, const RadialSymbol& phi1,
                                             const RadialSymbol& phi2,
                                             const RadialSymbol& psi) {
  if (k == 0) throw std::invalid_argument("needs k != 0");
  CorollaryVerdict v = make_verdict("opposite-degree-gensemi");
  v.predicted_rank = 0;
  if (std::abs(k) != 1) return v;
  if (!is_constant_symbol(psi)) return v;
  const double c = psi.terms().front().coeff;
  const RadialSymbol conv = mellin_convolve(phi1, phi2);
  const RadialSymbol target =
      mellin_convolve(RadialSymbol::power(1.0, 1.0), RadialSymbol::power(1.0, -1.0))
          .scaled(c);
  v.finite_rank = conv.approx_equal(target, 1e-10);
  return v;
}

CorollaryVerdict cor_monomial_gensemi(bool conjugated, int k1, int k2,
                                      const RadialSymbol& phi,
                                      const RadialSymbol& psi) {
  if (!(k1 > 0 || k1 == -1)) throw std::invalid_argument("needs k1 > 0 or -1");
  CorollaryVerdict v = make_verdict(conjugated ? "monomial-gensemi-conj"
                                               : "monomial-gensemi");
  if (!conjugated) {
    v.finite_rank = k2 > std::max(-2, -k1 - 2) &&
                    shared_constant_monomials(phi, k2, psi, k1 + k2);
  } else {
    v.finite_rank = k2 < std::min(2, k1 + 2) &&
                    shared_constant_monomials(phi, -k2, psi, k1 - k2);
  }
  if (v.finite_rank) {
    const TheoremVerdict t = classify_h_gensemi(conjugated ? -k1 : k1, k2,
                                                static_cast<double>(k1));
    v.predicted_rank = t.finite_rank ? t.predicted_rank : 0;
  }
  return v;
}

CorollaryVerdict cor_monomial_pair_gensemi(int k1, double m1, int k2,
                                           double m2) {
  if (k1 == 0 || k2 == 0) throw std::invalid_argument("needs k1 k2 != 0");
  CorollaryVerdict v = make_verdict("monomial-pair-gensemi");
  const int a1 = std::abs(k1);
  if (k1 == k2 && std::abs(m1 - m2) <= kTol && a1 < m1 + 2 - kTol) {
    v.conditions.push_back(1);
    const RadialSymbol psi =
        RadialSymbol::power((m1 + a1) / (2.0 * a1), m1 + a1) +
        RadialSymbol::power(-(m1 - a1) / (2.0 * a1), m1 - a1);
    v.symbols.push_back({"psi", mellin_of_symbol(psi)});
  }
  if (std::abs(k1 - m1) <= kTol && std::abs(k2 - m2) <= kTol &&
      k1 + k2 != -2) {
    v.conditions.push_back(2);
    if (v.symbols.empty()) {
      v.symbols.push_back(
          {"psi", mellin_of_symbol(RadialSymbol::power(1.0, k1 + k2))});
    }
  }
  if (std::abs(k1 + m1) <= kTol && std::abs(k2 + m2) <= kTol &&
      k1 + k2 != 2) {
    v.conditions.push_back(3);
    if (v.symbols.empty()) {
      v.symbols.push_back(
          {"psi", mellin_of_symbol(RadialSymbol::power(1.0, -k1 - k2))});
    }
  }
  v.finite_rank = !v.conditions.empty();
  if (v.finite_rank) {
    const TheoremVerdict t = classify_h_gensemi(k1, k2, m1);
    v.predicted_rank = t.finite_rank ? t.predicted_rank : 0;
  }
  return v;
}

CorollaryVerdict cor_semicommutator(int k1, double m, int k2,
                                    const RadialSymbol& phi) {
  if (k1 == 0 || k2 == 0) throw std::invalid_argument("needs k1 k2 != 0");
  if (m < -1.0 - kTol) throw std::invalid_argument("requires m >= -1");
  CorollaryVerdict v = make_verdict("semicommutator");
  if (std::abs(m - k1) <= kTol && k2 > std::max(-2, -k1 - 2) &&
      is_monomial(phi, k2) &&
      std::abs(phi.terms().front().coeff - 1.0) <= kTol) {
    v.conditions.push_back(1);
  }
  if (std::abs(m + k1) <= kTol && k2 < std::min(2, -k1 + 2) &&
      is_monomial(phi, -k2) &&
      std::abs(phi.terms().front().coeff - 1.0) <= kTol) {
    v.conditions.push_back(2);
  }
  v.finite_rank = !v.conditions.empty();
  if (v.finite_rank) {
    const TheoremVerdict t = classify_h_gensemi(k1, k2, m);
    v.predicted_rank = t.finite_rank ? t.predicted_rank : 0;
  }
  return v;
}

}  // namespace qhtop
