#include "qhtop/rank.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace qhtop {

SupportWindow SupportWindow::from_degrees(int k1, int k2) {
  SupportWindow w;
  w.k1 = k1;
  w.k2 = k2;
  w.N1 = std::max({0, -k1, -k2, -k1 - k2});
  w.N2 = std::max({0, -k2, -k1 - k2});
  w.N3 = std::max({0, k2, k1 + k2});
  const int k = k1 + k2;
  for (int i = -w.N1 + 1; i <= w.N1 + k - 1; ++i) {
    if (k % 2 == 0 && i == k / 2) continue;
    w.lambda1.insert(i);
  }
  for (int i = -w.N1 + 1; i <= w.N1 + k - 1; ++i) {
    if (2 * i > k) w.lambda_half.insert(i);
  }
  for (int i = -w.N3 + k + 1; i <= w.N2 + k - 1; ++i) {
    w.lambda2.insert(i);
  }
  return w;
}

std::set<int> support_sources(const SupportWindow& w, MapKind kind,
                              Space space) {
  std::set<int> s;
  const int k = w.k1 + w.k2;
  if (kind == MapKind::Commutator) {
    const int lo = space == Space::Bergman ? 0 : -w.N1 - k + 1;
    for (int i = lo; i <= w.N1 - 1; ++i) {
      if (space == Space::Bergman && i < 0) continue;
      s.insert(i);
    }
  } else {
    const int lo = space == Space::Bergman ? 0 : -w.N3 + 1;
    for (int i = lo; i <= w.N2 - 1; ++i) s.insert(i);
  }
  return s;
}

namespace {

double coefficient_scale(const CoeffMap& map) {
  double scale = 0.0;
  for (const auto& [src, c] : map.entries) scale = std::max(scale, std::abs(c));
  return std::max(1.0, scale);
}

const std::set<int>& lambda_for(const SupportWindow& w, MapKind kind) {
  return kind == MapKind::Commutator ? w.lambda1 : w.lambda2;
}

}  // namespace

std::vector<CanonicalTerm> extract_canonical_form(const CoeffMap& map,
                                                  const SupportWindow& w,
                                                  MapKind kind, double tol) {
  const std::set<int> support = support_sources(w, kind, map.space);
  const double threshold = tol * coefficient_scale(map);
  std::vector<CanonicalTerm> out;
  for (int src : support) {
    const double raw = map.at(src);
    if (std::abs(raw) <= threshold) continue;
    CanonicalTerm term;
    term.index = src + map.net_degree;
    term.coeff = (std::abs(src) + 1) * raw;
    if (map.space == Space::Harmonic && kind == MapKind::Commutator) {
      term.partner = -term.index + w.k1 + w.k2;
    }
    out.push_back(term);
  }
  return out;
}

RankReport detect_rank(const CoeffMap& map, const SupportWindow& w,
                       MapKind kind, double tol) {
  RankReport report;
  report.tol = tol;
  report.checked_lo = map.lo;
  report.checked_hi = map.hi;

  const std::set<int> support = support_sources(w, kind, map.space);
  const double threshold = tol * coefficient_scale(map);
  for (const auto& [src, c] : map.entries) {
    if (support.count(src)) continue;
    if (std::abs(c) > threshold) {
      report.margin_ok = false;
      report.worst_margin = std::max(report.worst_margin, std::abs(c));
    }
  }
  if (!report.margin_ok) {
    report.note = "not finite rank at this window";
  }

  report.canonical = extract_canonical_form(map, w, kind, tol);
  for (const CanonicalTerm& t : report.canonical) {
    report.range.push_back(t.index);
  }
  std::sort(report.range.begin(), report.range.end());
  report.rank = static_cast<int>(report.range.size());

  const std::set<int>& lambda = lambda_for(w, kind);
  for (int idx : report.range) {
    if (map.space == Space::Bergman && kind == MapKind::Commutator) {
      if (idx != std::max(w.k1, w.k2) - 1) report.range_in_lambda = false;
    } else if (!lambda.count(idx)) {
      report.range_in_lambda = false;
    }
  }

  if (map.space == Space::Harmonic && kind == MapKind::Commutator) {
    report.pairing_ok = pairing_check(report.canonical, w.k1, w.k2, tol);
  }
  parity_and_bounds(report, w.k1, w.k2, kind, map.space);
  return report;
}

bool pairing_check(const std::vector<CanonicalTerm>& canonical, int k1, int k2,
                   double tol) {
  for (const CanonicalTerm& t : canonical) {
    const int partner = -t.index + k1 + k2;
    const auto hit =
        std::find_if(canonical.begin(), canonical.end(),
                     [&](const CanonicalTerm& u) { return u.index == partner; });
    if (hit == canonical.end()) return false;
    const double scale = std::max({1.0, std::abs(t.coeff), std::abs(hit->coeff)});
    if (std::abs(t.coeff + hit->coeff) > tol * scale) return false;
  }
  return true;
}

void parity_and_bounds(RankReport& report, int k1, int k2, MapKind kind,
                       Space space) {
  const int a1 = std::abs(k1), a2 = std::abs(k2);
  if (kind == MapKind::Commutator) {
    if (space == Space::Harmonic) {
      report.parity_ok = report.rank % 2 == 0;
      const int bound = (k1 + k2) % 2 != 0 ? a1 + a2 - 1
                                           : std::max(0, a1 + a2 - 2);
      report.bound_ok = report.rank <= bound;
    } else {
      report.parity_ok = true;
      report.bound_ok = report.rank <= 1;
    }
  } else if (space == Space::Harmonic) {
    report.parity_ok = true;
    report.bound_ok =
        report.rank <= std::max({0, a1 - 1, a2 - 1, std::abs(k1 + k2) - 1});
  } else {
    // The harmonic product bound does not transfer; monomial-family ranks on
    // the Bergman side are 0, |k2|-1, |k1|-1, or 1 at the degree boundaries.
    report.parity_ok = true;
    report.bound_ok = report.rank <= std::max({1, a1 - 1, a2 - 1});
  }
}

CoeffMap reconstruct_from_canonical(const std::vector<CanonicalTerm>& canonical,
                                    Space space, int net_degree, Window w) {
  CoeffMap map;
  map.space = space;
  map.net_degree = net_degree;
  map.lo = space == Space::Bergman ? std::max(0, w.lo) : w.lo;
  map.hi = w.hi;
  for (int l = map.lo; l <= map.hi; ++l) map.entries[l] = 0.0;
  for (const CanonicalTerm& t : canonical) {
    const int src = t.index - net_degree;
    map.entries[src] = t.coeff / (std::abs(src) + 1);
  }
  return map;
}

RankEquivalence rank_equivalence_check(const QHOperator& t1,
                                       const QHOperator& t2,
                                       const MellinTransform& psi, int margin,
                                       double tol) {
  RankEquivalence eq;
  if (t1.space() != Space::Harmonic || t2.space() != Space::Harmonic) {
    eq.applicable = false;
    eq.note = "rank equivalence is specific to the harmonic Bergman space";
    return eq;
  }
  const int k1 = t1.degree(), k2 = t2.degree();
  const SupportWindow w = SupportWindow::from_degrees(k1, k2);
  const SupportWindow w_rev = SupportWindow::from_degrees(k2, k1);

  const CoeffMap fwd = gen_semicommutator_map(
      t1, t2, psi, gensemi_window(Space::Harmonic, k1, k2, margin));
  const CoeffMap rev = gen_semicommutator_map(
      t2, t1, psi, gensemi_window(Space::Harmonic, k2, k1, margin));
  const CoeffMap comm = commutator_map(
      t1, t2, commutator_window(Space::Harmonic, k1, k2, margin));

  const RankReport rf = detect_rank(fwd, w, MapKind::GenSemicommutator, tol);
  const RankReport rr = detect_rank(rev, w_rev, MapKind::GenSemicommutator, tol);
  const RankReport rc = detect_rank(comm, w, MapKind::Commutator, tol);

  eq.rank_forward = rf.rank;
  eq.rank_reversed = rr.rank;
  eq.rank_commutator = rc.rank;
  eq.margins_ok = rf.margin_ok && rr.margin_ok && rc.margin_ok;
  eq.ranks_equal = rf.rank == rr.rank;
  eq.commutator_bounded = rc.rank <= 2 * rf.rank;
  return eq;
}

std::vector<double> singular_values(const CoeffMap& map) {
  // Columns of the truncated matrix in the normalized basis: source s
  // contributes the single entry c * sqrt(|s|+1) / sqrt(|t|+1) in row t.
  std::vector<int> sources, targets;
  std::vector<double> values;
  std::map<int, int> row_of;
  for (const auto& [src, c] : map.entries) {
    if (c == 0.0) continue;
    const int t = src + map.net_degree;
    if (map.space == Space::Bergman && t < 0) continue;
    sources.push_back(src);
    targets.push_back(t);
    values.push_back(c * std::sqrt(static_cast<double>(std::abs(src) + 1)) /
                     std::sqrt(static_cast<double>(std::abs(t) + 1)));
    if (!row_of.count(t)) {
      const int next = static_cast<int>(row_of.size());
      row_of[t] = next;
    }
  }
  const std::size_t rows = row_of.size();
  const std::size_t cols = sources.size();
  if (cols == 0) return {};
  std::vector<std::vector<double>> a(cols, std::vector<double>(rows, 0.0));
  for (std::size_t j = 0; j < cols; ++j) {
    a[j][row_of[targets[j]]] = values[j];
  }

  // One-sided Jacobi: orthogonalize column pairs until convergence.
  auto dot = [&](std::size_t p, std::size_t q) {
    double d = 0.0;
    for (std::size_t i = 0; i < rows; ++i) d += a[p][i] * a[q][i];
    return d;
  };
  for (int sweep = 0; sweep < 60; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < cols; ++p) {
      for (std::size_t q = p + 1; q < cols; ++q) {
        const double apq = dot(p, q);
        const double app = dot(p, p);
        const double aqq = dot(q, q);
        if (std::abs(apq) <= 1e-15 * std::sqrt(app * aqq) || apq == 0.0) {
          continue;
        }
        rotated = true;
        const double tau = (aqq - app) / (2.0 * apq);
        const double t = (tau >= 0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t i = 0; i < rows; ++i) {
          const double vp = a[p][i];
          const double vq = a[q][i];
          a[p][i] = c * vp - s * vq;
          a[q][i] = s * vp + c * vq;
        }
      }
    }
    if (!rotated) break;
  }
  std::vector<double> sv(cols);
  for (std::size_t j = 0; j < cols; ++j) sv[j] = std::sqrt(dot(j, j));
  std::sort(sv.rbegin(), sv.rend());
  return sv;
}

int numerical_rank(const std::vector<double>& singular, double rel_tol) {
  if (singular.empty()) return 0;
  const double cutoff = rel_tol * singular.front();
  int rank = 0;
  for (double s : singular) {
    if (s > cutoff) ++rank;
  }
  return singular.front() <= 0.0 ? 0 : rank;
}

}  // namespace qhtop
