#include "qhtop/operators.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qhtop {

namespace {

constexpr int kMinMargin = 20;

int max4(int a, int b, int c, int d) {
  return std::max(std::max(a, b), std::max(c, d));
}

}  // namespace

ShiftImage apply_harmonic(const QHOperator& op, int l) {
  if (op.space() != Space::Harmonic) {
    throw std::invalid_argument("operator does not act on the harmonic space");
  }
  const int k = op.degree();
  const MellinTransform& phi = op.radial();
  double lambda;
  if (l >= 0 && l >= -k) {
    lambda = 2.0 * (l + k + 1) * phi(2 * l + k + 2);
  } else if (l >= 0) {  // l <= -k
    lambda = 2.0 * (-l - k + 1) * phi(-k + 2);
  } else if (-l >= k) {  // l <= 0
    lambda = 2.0 * (-l - k + 1) * phi(-2 * l - k + 2);
  } else {  // l <= 0, -l <= k
    lambda = 2.0 * (l + k + 1) * phi(k + 2);
  }
  return {l + k, lambda, false};
}

ShiftImage apply_bergman(const QHOperator& op, int n) {
  if (op.space() != Space::Bergman) {
    throw std::invalid_argument("operator does not act on the Bergman space");
  }
  if (n < 0) throw std::invalid_argument("Bergman basis index must be >= 0");
  const int k = op.degree();
  if (n < -k) return {0, 0.0, true};
  return {n + k, 2.0 * (n + k + 1) * op.radial()(2 * n + k + 2), false};
}

ShiftImage apply(const QHOperator& op, int index) {
  return op.space() == Space::Harmonic ? apply_harmonic(op, index)
                                       : apply_bergman(op, index);
}

namespace {

// Coefficient of T1 T2 on basis vector `source` (target source+k1+k2).
double compose_coeff(const QHOperator& t1, const QHOperator& t2, int source) {
  const ShiftImage first = apply(t2, source);
  if (first.annihilated) return 0.0;
  const ShiftImage second = apply(t1, first.target);
  if (second.annihilated) return 0.0;
  return first.lambda * second.lambda;
}

void check_window(Window w, int lo_needed, int hi_needed, Space space) {
  const int lo_required = space == Space::Bergman ? 0 : lo_needed;
  if (w.lo > lo_required || w.hi < hi_needed) {
    throw WindowError("window [" + std::to_string(w.lo) + "," +
                      std::to_string(w.hi) +
                      "] does not cover the support bound plus margin [" +
                      std::to_string(lo_required) + "," +
                      std::to_string(hi_needed) + "]");
  }
}

}  // namespace

Window commutator_window(Space space, int k1, int k2, int margin) {
  const int n1 = max4(0, -k1, -k2, -k1 - k2);
  const int hi = n1 + margin;
  if (space == Space::Bergman) return {0, hi};
  return {-n1 - std::abs(k1 + k2) - margin, hi};
}

Window gensemi_window(Space space, int k1, int k2, int margin) {
  const int n2 = std::max({0, -k2, -k1 - k2});
  const int n3 = std::max({0, k2, k1 + k2});
  if (space == Space::Bergman) return {0, n2 + margin};
  return {-n3 - margin, n2 + margin};
}

CoeffMap commutator_map(const QHOperator& t1, const QHOperator& t2, Window w) {
  if (t1.space() != t2.space()) {
    throw std::invalid_argument("commutator needs operators on one space");
  }
  const Space space = t1.space();
  const int k1 = t1.degree(), k2 = t2.degree();
  const Window needed = commutator_window(space, k1, k2, kMinMargin);
  check_window(w, needed.lo, needed.hi, space);

  CoeffMap map;
  map.space = space;
  map.net_degree = k1 + k2;
  map.lo = space == Space::Bergman ? std::max(0, w.lo) : w.lo;
  map.hi = w.hi;
  for (int l = map.lo; l <= map.hi; ++l) {
    map.entries[l] = compose_coeff(t1, t2, l) - compose_coeff(t2, t1, l);
  }
  return map;
}

CoeffMap gen_semicommutator_map(const QHOperator& t1, const QHOperator& t2,
                                const MellinTransform& psi, Window w) {
  if (t1.space() != t2.space()) {
    throw std::invalid_argument("product needs operators on one space");
  }
  const Space space = t1.space();
  const int k1 = t1.degree(), k2 = t2.degree();
  const Window needed = gensemi_window(space, k1, k2, kMinMargin);
  check_window(w, needed.lo, needed.hi, space);

  const QHOperator t_psi(space, k1 + k2, psi);
  CoeffMap map;
  map.space = space;
  map.net_degree = k1 + k2;
  map.lo = space == Space::Bergman ? std::max(0, w.lo) : w.lo;
  map.hi = w.hi;
  for (int l = map.lo; l <= map.hi; ++l) {
    const ShiftImage sub = apply(t_psi, l);
    const double psi_part = sub.annihilated ? 0.0 : sub.lambda;
    map.entries[l] = compose_coeff(t1, t2, l) - psi_part;
  }
  return map;
}

bool lamre_check(int k, const MellinTransform& phi, int l, double tol) {
  const QHOperator op(Space::Harmonic, k, phi);
  const double lhs = (std::abs(l) + 1) * apply_harmonic(op, l).lambda;
  const double rhs = (std::abs(l + k) + 1) * apply_harmonic(op, -l - k).lambda;
  const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
  return std::abs(lhs - rhs) <= tol * scale;
}

}  // namespace qhtop
