#pragma once

#include <map>
#include <stdexcept>

#include "qhtop/mellin.hpp"

namespace qhtop {

enum class Space { Harmonic, Bergman };

struct WindowError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Toeplitz operator with symbol e^{ik theta} phi(r), acting on the monomial
/// basis of the harmonic Bergman space (indices l in Z, vectors r^|l| e^{il
/// theta}) or of the Bergman space (indices n >= 0, vectors z^n). Only the
/// Mellin transform of phi enters the basis action.
class QHOperator {
 public:
  QHOperator(Space space, int degree, MellinTransform radial)
      : space_(space), degree_(degree), radial_(std::move(radial)) {}
  QHOperator(Space space, int degree, const RadialSymbol& phi)
      : QHOperator(space, degree, mellin_of_symbol(phi)) {}

  Space space() const { return space_; }
  int degree() const { return degree_; }
  const MellinTransform& radial() const { return radial_; }

 private:
  Space space_;
  int degree_;
  MellinTransform radial_;
};

struct ShiftImage {
  int target = 0;
  double lambda = 0.0;
  bool annihilated = false;
};

/// T(r^|l| e^{il theta}) = lambda_{k,l} r^|k+l| e^{i(k+l) theta} with the
/// four-regime weight
///   lambda_{k,l} = 2(l+k+1)  phi^(2l+k+2)  for l >= 0, l >= -k,
///                  2(-l-k+1) phi^(-k+2)    for l >= 0, l <= -k,
///                  2(-l-k+1) phi^(-2l-k+2) for l <= 0, -l >= k,
///                  2(l+k+1)  phi^(k+2)     for l <= 0, -l <= k.
ShiftImage apply_harmonic(const QHOperator& op, int l);

/// T(z^n) = 2(n+k+1) phi^(2n+k+2) z^{n+k} for n >= -k, annihilated otherwise.
ShiftImage apply_bergman(const QHOperator& op, int n);

ShiftImage apply(const QHOperator& op, int index);

/// Truncation of an operator that shifts every basis index by a fixed net
/// degree: source index -> coefficient on the target source+net_degree.
/// Bergman maps store only sources with a nonnegative target (others are
/// annihilated exactly).
struct CoeffMap {
  Space space = Space::Harmonic;
  int net_degree = 0;
  int lo = 0, hi = 0;  // inclusive source window
  std::map<int, double> entries;

  double at(int source) const {
    auto it = entries.find(source);
    return it == entries.end() ? 0.0 : it->second;
  }
};

struct Window {
  int lo = 0;
  int hi = 0;
};

/// Window wide enough for the support-plus-margin checks of a commutator
/// (resp. generalized semicommutator) of degrees k1, k2.
Window commutator_window(Space space, int k1, int k2, int margin);
Window gensemi_window(Space space, int k1, int k2, int margin);

/// Coefficients of [T1, T2] = T1 T2 - T2 T1 on every basis vector in the
/// window. Compositions chain two exact single-operator applications, so sign
/// regime crossings of the intermediate index are handled exactly. Throws
/// WindowError when the window does not cover the theoretical support bound
/// plus a margin of 20.
CoeffMap commutator_map(const QHOperator& t1, const QHOperator& t2, Window w);

/// Coefficients of T1 T2 - T_{e^{i(k1+k2) theta} psi}.
CoeffMap gen_semicommutator_map(const QHOperator& t1, const QHOperator& t2,
                                const MellinTransform& psi, Window w);

/// Weight symmetry (|l|+1) lambda_{k,l} = (|l+k|+1) lambda_{k,-l-k}.
bool lamre_check(int k, const MellinTransform& phi, int l, double tol = 1e-11);

}  // namespace qhtop
