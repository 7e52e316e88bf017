#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qhtop/radial_symbol.hpp"

namespace qhtop {

struct PoleError : std::domain_error {
  PoleError(const std::string& what, double at) : std::domain_error(what), z(at) {}
  double z;
};

struct UnsupportedTermError : std::domain_error {
  using std::domain_error::domain_error;
};

/// log|Gamma(x)| together with the sign of Gamma(x).
struct LogGamma {
  double log_abs;
  int sign;
};

/// Valid for any x that is not a pole of Gamma. Negative non-integer
/// arguments go through the reflection formula with explicit sign tracking.
LogGamma log_gamma_signed(double x);

bool is_nonpositive_integer(double x, double tol = 1e-9);

/// prefactor * prod_i Gamma((z+a_i)/s) / prod_j Gamma((z+b_j)/s),
/// with equally many numerator and denominator factors.
struct GammaRatioTransform {
  double prefactor = 1.0;
  double scale = 2.0;
  std::vector<double> num_offsets;
  std::vector<double> den_offsets;
};

/// Evaluates the ratio at real z. Coincident numerator/denominator poles are
/// resolved by their finite limit; an unmatched denominator pole gives 0; an
/// unmatched numerator pole throws PoleError.
double gamma_ratio_eval(const GammaRatioTransform& g, double z);

/// True when some numerator Gamma has an uncancelled pole at a z >= z_min.
bool gamma_ratio_has_pole(const GammaRatioTransform& g, double z_min = 2.0);

/// Exact inverse transform when the offsets telescope: pairs (a_i, b_j) whose
/// gap is an integer multiple of the scale collapse to a rational function,
/// and simple/double poles left of Re z = 2 invert to power / power-log
/// terms. Returns nullopt when the ratio is not such a rational function (the
/// symbol then stays Mellin-side).
std::optional<RadialSymbol> gamma_ratio_to_partial_fractions(
    const GammaRatioTransform& g);

/// Evaluator for a Mellin transform on the half-line z >= 2: either the
/// closed form of a RadialSymbol ((r^p)^ = 1/(z+p), (r^p log r)^ = -1/(z+p)^2)
/// or a Gamma-ratio. Gamma-side transforms keep a symbol witness when partial
/// fractions succeed.
class MellinTransform {
 public:
  MellinTransform() : MellinTransform(RadialSymbol{}) {}
  explicit MellinTransform(RadialSymbol symbol);
  explicit MellinTransform(GammaRatioTransform gamma);

  double operator()(double z) const;

  const RadialSymbol* symbol_witness() const {
    return witness_ ? &*witness_ : nullptr;
  }
  const GammaRatioTransform* gamma_side() const {
    return gamma_ ? &*gamma_ : nullptr;
  }
  bool is_closed_form() const { return !gamma_.has_value(); }

  MellinTransform scaled(double c) const;

 private:
  std::optional<RadialSymbol> witness_;
  std::optional<GammaRatioTransform> gamma_;
};

MellinTransform mellin_of_symbol(const RadialSymbol& sym);

/// Mellin convolution (f *_M g)(r) = int_r^1 f(r/t) g(t) dt/t in closed form:
/// r^a * r^b = (r^a - r^b)/(b-a) for a != b and -r^a log r for a = b; one log
/// factor is absorbed when the powers differ. Two log factors (or a log
/// meeting an equal power) would leave the power/log-1 class and throw.
RadialSymbol mellin_convolve(const RadialSymbol& f, const RadialSymbol& g);

/// Which lemma's half of the calculus a Gamma-ratio belongs to: the phi-side
/// family (commutator symbols) or the psi-side family (semicommutator
/// symbols, whose admissible window differs).
enum class TSide { Phi, Psi };

struct TFunctionCase {
  std::optional<int> condition;  // 1..3, nullopt when no condition holds
};

/// Decides boundedness of the canonical Gamma-ratio symbol for parameters
/// (k1 > 0, k2, m >= -1):
///   Phi side: (1) k2 <= -2 and m + k1 = 0, (2) -2 < k2 < m + k1 + 2,
///             (3) k2 >= m + k1 + 2 and m = (2n+1) k1 for some n >= 0.
///   Psi side: (1) k2 <= -k1-2 and m + k1 = 0, (2) -k1-2 < k2 < m + 2,
///             (3) k2 >= m + 2 and m = (2n+1) k1.
TFunctionCase t_function_classify(TSide side, int k1, int k2, double m);

/// Is m = (2n+1)*k1 for some integer n >= 0 (within tolerance)?
std::optional<int> odd_multiple_index(double m, int k1, double tol = 1e-9);

enum class MonotoneKind {
  F,  // Gamma(x) Gamma(x+b-a) / (Gamma(x-a) Gamma(x+b))
  G,  // Gamma(-x+a) Gamma(-x+b+1) / (Gamma(-x+1) Gamma(-x+b+a))
};

struct MonotoneCertificate {
  bool pass = false;
  bool increasing = false;  // predicted direction
  std::optional<std::pair<double, double>> violation;
};

/// Samples the quotient on [lo, hi] and certifies strict monotonicity in the
/// direction the digamma argument predicts: F increases on (a, inf) for a > 0
/// and decreases on (0, inf) for a < 0; G increases on (-inf, a) for
/// 0 < a < 1 and decreases on (-inf, 1) for a > 1. Requires b > 0.
MonotoneCertificate monotonicity_certificate(MonotoneKind kind, double a,
                                             double b, double lo, double hi,
                                             int samples);

}  // namespace qhtop
