#include "qhtop/mellin.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace qhtop {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kIntegerTol = 1e-9;

}  // namespace

bool is_nonpositive_integer(double x, double tol) {
  if (x > tol) return false;
  return std::abs(x - std::round(x)) <= tol;
}

LogGamma log_gamma_signed(double x) {
  if (is_nonpositive_integer(x)) {
    throw PoleError("Gamma pole at nonpositive integer argument", x);
  }
  if (x > 0.0) {
    return {std::lgamma(x), 1};
  }
  // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x); 1-x > 1 here.
  const double s = std::sin(kPi * x);
  return {std::log(kPi) - std::log(std::abs(s)) - std::lgamma(1.0 - x),
          s > 0.0 ? 1 : -1};
}

double gamma_ratio_eval(const GammaRatioTransform& g, double z) {
  if (g.num_offsets.size() != g.den_offsets.size()) {
    throw std::invalid_argument("Gamma ratio needs equally many factors");
  }
  if (g.scale <= 0.0) throw std::invalid_argument("scale must be positive");

  double log_sum = 0.0;
  int sign = 1;
  std::vector<double> num_poles, den_poles;  // p for an argument at -p
  for (double a : g.num_offsets) {
    const double x = (z + a) / g.scale;
    if (is_nonpositive_integer(x)) {
      num_poles.push_back(std::round(-x));
    } else {
      const LogGamma lg = log_gamma_signed(x);
      log_sum += lg.log_abs;
      sign *= lg.sign;
    }
  }
  for (double b : g.den_offsets) {
    const double y = (z + b) / g.scale;
    if (is_nonpositive_integer(y)) {
      den_poles.push_back(std::round(-y));
    } else {
      const LogGamma lg = log_gamma_signed(y);
      log_sum -= lg.log_abs;
      sign *= lg.sign;
    }
  }
  if (num_poles.size() > den_poles.size()) {
    throw PoleError("uncancelled Gamma pole in numerator", z);
  }
  if (num_poles.size() < den_poles.size()) return 0.0;
  // Matched poles: lim Gamma(-p+e)/Gamma(-q+e) = (-1)^(p-q) q!/p!.
  std::sort(num_poles.begin(), num_poles.end());
  std::sort(den_poles.begin(), den_poles.end());
  for (std::size_t i = 0; i < num_poles.size(); ++i) {
    const double p = num_poles[i];
    const double q = den_poles[i];
    log_sum += std::lgamma(q + 1.0) - std::lgamma(p + 1.0);
    if (static_cast<long long>(std::llround(p - q)) % 2 != 0) sign = -sign;
  }
  return g.prefactor * sign * std::exp(log_sum);
}

bool gamma_ratio_has_pole(const GammaRatioTransform& g, double z_min) {
  auto pole_count_at = [&](const std::vector<double>& offsets, double z) {
    int n = 0;
    for (double off : offsets) {
      if (is_nonpositive_integer((z + off) / g.scale)) ++n;
    }
    return n;
  };
  for (double a : g.num_offsets) {
    // Gamma((z+a)/s) has poles at z = -a - t*s, t = 0, 1, 2, ...
    for (double z = -a; z >= z_min - kIntegerTol; z -= g.scale) {
      if (pole_count_at(g.num_offsets, z) > pole_count_at(g.den_offsets, z)) {
        return true;
      }
    }
  }
  return false;
}

namespace {

// Linear-factor view of a telescoped Gamma ratio:
//   K * prod (z + u) / prod (z + v).
struct RationalForm {
  double constant = 1.0;
  std::vector<double> num_roots;
  std::vector<double> den_roots;
};

bool nearly(double a, double b) {
  return std::abs(a - b) <= kIntegerTol * std::max(1.0, std::abs(a));
}

std::optional<RationalForm> telescope(const GammaRatioTransform& g) {
  RationalForm out;
  out.constant = g.prefactor;
  std::vector<bool> used(g.den_offsets.size(), false);
  for (double a : g.num_offsets) {
    bool matched = false;
    for (std::size_t j = 0; j < g.den_offsets.size(); ++j) {
      if (used[j]) continue;
      const double gap = (g.den_offsets[j] - a) / g.scale;
      if (std::abs(gap - std::round(gap)) > kIntegerTol) continue;
      used[j] = true;
      matched = true;
      const long long d = std::llround(gap);
      if (d > 0) {
        // Gamma(x)/Gamma(x+d) = 1 / [x (x+1) ... (x+d-1)], x = (z+a)/s.
        for (long long t = 0; t < d; ++t) {
          out.den_roots.push_back(a + static_cast<double>(t) * g.scale);
          out.constant *= g.scale;
        }
      } else if (d < 0) {
        // Gamma(y+|d|)/Gamma(y) = y (y+1) ... (y+|d|-1), y = (z+b)/s.
        const double b = g.den_offsets[j];
        for (long long t = 0; t < -d; ++t) {
          out.num_roots.push_back(b + static_cast<double>(t) * g.scale);
          out.constant /= g.scale;
        }
      }
      break;
    }
    if (!matched) return std::nullopt;
  }
  // Cancel shared linear factors.
  for (auto it = out.num_roots.begin(); it != out.num_roots.end();) {
    auto hit = std::find_if(out.den_roots.begin(), out.den_roots.end(),
                            [&](double v) { return nearly(v, *it); });
    if (hit != out.den_roots.end()) {
      out.den_roots.erase(hit);
      it = out.num_roots.erase(it);
    } else {
      ++it;
    }
  }
  return out;
}

}  // namespace

std::optional<RadialSymbol> gamma_ratio_to_partial_fractions(
    const GammaRatioTransform& g) {
  if (g.num_offsets.size() != g.den_offsets.size()) {
    throw std::invalid_argument("Gamma ratio needs equally many factors");
  }
  const auto form = telescope(g);
  if (!form) return std::nullopt;
  if (form->den_roots.size() < form->num_roots.size() + 1) {
    return std::nullopt;  // not a proper rational function
  }

  // Group denominator roots; only simple and double poles stay in the
  // power/log-1 symbol class.
  std::vector<std::pair<double, int>> roots;  // (root, multiplicity)
  for (double v : form->den_roots) {
    auto hit = std::find_if(roots.begin(), roots.end(), [&](const auto& rm) {
      return nearly(rm.first, v);
    });
    if (hit != roots.end()) {
      ++hit->second;
    } else {
      roots.emplace_back(v, 1);
    }
  }
  std::vector<SymbolTerm> terms;
  for (const auto& [v, mult] : roots) {
    if (mult > 2) return std::nullopt;
    if (!(v > -2.0)) return std::nullopt;  // pole in Re z >= 2: not L^1
    // H(z) = (z+v)^mult * R(z) is analytic at z = -v.
    double h = form->constant;
    for (double u : form->num_roots) h *= (u - v);
    for (const auto& [w, wm] : roots) {
      if (nearly(w, v)) continue;
      for (int t = 0; t < wm; ++t) h /= (w - v);
    }
    if (mult == 1) {
      terms.push_back({h, v, 0});  // h/(z+v) <-> h r^v
    } else {
      // R = A/(z+v) + B/(z+v)^2 with B = H(-v), A = H'(-v).
      double logderiv = 0.0;
      for (double u : form->num_roots) logderiv += 1.0 / (u - v);
      for (const auto& [w, wm] : roots) {
        if (nearly(w, v)) continue;
        logderiv -= static_cast<double>(wm) / (w - v);
      }
      const double b = h;
      const double a = h * logderiv;
      terms.push_back({a, v, 0});
      terms.push_back({-b, v, 1});  // B/(z+v)^2 <-> -B r^v log r
    }
  }
  return RadialSymbol(std::move(terms));
}

MellinTransform::MellinTransform(RadialSymbol symbol)
    : witness_(std::move(symbol)) {}

MellinTransform::MellinTransform(GammaRatioTransform gamma)
    : gamma_(std::move(gamma)) {
  witness_ = gamma_ratio_to_partial_fractions(*gamma_);
}

double MellinTransform::operator()(double z) const {
  if (!witness_) return gamma_ratio_eval(*gamma_, z);
  double v = 0.0;
  for (const SymbolTerm& t : witness_->terms()) {
    const double d = z + t.power;
    v += t.log_exp ? -t.coeff / (d * d) : t.coeff / d;
  }
  return v;
}

MellinTransform MellinTransform::scaled(double c) const {
  if (gamma_) {
    GammaRatioTransform g = *gamma_;
    g.prefactor *= c;
    return MellinTransform(std::move(g));
  }
  return MellinTransform(witness_->scaled(c));
}

MellinTransform mellin_of_symbol(const RadialSymbol& sym) {
  return MellinTransform(sym);
}

RadialSymbol mellin_convolve(const RadialSymbol& f, const RadialSymbol& g) {
  std::vector<SymbolTerm> out;
  for (const SymbolTerm& tf : f.terms()) {
    for (const SymbolTerm& tg : g.terms()) {
      const double c = tf.coeff * tg.coeff;
      if (tf.log_exp + tg.log_exp >= 2) {
        throw UnsupportedTermError(
            "Mellin convolution of two log terms leaves the symbol class");
      }
      const bool equal = nearly(tf.power, tg.power);
      if (tf.log_exp + tg.log_exp == 0) {
        if (equal) {
          out.push_back({-c, tf.power, 1});  // r^a * r^a = -r^a log r
        } else {
          const double d = tg.power - tf.power;
          out.push_back({c / d, tf.power, 0});
          out.push_back({-c / d, tg.power, 0});
        }
        continue;
      }
      // One log factor: 1/(z+a) * (-1/(z+b)^2) with a != b.
      const double a = tf.log_exp ? tg.power : tf.power;
      const double b = tf.log_exp ? tf.power : tg.power;
      if (equal) {
        throw UnsupportedTermError(
            "Mellin convolution r^a * r^a log r needs a log^2 term");
      }
      const double d = b - a;
      out.push_back({-c / (d * d), a, 0});
      out.push_back({c / (d * d), b, 0});
      out.push_back({-c / d, b, 1});
    }
  }
  return RadialSymbol(std::move(out));
}

std::optional<int> odd_multiple_index(double m, int k1, double tol) {
  if (k1 <= 0) return std::nullopt;
  const double n = (m / k1 - 1.0) / 2.0;
  if (n < -tol) return std::nullopt;
  const double r = std::round(n);
  if (std::abs(n - r) > tol) return std::nullopt;
  return static_cast<int>(r);
}

TFunctionCase t_function_classify(TSide side, int k1, int k2, double m) {
  if (k1 <= 0) throw std::invalid_argument("classification assumes k1 > 0");
  if (m < -1.0 - kIntegerTol) throw std::invalid_argument("requires m >= -1");
  const bool odd_multiple = odd_multiple_index(m, k1).has_value();
  const bool m_plus_k1_zero = std::abs(m + k1) <= kIntegerTol;
  if (side == TSide::Phi) {
    if (k2 <= -2 && m_plus_k1_zero) return {1};
    if (-2 < k2 && k2 < m + k1 + 2 - kIntegerTol) return {2};
    if (k2 >= m + k1 + 2 - kIntegerTol && odd_multiple) return {3};
    return {std::nullopt};
  }
  if (k2 <= -k1 - 2 && m_plus_k1_zero) return {1};
  if (-k1 - 2 < k2 && k2 < m + 2 - kIntegerTol) return {2};
  if (k2 >= m + 2 - kIntegerTol && odd_multiple) return {3};
  return {std::nullopt};
}

MonotoneCertificate monotonicity_certificate(MonotoneKind kind, double a,
                                             double b, double lo, double hi,
                                             int samples) {
  if (!(b > 0.0)) throw std::invalid_argument("requires b > 0");
  if (samples < 2 || !(hi > lo)) {
    throw std::invalid_argument("need an interval and at least two samples");
  }
  MonotoneCertificate cert;
  cert.increasing = (kind == MonotoneKind::F) ? (a > 0.0) : (a < 1.0);

  // Compare in log space; the quotient is positive on the lemma's domain.
  auto log_value = [&](double x) {
    if (kind == MonotoneKind::F) {
      return std::lgamma(x) + std::lgamma(x + b - a) - std::lgamma(x - a) -
             std::lgamma(x + b);
    }
    return std::lgamma(-x + a) + std::lgamma(-x + b + 1.0) -
           std::lgamma(-x + 1.0) - std::lgamma(-x + b + a);
  };

  cert.pass = true;
  double prev_x = lo;
  double prev = log_value(lo);
  for (int i = 1; i < samples; ++i) {
    const double x = lo + (hi - lo) * i / (samples - 1);
    const double cur = log_value(x);
    const bool ok = cert.increasing ? cur > prev : cur < prev;
    if (!ok) {
      cert.pass = false;
      cert.violation = {prev_x, x};
      return cert;
    }
    prev = cur;
    prev_x = x;
  }
  return cert;
}

}  // namespace qhtop
