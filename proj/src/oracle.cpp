#include "qhtop/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <vector>

namespace qhtop {

namespace {

constexpr int kOrder = 40;
constexpr double kPi = 3.14159265358979323846;

struct GaussRule {
  std::array<double, kOrder> nodes;    // on (-1, 1)
  std::array<double, kOrder> weights;
};

// Newton iteration on Legendre P_n; standard construction of the rule.
GaussRule make_rule() {
  GaussRule rule{};
  const int n = kOrder;
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
      }
      pp = n * (x * p0 - p1) / (x * x - 1.0);
      const double dx = p0 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  return rule;
}

const GaussRule& rule() {
  static const GaussRule r = make_rule();
  return r;
}

double panel(const std::function<double(double)>& f, double lo, double hi) {
  const GaussRule& r = rule();
  const double mid = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  double acc = 0.0;
  for (int i = 0; i < kOrder; ++i) {
    acc += r.weights[i] * f(mid + half * r.nodes[i]);
  }
  return acc * half;
}

double adaptive(const std::function<double(double)>& f, double lo, double hi,
                double whole, double tol, int depth, int* budget) {
  if (--(*budget) < 0) {
    throw QuadratureError("quadrature did not converge within panel budget");
  }
  const double mid = 0.5 * (lo + hi);
  const double left = panel(f, lo, mid);
  const double right = panel(f, mid, hi);
  const double delta = left + right - whole;
  if (std::abs(delta) <= tol || depth >= 60) {
    return left + right;
  }
  return adaptive(f, lo, mid, left, tol / 2.0, depth + 1, budget) +
         adaptive(f, mid, hi, right, tol / 2.0, depth + 1, budget);
}

}  // namespace

double adaptive_gauss_legendre(const std::function<double(double)>& f,
                               double lo, double hi, double tol) {
  int budget = 20000;
  return adaptive(f, lo, hi, panel(f, lo, hi), tol, 0, &budget);
}

double quad_mellin(const RadialSymbol& phi, double z, double tol) {
  if (z < 2.0) throw std::invalid_argument("Mellin quadrature needs z >= 2");
  if (phi.is_zero()) return 0.0;
  // Integrand r^(p+z-1); the worst exponent min_power + z - 1 exceeds -1.
  // The substitution r = u^K flattens the fractional endpoint behaviour, and
  // each term is evaluated as exp(((p+z)K - 1) log u) so extreme negative
  // powers never overflow through an intermediate r^p.
  const double worst = phi.min_power() + z - 1.0;
  double k = 1.0;
  if (worst < 4.0) {
    k = std::max(1.0, std::ceil(5.0 / (worst + 1.0)));
  }
  auto integrand = [&, k](double u) {
    if (u <= 0.0) return 0.0;
    const double lu = std::log(u);
    double acc = 0.0;
    for (const SymbolTerm& t : phi.terms()) {
      const double exponent = (t.power + z) * k - 1.0;
      double v = t.coeff * k * std::exp(exponent * lu);
      if (t.log_exp) v *= k * lu;
      acc += v;
    }
    return acc;
  };
  return adaptive_gauss_legendre(integrand, 0.0, 1.0, tol);
}

double quad_mellin_convolve(const RadialSymbol& f, const RadialSymbol& g,
                            double r, double tol) {
  if (!(r > 0.0 && r < 1.0)) {
    throw std::invalid_argument("convolution point must lie in (0,1)");
  }
  auto integrand = [&](double t) { return f(r / t) * g(t) / t; };
  return adaptive_gauss_legendre(integrand, r, 1.0, tol);
}

double quad_projection_coeff(int k, const RadialSymbol& phi, int l,
                             double tol) {
  const int target = k + l;
  const double exponent = std::abs(l) + std::abs(target) + 2;
  const double radial = quad_mellin(phi, exponent, tol);
  return 2.0 * (std::abs(target) + 1) * radial;
}

double quad_bergman_coeff(int k, const RadialSymbol& phi, int n, double tol) {
  if (n < 0) throw std::invalid_argument("Bergman index must be >= 0");
  const int target = n + k;
  if (target < 0) return 0.0;
  const double radial = quad_mellin(phi, n + target + 2, tol);
  return 2.0 * (target + 1) * radial;
}

std::complex<double> kernel_pairing(
    const std::function<std::complex<double>(std::complex<double>)>& h,
    std::complex<double> z, int radial_panels, int angular_points) {
  using cplx = std::complex<double>;
  const GaussRule& r = rule();
  cplx acc = 0.0;
  for (int p = 0; p < radial_panels; ++p) {
    const double lo = static_cast<double>(p) / radial_panels;
    const double hi = static_cast<double>(p + 1) / radial_panels;
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    for (int i = 0; i < kOrder; ++i) {
      const double rad = mid + half * r.nodes[i];
      cplx ang = 0.0;
      for (int j = 0; j < angular_points; ++j) {
        const double theta = 2.0 * kPi * j / angular_points;
        const cplx w = rad * cplx(std::cos(theta), std::sin(theta));
        const cplx kz = 1.0 / ((1.0 - w * std::conj(z)) *
                               (1.0 - w * std::conj(z)));
        const cplx rz = kz + std::conj(kz) - 1.0;  // real-valued kernel
        ang += h(w) * rz;
      }
      ang /= static_cast<double>(angular_points);
      // normalized area measure: dA = 2 r dr dtheta / (2 pi)
      acc += r.weights[i] * half * 2.0 * rad * ang;
    }
  }
  return acc;
}

}  // namespace qhtop
