#pragma once

#include <complex>
#include <functional>

#include "qhtop/radial_symbol.hpp"

namespace qhtop {

struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Adaptive Gauss-Legendre integral of f over [lo, hi] with absolute error
/// target tol. Order-40 panels, bisection refinement. Nodes are interior, so
/// integrable endpoint behaviour needs no special casing.
double adaptive_gauss_legendre(const std::function<double(double)>& f,
                               double lo, double hi, double tol);

/// Mellin transform by quadrature of the defining integral
///   phi^(z) = int_0^1 phi(r) r^(z-1) dr,   z >= 2.
/// Negative powers are flattened by the substitution r = u^K before
/// integrating, so the value is accurate down to power -> -2.
double quad_mellin(const RadialSymbol& phi, double z, double tol = 1e-12);

/// Mellin convolution value (f *_M g)(r) = int_r^1 f(r/t) g(t) dt/t by
/// quadrature, for spot-checking the closed form.
double quad_mellin_convolve(const RadialSymbol& f, const RadialSymbol& g,
                            double r, double tol = 1e-12);

/// Weight of T_{e^{ik theta} phi} on the harmonic basis vector r^|l| e^{il
/// theta}, computed from the projection integral: the kernel expansion
/// sum (n+1) z^n w-bar^n reduces the disk integral by angular orthogonality
/// to 2(|k+l|+1) int_0^1 phi(r) r^(|l|+|k+l|+1) dr, evaluated by quadrature.
double quad_projection_coeff(int k, const RadialSymbol& phi, int l,
                             double tol = 1e-12);

/// Bergman-space analogue; returns 0 when the image projects away (n+k < 0).
double quad_bergman_coeff(int k, const RadialSymbol& phi, int n,
                          double tol = 1e-12);

/// <h, R_z> evaluated by 2D quadrature against the reproducing kernel
/// R_z(w) = 1/(1 - w conj(z))^2 + 1/(1 - conj(w) z)^2 - 1 on the unit disk
/// with normalized area measure. Equals h(z) for harmonic h.
std::complex<double> kernel_pairing(
    const std::function<std::complex<double>(std::complex<double>)>& h,
    std::complex<double> z, int radial_panels = 8, int angular_points = 256);

}  // namespace qhtop
