#ifndef EUP_TYPES_HPP
#define EUP_TYPES_HPP

#include <cmath>
#include <complex>
#include <string>

#include "eup/errors.hpp"

namespace eup {

using Complex = std::complex<double>;

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(const Complex& z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// hbar and particle mass; both strictly positive. Defaults to natural units.
struct PhysicalConstants {
  double hbar = 1.0;
  double mass = 1.0;

  void validate() const {
    if (!(hbar > 0.0) || !is_finite(hbar)) throw ConfigError("hbar must be positive and finite");
    if (!(mass > 0.0) || !is_finite(mass)) throw ConfigError("mass must be positive and finite");
  }
};

/// Parameters of the quasi-free deformation mu(x) = alpha^2 x^2 + 2i beta x.
/// omega = sqrt(alpha^2 + beta^2) > |beta| since alpha > 0.
struct QuasiFreeParams {
  double alpha = 1.0;
  double beta = 0.0;

  double omega() const { return std::hypot(alpha, beta); }
  /// Imaginary offset of the contour on which 1 + mu is real and positive.
  double shifted_offset() const { return -beta / (alpha * alpha); }

  void validate() const {
    if (!(alpha > 0.0) || !is_finite(alpha)) throw ConfigError("alpha must be positive");
    if (!is_finite(beta)) throw ConfigError("beta must be finite");
  }
};

/// Horizontal line Im(x) = offset_b, sampled uniformly on Re(x) in [-L, L].
/// Grid is symmetric about the imaginary axis: x_j = (-L + j*h) + i*b.
struct Contour {
  double offset_b = 0.0;
  double half_length = 1.0;
  int n_points = 3;

  double spacing() const { return 2.0 * half_length / (n_points - 1); }
  Complex point(int j) const { return {-half_length + j * spacing(), offset_b}; }

  /// Same line with `margin` points dropped at each end; spacing unchanged.
  Contour trimmed(int margin) const {
    Contour c;
    c.offset_b = offset_b;
    c.n_points = n_points - 2 * margin;
    c.half_length = half_length - margin * spacing();
    if (c.n_points < 1) throw Error("contour too short for requested stencil margin");
    return c;
  }

  void validate() const {
    if (!(half_length > 0.0) || !is_finite(half_length))
      throw ConfigError("contour half_length must be positive");
    if (n_points < 3) throw ConfigError("contour needs at least 3 points");
    if (!is_finite(offset_b)) throw ConfigError("contour offset must be finite");
  }
};

}  // namespace eup

#endif
