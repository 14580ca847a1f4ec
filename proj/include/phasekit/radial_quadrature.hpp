#pragma once

#include <functional>
#include <vector>

namespace phasekit {

// Gauss-Legendre panels on [0, r_max] for integrands of the form
// polynomial(r) * exp(-2 r^2). `weights` are plain dr weights; the polar
// measure r dr is applied by integrate_radial().
struct RadialQuadrature {
  std::vector<double> nodes;
  std::vector<double> weights;
  double r_max = 0.0;
  int order = 0;        // Gauss-Legendre points per panel
  int panels = 0;
  int max_power = 0;    // validated for r^q exp(-2 r^2), 0 <= q <= max_power

  double integrate(const std::function<double(double)>& f) const;
  // sum_i w_i f(r_i) r_i  ~  int_0^inf f(r) r dr
  double integrate_radial(const std::function<double(double)>& f) const;
};

// int_0^inf r^q exp(-2 r^2) dr = 2^{-(q+3)/2} Gamma((q+1)/2).
double gaussian_moment(int q);
double log_gaussian_moment(int q);

// A rule exact to 1e-10 relative on r^q exp(-2 r^2) for q <= 2 cutoff + 2,
// which covers the polar-measure moments r^q exp(-2 r^2) r dr for
// q <= 2 cutoff + 1. Throws QuadratureConstruction if the sweep fails.
RadialQuadrature build_radial_rule(int cutoff);

}  // namespace phasekit
