#pragma once

// Wigner function of a truncated state in polar coordinates, and its radial
// integral P^W(theta) = int_0^inf W(r e^{i theta}) r dr.
//
// Convention: W integrates to 1 over the plane (d^2 alpha = dRe dIm) and
// W(0) = (2/pi) Tr[rho Parity]. A coherent state |r0 e^{i phi}> peaks at
// theta = phi, matching phase_conjugate(): exp(iN phi) advances the phase.

#include <vector>

#include "phasekit/fock.hpp"
#include "phasekit/phase_grid.hpp"
#include "phasekit/radial_quadrature.hpp"

namespace phasekit {

// l_n(x) = sqrt(n!/(n+d)!) x^{d/2} exp(-x/2) L_n^{(d)}(x) for n = 0..n_max.
// Evaluated by the normalized three-term recurrence with log-scale tracking,
// so no intermediate overflows even when L_n itself would.
std::vector<double> scaled_laguerre(int d, int n_max, double x);

// Angular harmonics of W on the circle of radius r:
// W(r, theta) = sum_{d=-N}^{N} harmonic(d) e^{i d theta}.
class WignerRing {
 public:
  WignerRing(const DensityMatrix& rho, double r);

  int cutoff() const { return cutoff_; }
  Complex harmonic(int d) const { return h_[d + cutoff_]; }
  // Complex value; the imaginary part is the Hermiticity residue.
  Complex value(double theta) const;

 private:
  int cutoff_;
  std::vector<Complex> h_;
};

// Throws KernelInconsistency if |Im W| > 1e-8.
double wigner_eval(const DensityMatrix& rho, double r, double theta);

// values_i = sum_q w_q W(r_q, theta_i) r_q.
PhaseDistribution phase_distribution_radial(const DensityMatrix& rho, const PhaseGrid& grid);
PhaseDistribution phase_distribution_radial(const DensityMatrix& rho, const PhaseGrid& grid,
                                            const RadialQuadrature& rule);

}  // namespace phasekit
