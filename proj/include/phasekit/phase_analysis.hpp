#pragma once

// Comparative checks between the Wigner phase operator and Pegg-Barnett
// phase: weak equivalence, the angle operator Q and its moments, and
// negativity of sampled distributions.

#include <functional>

#include "phasekit/fock.hpp"
#include "phasekit/phase_grid.hpp"
#include "phasekit/wigner_phase_op.hpp"

namespace phasekit {

using OperatorFamily = std::function<OperatorMatrix(double)>;

// Samples f(theta_i, phi_j) = Re Tr[op_at(theta_i) pb_projector(phi_j)] for
// theta and phi on `grid` and returns the largest spread (max - min) within
// any class of equal (i - j) mod M. Zero means f depends on theta - phi only.
double weak_equivalence_scan(const OperatorFamily& op_at, int cutoff, const PhaseGrid& grid);

// I_p(q, theta0) = int_{theta0}^{theta0+2pi} theta^p e^{i q theta} dtheta in
// closed form, by repeated integration by parts.
Complex fourier_poly_integral(int p, int q, double theta0);

// (M_p)_jk = rho_W(0)_jk I_p(j - k, theta0) = int theta^p rho_W(theta) dtheta.
OperatorMatrix build_moment_operator(int p, double theta0, const OperatorMatrix& rho_w0);
OperatorMatrix build_moment_operator(int p, double theta0, int cutoff,
                                     int max_cutoff = kOperatorPathMaxCutoff);

// Q = int theta rho_W(theta) dtheta over [theta0, theta0 + 2pi).
OperatorMatrix build_Q(double theta0, int cutoff, int max_cutoff = kOperatorPathMaxCutoff);

// int theta^p P(theta) dtheta over the grid window, exact when P is a
// trigonometric polynomial of degree below M/2 (true for P^W and P_PB once M
// exceeds twice the cutoff). Goes through the sampled Fourier coefficients.
double sampled_moment(const PhaseDistribution& dist, int p);

struct QMomentMismatch {
  double lhs = 0.0;  // Tr[rho Q^p]
  double rhs = 0.0;  // Tr[rho M_p] = int theta^p P^W dtheta
  double gap = 0.0;
};

QMomentMismatch q_moment_mismatch(const DensityMatrix& rho, double theta0, int p,
                                  int max_cutoff = kOperatorPathMaxCutoff);

struct NegativityReport {
  double min_value = 0.0;
  double argmin = 0.0;
  double negative_fraction = 0.0;  // share of samples below -1e-12
};

NegativityReport negativity_report(const PhaseDistribution& dist);

}  // namespace phasekit
