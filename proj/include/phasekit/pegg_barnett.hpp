#pragma once

// Pegg-Barnett phase formalism on an (s+1)-dimensional space.
//
// Phase states |theta_m> = (s+1)^{-1/2} sum_n e^{i n theta_m}|n> with
// theta_m = theta0 + 2 pi m / (s+1), m = 0..s.

#include <vector>

#include "phasekit/fock.hpp"
#include "phasekit/phase_grid.hpp"

namespace phasekit {

struct PBBasis {
  int s = 0;
  double theta0 = 0.0;
  std::vector<StateVector> states;

  double theta(int m) const { return theta0 + kTwoPi * m / (s + 1); }
};

PBBasis pb_basis(int s, double theta0);

// (1/2pi)|sum_n c_n e^{-i n theta}|^2 at one angle.
double pb_density_at(const StateVector& psi, double theta);

PhaseDistribution pb_density(const StateVector& psi, const PhaseGrid& grid);

// phi_s = sum_m theta_m |theta_m><theta_m|.
OperatorMatrix phi_s_matrix(int s, double theta0);

struct PhiMoment {
  double spectral = 0.0;  // <phi_s^p> = sum_m theta_m^p |<theta_m|psi>|^2
  double limit = 0.0;     // int_{theta0}^{theta0+2pi} theta^p P_PB(theta) dtheta
};

// Throws CutoffTooSmall if psi's cutoff exceeds s.
PhiMoment phi_s_moment(int s, double theta0, const StateVector& psi, int p);

// Continuum-normalized truncated dyad: (1/2pi) e^{i(j-k)theta} in element
// (j, k), so Tr[rho pb_projector(theta)] = P_PB(theta).
OperatorMatrix pb_projector(double theta, int cutoff);

}  // namespace phasekit
