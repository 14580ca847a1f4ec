#pragma once

// The Wigner phase operator rho_W(theta), whose expectation value is the
// radially integrated Wigner function:
//
//   rho_W(theta) = (1/2pi) sum_{m,n>=0} sum_{l=0}^{n}
//       (-1)^m 2^{m+n/2} exp[i(n-2l)theta] Gamma(n/2+1) / (m! (n-l)! l!)
//       * a^dag^{m+n-l} a^{m+l}
//
// On Fock matrix elements the sums are finite: <j|...|k> needs n = j-k+2l,
// l <= k and m <= k-l. The terms alternate in sign and grow like ~3^k, so
// the sum is carried in 50 significant digits; past the validated cutoff the
// cancellation still wins and is reported as CancellationOverflow.

#include "phasekit/fock.hpp"
#include "phasekit/phase_grid.hpp"

namespace phasekit {

inline constexpr int kOperatorPathMaxCutoff = 40;

struct RhoWElement {
  double value = 0.0;
  long term_count = 0;
  double max_term = 0.0;  // largest |term| in the alternating sum
};

// <j|rho_W(0)|k>, evaluated in isolation.
RhoWElement rho_w_zero_element(int j, int k);

// Full matrix at theta = 0. Throws CancellationOverflow when the computed
// matrix is not Hermitian within 1e-9, naming the worst element.
OperatorMatrix rho_w_zero(int cutoff);

// exp(iN theta) rho_W(0) exp(-iN theta).
OperatorMatrix rho_w(double theta, int cutoff);
OperatorMatrix rho_w(double theta, const OperatorMatrix& zero);

// values_i = Re Tr[rho rho_W(theta_i)]. Throws PathUnavailable when the
// cutoff exceeds max_cutoff.
PhaseDistribution phase_distribution_operator(const DensityMatrix& rho, const PhaseGrid& grid,
                                              int max_cutoff = kOperatorPathMaxCutoff);

// 2^n n! / sqrt((2n)!)
double pair_state_coefficient(int n);

// P^W for (|0> + |2n>)/sqrt(2): (1/2pi)[1 + 2^n n!/sqrt((2n)!) cos(2n theta)].
PhaseDistribution closed_form_pair_state(int n, const PhaseGrid& grid);

// P_PB for the same state: (1/2pi)[1 + cos(2n theta)].
PhaseDistribution closed_form_pair_state_pb(int n, const PhaseGrid& grid);

}  // namespace phasekit
