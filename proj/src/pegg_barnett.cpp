#include "phasekit/pegg_barnett.hpp"

#include <cmath>
#include <stdexcept>

#include <boost/math/quadrature/gauss.hpp>

#include "phasekit/error.hpp"

namespace phasekit {

namespace {

Complex phase_amplitude(const StateVector& psi, double theta) {
  Complex sum = 0.0;
  for (int n = 0; n < psi.dim(); ++n) sum += psi[n] * std::polar(1.0, -n * theta);
  return sum;
}

}  // namespace

PBBasis pb_basis(int s, double theta0) {
  if (s < 0) throw std::invalid_argument("s must be >= 0");
  PBBasis basis{s, theta0, {}};
  const double norm = 1.0 / std::sqrt(s + 1.0);
  for (int m = 0; m <= s; ++m) {
    ComplexVector amps(s + 1);
    for (int n = 0; n <= s; ++n) amps[n] = norm * std::polar(1.0, n * basis.theta(m));
    basis.states.push_back(StateVector::from_amplitudes(std::move(amps)));
  }
  return basis;
}

double pb_density_at(const StateVector& psi, double theta) {
  return std::norm(phase_amplitude(psi, theta)) / kTwoPi;
}

PhaseDistribution pb_density(const StateVector& psi, const PhaseGrid& grid) {
  PhaseDistribution dist{grid, std::vector<double>(grid.count()), DistributionKind::pegg_barnett};
  for (int i = 0; i < grid.count(); ++i) dist.values[i] = pb_density_at(psi, grid.theta(i));
  return dist;
}

OperatorMatrix phi_s_matrix(int s, double theta0) {
  const PBBasis basis = pb_basis(s, theta0);
  ComplexMatrix phi = ComplexMatrix::Zero(s + 1, s + 1);
  for (int m = 0; m <= s; ++m) {
    const ComplexVector& v = basis.states[m].amplitudes();
    phi += basis.theta(m) * (v * v.adjoint());
  }
  // The sum of Hermitian dyads picks up rounding asymmetry of order 1e-16 * s.
  phi = (0.5 * (phi + phi.adjoint())).eval();
  return OperatorMatrix::hermitian(std::move(phi));
}

PhiMoment phi_s_moment(int s, double theta0, const StateVector& psi, int p) {
  if (p < 1) throw std::invalid_argument("moment order must be >= 1");
  if (s < 0) throw std::invalid_argument("s must be >= 0");
  if (psi.cutoff() > s) {
    throw CutoffTooSmall("phase-state space s=" + std::to_string(s) +
                             " is smaller than the state cutoff " + std::to_string(psi.cutoff()),
                         psi.cutoff());
  }

  PhiMoment out;
  const PBBasis basis = pb_basis(s, theta0);
  const ComplexVector amps = psi.padded(s).amplitudes();
  for (int m = 0; m <= s; ++m) {
    const Complex overlap = basis.states[m].amplitudes().dot(amps);  // <theta_m|psi>
    out.spectral += std::pow(basis.theta(m), p) * std::norm(overlap);
  }

  using Gauss = boost::math::quadrature::gauss<double, 20>;
  const int panels = std::max(16, 2 * psi.dim());
  const double width = kTwoPi / panels;
  for (int k = 0; k < panels; ++k) {
    const double a = theta0 + k * width;
    out.limit += Gauss::integrate(
        [&](double theta) { return std::pow(theta, p) * pb_density_at(psi, theta); }, a,
        a + width);
  }
  return out;
}

OperatorMatrix pb_projector(double theta, int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("cutoff must be >= 0");
  const ComplexMatrix at_zero = ComplexMatrix::Constant(cutoff + 1, cutoff + 1, 1.0 / kTwoPi);
  return phase_conjugate(OperatorMatrix::hermitian(at_zero), theta);
}

}  // namespace phasekit
