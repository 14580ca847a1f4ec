#include "phasekit/phase_grid.hpp"

#include <cmath>
#include <stdexcept>

namespace phasekit {

PhaseGrid::PhaseGrid(double theta0, int count) : theta0_(theta0), count_(count) {
  if (!std::isfinite(theta0)) throw std::invalid_argument("theta0 must be finite");
  if (count < 4) throw std::invalid_argument("phase grid needs at least 4 samples");
}

std::vector<double> PhaseGrid::samples() const {
  std::vector<double> out(count_);
  for (int i = 0; i < count_; ++i) out[i] = theta(i);
  return out;
}

std::string_view to_string(DistributionKind kind) {
  switch (kind) {
    case DistributionKind::wigner_radial:
      return "wigner_radial";
    case DistributionKind::wigner_operator:
      return "wigner_operator";
    case DistributionKind::pegg_barnett:
      return "pegg_barnett";
    case DistributionKind::closed_form:
      return "closed_form";
  }
  return "unknown";
}

double PhaseDistribution::integral() const {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum * grid.spacing();
}

}  // namespace phasekit
