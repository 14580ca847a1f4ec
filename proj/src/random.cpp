#include "phasekit/random.hpp"

#include <stdexcept>

namespace phasekit {

StateVector random_state(int support, int cutoff, std::mt19937_64& rng) {
  if (support < 0 || support > cutoff) throw std::invalid_argument("support must lie in [0, cutoff]");
  std::normal_distribution<double> normal;
  ComplexVector amps = ComplexVector::Zero(cutoff + 1);
  for (int n = 0; n <= support; ++n) amps[n] = Complex(normal(rng), normal(rng));
  return StateVector::from_amplitudes(std::move(amps));
}

OperatorMatrix random_hermitian(int cutoff, std::mt19937_64& rng) {
  if (cutoff < 0) throw std::invalid_argument("cutoff must be >= 0");
  std::normal_distribution<double> normal;
  ComplexMatrix g(cutoff + 1, cutoff + 1);
  for (int k = 0; k <= cutoff; ++k) {
    for (int j = 0; j <= cutoff; ++j) g(j, k) = Complex(normal(rng), normal(rng));
  }
  return OperatorMatrix::hermitian(0.5 * (g + g.adjoint()));
}

}  // namespace phasekit
