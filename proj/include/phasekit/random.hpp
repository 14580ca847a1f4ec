#pragma once

#include <random>

#include "phasekit/fock.hpp"

namespace phasekit {

// Gaussian complex amplitudes on |0>..|support>, zero above, normalized.
StateVector random_state(int support, int cutoff, std::mt19937_64& rng);

// (G + G^dag) / 2 with G complex Gaussian.
OperatorMatrix random_hermitian(int cutoff, std::mt19937_64& rng);

}  // namespace phasekit
