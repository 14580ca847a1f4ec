#include "phasekit/fock.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "phasekit/error.hpp"

namespace phasekit {

namespace {

void require_cutoff(int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("cutoff must be >= 0");
}

}  // namespace

double max_hermitian_deviation(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix is not square");
  double worst = 0.0;
  for (Eigen::Index j = 0; j < m.rows(); ++j) {
    for (Eigen::Index k = j; k < m.cols(); ++k) {
      worst = std::max(worst, std::abs(m(j, k) - std::conj(m(k, j))));
    }
  }
  return worst;
}

StateVector StateVector::from_amplitudes(ComplexVector amps, double tail_mass) {
  if (amps.size() == 0) throw std::invalid_argument("state needs at least one amplitude");
  const double norm = amps.norm();
  if (!(norm > 1e-12)) {
    throw DegenerateSuperposition("state norm " + std::to_string(norm) +
                                  " is below 1e-12 (destructive cancellation)");
  }
  amps /= norm;
  return StateVector(std::move(amps), tail_mass, 1.0 / norm);
}

StateVector StateVector::padded(int cutoff) const {
  if (cutoff < this->cutoff()) throw std::invalid_argument("padded() cannot shrink a state");
  ComplexVector amps = ComplexVector::Zero(cutoff + 1);
  amps.head(dim()) = amps_;
  return StateVector(std::move(amps), tail_mass_, norm_constant_);
}

DensityMatrix DensityMatrix::from_matrix(ComplexMatrix elems) {
  if (elems.rows() == 0 || elems.rows() != elems.cols()) {
    throw std::invalid_argument("density matrix must be square and non-empty");
  }
  const double herm = max_hermitian_deviation(elems);
  if (herm > 1e-12) {
    throw std::invalid_argument("density matrix is not Hermitian (deviation " +
                                std::to_string(herm) + ")");
  }
  const Complex tr = elems.trace();
  if (std::abs(tr - 1.0) > 1e-10) {
    std::ostringstream os;
    os.precision(17);
    os << "density matrix trace " << tr.real() << " differs from 1";
    throw std::invalid_argument(os.str());
  }
  return DensityMatrix(std::move(elems));
}

double DensityMatrix::min_eigenvalue() const {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(elems_, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

OperatorMatrix OperatorMatrix::general(ComplexMatrix elems) {
  if (elems.rows() == 0 || elems.rows() != elems.cols()) {
    throw std::invalid_argument("operator matrix must be square and non-empty");
  }
  return OperatorMatrix(std::move(elems), false);
}

OperatorMatrix OperatorMatrix::hermitian(ComplexMatrix elems) {
  if (elems.rows() == 0 || elems.rows() != elems.cols()) {
    throw std::invalid_argument("operator matrix must be square and non-empty");
  }
  const double dev = max_hermitian_deviation(elems);
  if (dev > 1e-10) {
    throw std::invalid_argument("operator flagged Hermitian deviates by " + std::to_string(dev));
  }
  return OperatorMatrix(std::move(elems), true);
}

StateVector make_number_state(int n, int cutoff) {
  require_cutoff(cutoff);
  if (n < 0) throw std::invalid_argument("photon number must be >= 0");
  if (n > cutoff) {
    throw CutoffTooSmall("number state |" + std::to_string(n) + "> needs cutoff >= " +
                             std::to_string(n) + ", got " + std::to_string(cutoff),
                         n);
  }
  ComplexVector amps = ComplexVector::Zero(cutoff + 1);
  amps[n] = 1.0;
  return StateVector::from_amplitudes(std::move(amps));
}

double coherent_tail_mass(double mean, int cutoff) {
  if (mean == 0.0) return 0.0;
  // Poisson terms p_n = exp(-mean + n log mean - lgamma(n + 1)) for n > cutoff,
  // summed until they stop contributing past the mode.
  double tail = 0.0;
  const double log_mean = std::log(mean);
  for (long n = cutoff + 1;; ++n) {
    const double p = std::exp(-mean + n * log_mean - std::lgamma(n + 1.0));
    tail += p;
    if (n > mean && p < 1e-18 * std::max(tail, 1e-300)) break;
    if (n > mean && p == 0.0) break;
  }
  return std::min(tail, 1.0);
}

int minimal_coherent_cutoff(Complex alpha, double eps_tail) {
  const double mean = std::norm(alpha);
  int estimate = static_cast<int>(std::ceil(mean + 10.0 * std::sqrt(mean)));
  while (coherent_tail_mass(mean, estimate) >= eps_tail) ++estimate;
  return estimate;
}

StateVector make_coherent_state(Complex alpha, int cutoff, double eps_tail) {
  require_cutoff(cutoff);
  if (!(eps_tail > 0.0)) throw std::invalid_argument("eps_tail must be > 0");
  const double mean = std::norm(alpha);
  const double tail = coherent_tail_mass(mean, cutoff);
  if (tail >= eps_tail) {
    const int suggested = minimal_coherent_cutoff(alpha, eps_tail);
    std::ostringstream os;
    os << "coherent state alpha=" << alpha.real() << (alpha.imag() < 0 ? "" : "+")
       << alpha.imag() << "i leaves tail mass " << tail << " beyond cutoff " << cutoff
       << " (eps_tail " << eps_tail << "); minimal adequate cutoff ~ " << suggested;
    throw CutoffTooSmall(os.str(), suggested);
  }

  ComplexVector amps = ComplexVector::Zero(cutoff + 1);
  if (mean == 0.0) {
    amps[0] = 1.0;
  } else {
    const double log_abs = std::log(std::abs(alpha));
    const double phase = std::arg(alpha);
    for (int n = 0; n <= cutoff; ++n) {
      const double log_mag = -0.5 * mean + n * log_abs - 0.5 * std::lgamma(n + 1.0);
      amps[n] = std::polar(std::exp(log_mag), n * phase);
    }
  }
  return StateVector::from_amplitudes(std::move(amps), tail);
}

StateVector make_pair_state(int n, int cutoff) {
  if (n < 0) throw std::invalid_argument("pair index must be >= 0");
  require_cutoff(cutoff);
  if (2 * n > cutoff) {
    throw CutoffTooSmall("pair state n=" + std::to_string(n) + " needs cutoff >= " +
                             std::to_string(2 * n),
                         2 * n);
  }
  ComplexVector amps = ComplexVector::Zero(cutoff + 1);
  amps[0] += 1.0;
  amps[2 * n] += 1.0;
  return StateVector::from_amplitudes(std::move(amps));
}

StateVector superpose(std::span<const WeightedState> terms) {
  if (terms.empty()) throw std::invalid_argument("superpose needs at least one term");
  const int cutoff = terms.front().state.cutoff();
  ComplexVector sum = ComplexVector::Zero(cutoff + 1);
  double tail = 0.0;
  for (const auto& t : terms) {
    if (t.state.cutoff() != cutoff) {
      throw CutoffMismatch("superpose terms have cutoffs " + std::to_string(cutoff) + " and " +
                           std::to_string(t.state.cutoff()));
    }
    sum += t.weight * t.state.amplitudes();
    tail = std::max(tail, t.state.tail_mass());
  }
  return StateVector::from_amplitudes(std::move(sum), tail);
}

LadderSet ladder_matrices(int cutoff) {
  require_cutoff(cutoff);
  const int dim = cutoff + 1;
  ComplexMatrix a = ComplexMatrix::Zero(dim, dim);
  for (int n = 1; n <= cutoff; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
  ComplexMatrix a_dag = a.adjoint();
  ComplexMatrix n_op = a_dag * a;
  return LadderSet{OperatorMatrix::general(std::move(a)), OperatorMatrix::general(std::move(a_dag)),
                   OperatorMatrix::hermitian(std::move(n_op))};
}

OperatorMatrix identity_operator(int cutoff) {
  require_cutoff(cutoff);
  return OperatorMatrix::hermitian(ComplexMatrix::Identity(cutoff + 1, cutoff + 1));
}

namespace {

ComplexMatrix conjugate_elems(const ComplexMatrix& a, double theta) {
  if (!std::isfinite(theta)) throw std::invalid_argument("phase angle must be finite");
  const Eigen::Index dim = a.rows();
  // Phases e^{i q theta} indexed by q + dim - 1 for q = j - k in [-(dim-1), dim-1].
  std::vector<Complex> phase(2 * dim - 1);
  for (Eigen::Index q = -(dim - 1); q <= dim - 1; ++q) {
    phase[q + dim - 1] = std::polar(1.0, static_cast<double>(q) * theta);
  }
  ComplexMatrix b(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    for (Eigen::Index j = 0; j < dim; ++j) b(j, k) = phase[j - k + dim - 1] * a(j, k);
  }
  return b;
}

}  // namespace

OperatorMatrix phase_conjugate(const OperatorMatrix& a, double theta) {
  ComplexMatrix b = conjugate_elems(a.elems(), theta);
  // Element-wise unit phases preserve Hermiticity up to rounding in the phase.
  return a.hermitian_hint() ? OperatorMatrix::hermitian(std::move(b))
                            : OperatorMatrix::general(std::move(b));
}

DensityMatrix phase_conjugate(const DensityMatrix& rho, double theta) {
  return DensityMatrix::from_matrix(conjugate_elems(rho.elems(), theta));
}

StateVector phase_shift(const StateVector& psi, double phi) {
  if (!std::isfinite(phi)) throw std::invalid_argument("phase angle must be finite");
  ComplexVector amps = psi.amplitudes();
  for (int n = 0; n < psi.dim(); ++n) amps[n] *= std::polar(1.0, n * phi);
  return StateVector::from_amplitudes(std::move(amps), psi.tail_mass());
}

DensityMatrix density_from_pure(const StateVector& psi) {
  ComplexMatrix rho = psi.amplitudes() * psi.amplitudes().adjoint();
  rho /= rho.trace().real();
  return DensityMatrix::from_matrix(std::move(rho));
}

Complex expectation(const OperatorMatrix& a, const DensityMatrix& rho) {
  if (a.cutoff() != rho.cutoff()) {
    throw CutoffMismatch("operator cutoff " + std::to_string(a.cutoff()) +
                         " does not match density cutoff " + std::to_string(rho.cutoff()));
  }
  // Tr[rho A] = sum_jk rho_jk A_kj, summed in fixed column order.
  const ComplexMatrix& r = rho.elems();
  const ComplexMatrix& m = a.elems();
  Complex total = 0.0;
  for (Eigen::Index j = 0; j < r.rows(); ++j) {
    for (Eigen::Index k = 0; k < r.cols(); ++k) total += r(j, k) * m(k, j);
  }
  return total;
}

}  // namespace phasekit
