#pragma once

// Truncated Fock-space representation of a single field mode.
//
// Every object carries its cutoff N explicitly; the space is spanned by
// |0>, ..., |N> and all matrices are (N+1) x (N+1).

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace phasekit {

using Complex = std::complex<double>;
using ComplexVector = Eigen::VectorXcd;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kDefaultEpsTail = 1e-10;

class StateVector {
 public:
  // Normalizes `amps`. Throws DegenerateSuperposition when the norm is below
  // 1e-12. `tail_mass` is the probability the untruncated family had beyond
  // the cutoff; `norm_constant` is the factor that was applied.
  static StateVector from_amplitudes(ComplexVector amps, double tail_mass = 0.0);

  int cutoff() const { return static_cast<int>(amps_.size()) - 1; }
  int dim() const { return static_cast<int>(amps_.size()); }
  const ComplexVector& amplitudes() const { return amps_; }
  Complex operator[](int n) const { return amps_[n]; }
  double tail_mass() const { return tail_mass_; }
  double norm_constant() const { return norm_constant_; }

  // Zero-pads to a larger cutoff. The state itself is unchanged.
  StateVector padded(int cutoff) const;

 private:
  StateVector(ComplexVector amps, double tail_mass, double norm_constant)
      : amps_(std::move(amps)), tail_mass_(tail_mass), norm_constant_(norm_constant) {}

  ComplexVector amps_;
  double tail_mass_ = 0.0;
  double norm_constant_ = 1.0;
};

class DensityMatrix {
 public:
  // Validates Hermiticity (1e-12), unit trace (1e-10). Positivity is not
  // checked here; see min_eigenvalue().
  static DensityMatrix from_matrix(ComplexMatrix elems);

  int cutoff() const { return static_cast<int>(elems_.rows()) - 1; }
  int dim() const { return static_cast<int>(elems_.rows()); }
  const ComplexMatrix& elems() const { return elems_; }
  Complex operator()(int j, int k) const { return elems_(j, k); }
  double min_eigenvalue() const;

 private:
  explicit DensityMatrix(ComplexMatrix elems) : elems_(std::move(elems)) {}
  ComplexMatrix elems_;
};

class OperatorMatrix {
 public:
  OperatorMatrix() = default;
  // General operator; no structure assumed.
  static OperatorMatrix general(ComplexMatrix elems);
  // Verifies max |A_jk - conj(A_kj)| <= 1e-10 and sets the hint.
  static OperatorMatrix hermitian(ComplexMatrix elems);

  int cutoff() const { return static_cast<int>(elems_.rows()) - 1; }
  int dim() const { return static_cast<int>(elems_.rows()); }
  const ComplexMatrix& elems() const { return elems_; }
  Complex operator()(int j, int k) const { return elems_(j, k); }
  bool hermitian_hint() const { return hermitian_hint_; }

 private:
  OperatorMatrix(ComplexMatrix elems, bool hint)
      : elems_(std::move(elems)), hermitian_hint_(hint) {}
  ComplexMatrix elems_;
  bool hermitian_hint_ = false;
};

struct LadderSet {
  OperatorMatrix a;
  OperatorMatrix a_dag;
  OperatorMatrix n_op;
};

struct WeightedState {
  Complex weight;
  StateVector state;
};

double max_hermitian_deviation(const ComplexMatrix& m);

StateVector make_number_state(int n, int cutoff);

// Amplitudes are built in log space so |alpha| ~ 8 with n ~ 150 does not
// overflow. Throws CutoffTooSmall when the Poisson tail beyond the cutoff is
// >= eps_tail.
StateVector make_coherent_state(Complex alpha, int cutoff, double eps_tail = kDefaultEpsTail);

// Probability mass of |alpha> above `cutoff`, summed directly.
double coherent_tail_mass(double mean_photon_number, int cutoff);

// max(ceil(mean + 10 sqrt(mean)), smallest cutoff whose tail is < eps_tail).
int minimal_coherent_cutoff(Complex alpha, double eps_tail = kDefaultEpsTail);

// (|0> + |2n>)/sqrt(2).
StateVector make_pair_state(int n, int cutoff);

// Weighted sum, renormalized. The returned state's norm_constant() is the
// normalization constant c. All terms must share a cutoff.
StateVector superpose(std::span<const WeightedState> terms);

LadderSet ladder_matrices(int cutoff);
OperatorMatrix identity_operator(int cutoff);

// B_jk = exp(i (j - k) theta) A_jk, i.e. exp(iN theta) A exp(-iN theta).
OperatorMatrix phase_conjugate(const OperatorMatrix& a, double theta);
DensityMatrix phase_conjugate(const DensityMatrix& rho, double theta);

// c_n -> exp(i n phi) c_n, i.e. exp(iN phi)|psi>.
StateVector phase_shift(const StateVector& psi, double phi);

DensityMatrix density_from_pure(const StateVector& psi);

// Tr[rho A].
Complex expectation(const OperatorMatrix& a, const DensityMatrix& rho);

}  // namespace phasekit
