#include "phasekit/wigner_phase_op.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "phasekit/error.hpp"

namespace phasekit {

namespace {

using Wide = boost::multiprecision::cpp_bin_float_50;

constexpr double kHermitianCheck = 1e-9;

// log k! and log Gamma(n/2 + 1), both through log-Gamma.
class LogGammaTable {
 public:
  explicit LogGammaTable(int cutoff) {
    for (int i = 0; i <= cutoff; ++i) log_factorial_.push_back(boost::multiprecision::lgamma(Wide(i + 1)));
    for (int n = 0; n <= 2 * cutoff; ++n) {
      log_gamma_half_.push_back(boost::multiprecision::lgamma(Wide(n) / 2 + 1));
    }
    log_two_ = boost::multiprecision::log(Wide(2));
    log_two_pi_ = boost::multiprecision::log(2 * boost::math::constants::pi<Wide>());
  }
  const Wide& log_factorial(int i) const { return log_factorial_[i]; }
  const Wide& log_gamma_half(int n) const { return log_gamma_half_[n]; }
  const Wide& log_two() const { return log_two_; }
  const Wide& log_two_pi() const { return log_two_pi_; }

 private:
  std::vector<Wide> log_factorial_;
  std::vector<Wide> log_gamma_half_;
  Wide log_two_;
  Wide log_two_pi_;
};

struct KahanSum {
  Wide sum = 0;
  Wide carry = 0;
  void add(const Wide& x) {
    const Wide y = x - carry;
    const Wide t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }
};

RhoWElement element(int j, int k, const LogGammaTable& lg) {
  RhoWElement out;
  KahanSum total;
  Wide max_term = 0;
  const Wide half_log_jk = (lg.log_factorial(j) + lg.log_factorial(k)) / 2;
  // Ascending l, then m. n - l = j - k + l >= 0 fixes the lower bound on l.
  for (int l = std::max(0, k - j); l <= k; ++l) {
    const int n = j - k + 2 * l;
    // m = 0 term: 2^{n/2} Gamma(n/2+1) sqrt(j! k!) / (2pi (n-l)! l! (k-l)!)
    Wide term = boost::multiprecision::exp(n * lg.log_two() / 2 + lg.log_gamma_half(n) +
                                           half_log_jk - lg.log_factorial(n - l) -
                                           lg.log_factorial(l) - lg.log_factorial(k - l) -
                                           lg.log_two_pi());
    for (int m = 0; m <= k - l; ++m) {
      if (m > 0) {
        // (-1)^m 2^m / (m! (k-m-l)!) advanced one step in m.
        term *= Wide(-2 * (k - l - m + 1));
        term /= m;
      }
      total.add(term);
      max_term = std::max(max_term, boost::multiprecision::abs(term));
      ++out.term_count;
    }
  }
  out.value = static_cast<double>(total.sum);
  out.max_term = static_cast<double>(max_term);
  return out;
}

}  // namespace

RhoWElement rho_w_zero_element(int j, int k) {
  if (j < 0 || k < 0) throw std::invalid_argument("matrix indices must be >= 0");
  return element(j, k, LogGammaTable(std::max(j, k)));
}

OperatorMatrix rho_w_zero(int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("cutoff must be >= 0");
  const LogGammaTable lg(cutoff);
  const int dim = cutoff + 1;
  ComplexMatrix a = ComplexMatrix::Zero(dim, dim);
  double worst_dev = 0.0;
  // Built shell by shell (max(j, k) = s) so a cutoff far past the safe range
  // fails at the first shell where cancellation shows, not after the full cost.
  for (int s = 0; s <= cutoff; ++s) {
    int worst_k = s;
    double shell_dev = 0.0;
    long worst_terms = 0;
    for (int k = 0; k <= s; ++k) {
      const RhoWElement row = element(s, k, lg);
      const RhoWElement col = k == s ? row : element(k, s, lg);
      a(s, k) = row.value;
      a(k, s) = col.value;
      const double dev = std::abs(row.value - col.value);
      if (dev >= shell_dev) {
        shell_dev = dev;
        worst_k = k;
        worst_terms = std::max(row.term_count, col.term_count);
      }
    }
    if (!(shell_dev <= kHermitianCheck)) {
      std::ostringstream os;
      os << "rho_W(0) lost Hermiticity at cutoff " << cutoff << ": element (" << s << ","
         << worst_k << ") differs from its transpose by " << shell_dev << " after "
         << worst_terms << " alternating terms; cutoff " << s
         << " is beyond the numerically safe range";
      throw CancellationOverflow(os.str(), s, worst_k, shell_dev, worst_terms);
    }
    worst_dev = std::max(worst_dev, shell_dev);
  }
  return worst_dev <= 1e-10 ? OperatorMatrix::hermitian(std::move(a))
                            : OperatorMatrix::general(std::move(a));
}

OperatorMatrix rho_w(double theta, int cutoff) { return phase_conjugate(rho_w_zero(cutoff), theta); }

OperatorMatrix rho_w(double theta, const OperatorMatrix& zero) { return phase_conjugate(zero, theta); }

PhaseDistribution phase_distribution_operator(const DensityMatrix& rho, const PhaseGrid& grid,
                                              int max_cutoff) {
  if (rho.cutoff() > max_cutoff) {
    throw PathUnavailable("operator path is validated up to cutoff " +
                          std::to_string(max_cutoff) + " but the state needs " +
                          std::to_string(rho.cutoff()) + "; use the radial path");
  }
  const OperatorMatrix zero = rho_w_zero(rho.cutoff());
  PhaseDistribution dist{grid, std::vector<double>(grid.count()), DistributionKind::wigner_operator};
  for (int i = 0; i < grid.count(); ++i) {
    const Complex p = expectation(rho_w(grid.theta(i), zero), rho);
    if (std::abs(p.imag()) > 1e-8) {
      std::ostringstream os;
      os << "Tr[rho rho_W] has imaginary residue " << p.imag() << " at theta=" << grid.theta(i);
      throw KernelInconsistency(os.str());
    }
    dist.values[i] = p.real();
  }
  return dist;
}

double pair_state_coefficient(int n) {
  if (n < 0) throw std::invalid_argument("pair index must be >= 0");
  return std::exp(n * std::log(2.0) + std::lgamma(n + 1.0) - 0.5 * std::lgamma(2.0 * n + 1.0));
}

PhaseDistribution closed_form_pair_state(int n, const PhaseGrid& grid) {
  if (n < 1) throw std::invalid_argument("pair index must be >= 1");
  const double c = pair_state_coefficient(n);
  PhaseDistribution dist{grid, std::vector<double>(grid.count()), DistributionKind::closed_form};
  for (int i = 0; i < grid.count(); ++i) {
    dist.values[i] = (1.0 + c * std::cos(2.0 * n * grid.theta(i))) / kTwoPi;
  }
  return dist;
}

PhaseDistribution closed_form_pair_state_pb(int n, const PhaseGrid& grid) {
  if (n < 1) throw std::invalid_argument("pair index must be >= 1");
  PhaseDistribution dist{grid, std::vector<double>(grid.count()), DistributionKind::closed_form};
  for (int i = 0; i < grid.count(); ++i) {
    dist.values[i] = (1.0 + std::cos(2.0 * n * grid.theta(i))) / kTwoPi;
  }
  return dist;
}

}  // namespace phasekit
