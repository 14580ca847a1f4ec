#include "phasekit/wigner.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "phasekit/error.hpp"

namespace phasekit {

namespace {

constexpr double kImagResidueLimit = 1e-8;
constexpr double kRescale = 1e150;

void check_residue(const Complex& w, double r, double theta) {
  if (std::abs(w.imag()) > kImagResidueLimit) {
    std::ostringstream os;
    os << "Wigner kernel left imaginary residue " << w.imag() << " at r=" << r
       << ", theta=" << theta << " (is rho Hermitian?)";
    throw KernelInconsistency(os.str());
  }
}

// e^{i d theta} for d = 0..cutoff.
std::vector<Complex> harmonics_at(double theta, int cutoff) {
  std::vector<Complex> e(cutoff + 1);
  for (int d = 0; d <= cutoff; ++d) e[d] = std::polar(1.0, d * theta);
  return e;
}

Complex ring_value(const WignerRing& ring, const std::vector<Complex>& e) {
  Complex w = ring.harmonic(0);
  for (int d = 1; d <= ring.cutoff(); ++d) {
    w += ring.harmonic(d) * e[d] + ring.harmonic(-d) * std::conj(e[d]);
  }
  return w;
}

}  // namespace

std::vector<double> scaled_laguerre(int d, int n_max, double x) {
  if (d < 0 || n_max < 0) throw std::invalid_argument("scaled_laguerre needs d, n_max >= 0");
  if (x < 0.0) throw std::invalid_argument("scaled_laguerre needs x >= 0");
  std::vector<double> out(n_max + 1, 0.0);
  if (x == 0.0) {
    // x^{d/2} kills everything but d = 0, where L_n(0) = 1.
    if (d == 0) std::fill(out.begin(), out.end(), 1.0);
    return out;
  }

  double log_scale = 0.5 * (d * std::log(x) - x - std::lgamma(d + 1.0));
  double prev = 0.0;
  double cur = 1.0;
  out[0] = std::exp(log_scale);
  for (int n = 1; n <= n_max; ++n) {
    const double next =
        ((2.0 * n - 1.0 + d - x) * cur - std::sqrt((n - 1.0) * (n - 1.0 + d)) * prev) /
        std::sqrt(static_cast<double>(n) * (n + d));
    prev = cur;
    cur = next;
    const double mag = std::abs(cur);
    if (mag > kRescale) {
      prev /= kRescale;
      cur /= kRescale;
      log_scale += std::log(kRescale);
    } else if (mag != 0.0 && mag < 1.0 / kRescale) {
      prev *= kRescale;
      cur *= kRescale;
      log_scale -= std::log(kRescale);
    }
    out[n] = cur * std::exp(log_scale);
  }
  return out;
}

WignerRing::WignerRing(const DensityMatrix& rho, double r) : cutoff_(rho.cutoff()) {
  if (!(r >= 0.0)) throw std::invalid_argument("radius must be >= 0");
  h_.assign(2 * cutoff_ + 1, Complex(0.0, 0.0));
  const double x = 4.0 * r * r;
  const double prefactor = 2.0 / std::numbers::pi;
  // Kernel <n+d|W|n> = (2/pi)(-1)^n l_n^{(d)}(4r^2) e^{i d theta}; the d < 0
  // side is its conjugate, so each (n, d >= 0) kernel value is computed once.
  for (int d = 0; d <= cutoff_; ++d) {
    const std::vector<double> ell = scaled_laguerre(d, cutoff_ - d, x);
    Complex upper = 0.0;
    Complex lower = 0.0;
    for (int n = 0; n + d <= cutoff_; ++n) {
      const double k = (n % 2 == 0 ? 1.0 : -1.0) * ell[n];
      upper += rho(n, n + d) * k;
      lower += rho(n + d, n) * k;
    }
    h_[cutoff_ + d] = prefactor * upper;
    if (d > 0) h_[cutoff_ - d] = prefactor * lower;
  }
}

Complex WignerRing::value(double theta) const {
  return ring_value(*this, harmonics_at(theta, cutoff_));
}

double wigner_eval(const DensityMatrix& rho, double r, double theta) {
  const Complex w = WignerRing(rho, r).value(theta);
  check_residue(w, r, theta);
  return w.real();
}

PhaseDistribution phase_distribution_radial(const DensityMatrix& rho, const PhaseGrid& grid) {
  return phase_distribution_radial(rho, grid, build_radial_rule(rho.cutoff()));
}

PhaseDistribution phase_distribution_radial(const DensityMatrix& rho, const PhaseGrid& grid,
                                            const RadialQuadrature& rule) {
  if (rule.max_power < 2 * rho.cutoff() + 2) {
    throw std::invalid_argument("radial rule was built for a smaller cutoff");
  }
  const int cutoff = rho.cutoff();
  std::vector<std::vector<Complex>> phases(grid.count());
  for (int i = 0; i < grid.count(); ++i) phases[i] = harmonics_at(grid.theta(i), cutoff);

  PhaseDistribution dist{grid, std::vector<double>(grid.count(), 0.0),
                         DistributionKind::wigner_radial};
  for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
    const double r = rule.nodes[q];
    const double weight = rule.weights[q] * r;
    const WignerRing ring(rho, r);
    for (int i = 0; i < grid.count(); ++i) {
      const Complex w = ring_value(ring, phases[i]);
      check_residue(w, r, grid.theta(i));
      dist.values[i] += weight * w.real();
    }
  }
  return dist;
}

}  // namespace phasekit
