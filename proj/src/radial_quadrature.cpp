#include "phasekit/radial_quadrature.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include <boost/math/quadrature/gauss.hpp>

#include "phasekit/error.hpp"

namespace phasekit {

namespace {

constexpr int kPanelOrder = 20;
constexpr double kPanelWidth = 0.5;
// Past the peak of r^q exp(-2 r^2) at sqrt(q/4) the log-integrand falls like
// -4 dr^2, so this margin leaves exp(-81) of the peak at r_max.
constexpr double kPeakMargin = 4.5;
constexpr double kMomentTolerance = 1e-10;

}  // namespace

double RadialQuadrature::integrate(const std::function<double(double)>& f) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
  return sum;
}

double RadialQuadrature::integrate_radial(const std::function<double(double)>& f) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]) * nodes[i];
  return sum;
}

double log_gaussian_moment(int q) {
  if (q < 0) throw std::invalid_argument("moment order must be >= 0");
  return -0.5 * (q + 3) * std::log(2.0) + std::lgamma(0.5 * (q + 1));
}

double gaussian_moment(int q) { return std::exp(log_gaussian_moment(q)); }

RadialQuadrature build_radial_rule(int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("cutoff must be >= 0");
  using Gauss = boost::math::quadrature::gauss<double, kPanelOrder>;

  RadialQuadrature rule;
  rule.order = kPanelOrder;
  rule.max_power = 2 * cutoff + 2;
  const double peak = std::sqrt(rule.max_power / 4.0);
  rule.panels = static_cast<int>(std::ceil((peak + kPeakMargin) / kPanelWidth));
  rule.r_max = rule.panels * kPanelWidth;

  // Boost stores the non-negative half of the symmetric Legendre abscissae.
  const auto& x = Gauss::abscissa();
  const auto& w = Gauss::weights();
  std::vector<double> ref_nodes;
  std::vector<double> ref_weights;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0.0) {
      ref_nodes.push_back(0.0);
      ref_weights.push_back(w[i]);
      continue;
    }
    ref_nodes.push_back(-x[i]);
    ref_weights.push_back(w[i]);
    ref_nodes.push_back(x[i]);
    ref_weights.push_back(w[i]);
  }

  const double half = 0.5 * kPanelWidth;
  for (int p = 0; p < rule.panels; ++p) {
    const double mid = (p + 0.5) * kPanelWidth;
    for (std::size_t i = 0; i < ref_nodes.size(); ++i) {
      rule.nodes.push_back(mid + half * ref_nodes[i]);
      rule.weights.push_back(half * ref_weights[i]);
    }
  }

  // Moments past q ~ 380 overflow a double, so each is checked divided by
  // its exact value.
  for (int q = 0; q <= rule.max_power; ++q) {
    const double log_exact = log_gaussian_moment(q);
    const double approx = rule.integrate([q, log_exact](double r) {
      return std::exp(q * std::log(r) - 2.0 * r * r - log_exact);
    });
    const double rel = std::abs(approx - 1.0);
    if (!(rel <= kMomentTolerance)) {
      std::ostringstream os;
      os << "radial rule for cutoff " << cutoff << " misses moment q=" << q
         << " by relative " << rel;
      throw QuadratureConstruction(os.str());
    }
  }
  return rule;
}

}  // namespace phasekit
