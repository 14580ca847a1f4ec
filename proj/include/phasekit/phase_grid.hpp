#pragma once

#include <numbers>
#include <string_view>
#include <vector>

namespace phasekit {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Uniform samples theta_i = theta0 + 2 pi i / M, i = 0..M-1.
class PhaseGrid {
 public:
  PhaseGrid(double theta0, int count);

  double theta0() const { return theta0_; }
  int count() const { return count_; }
  double spacing() const { return kTwoPi / count_; }
  double theta(int i) const { return theta0_ + kTwoPi * i / count_; }
  std::vector<double> samples() const;

 private:
  double theta0_;
  int count_;
};

enum class DistributionKind { wigner_radial, wigner_operator, pegg_barnett, closed_form };

std::string_view to_string(DistributionKind kind);

// Phase density sampled on a grid, in probability per radian.
struct PhaseDistribution {
  PhaseGrid grid;
  std::vector<double> values;
  DistributionKind kind;

  // Periodic rectangle rule over one period.
  double integral() const;
};

}  // namespace phasekit
