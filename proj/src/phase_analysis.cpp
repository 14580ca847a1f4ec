#include "phasekit/phase_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "phasekit/error.hpp"
#include "phasekit/pegg_barnett.hpp"

namespace phasekit {

double weak_equivalence_scan(const OperatorFamily& op_at, int cutoff, const PhaseGrid& grid) {
  const int count = grid.count();
  std::vector<OperatorMatrix> ops;
  std::vector<OperatorMatrix> projectors;
  ops.reserve(count);
  projectors.reserve(count);
  for (int i = 0; i < count; ++i) {
    ops.push_back(op_at(grid.theta(i)));
    if (ops.back().cutoff() != cutoff) {
      throw CutoffMismatch("operator family returned cutoff " +
                           std::to_string(ops.back().cutoff()) + ", expected " +
                           std::to_string(cutoff));
    }
    projectors.push_back(pb_projector(grid.theta(i), cutoff));
  }

  std::vector<double> lo(count, std::numeric_limits<double>::infinity());
  std::vector<double> hi(count, -std::numeric_limits<double>::infinity());
  for (int i = 0; i < count; ++i) {
    const ComplexMatrix& a = ops[i].elems();
    for (int j = 0; j < count; ++j) {
      // Re Tr[A P] = Re sum_jk A_jk P_kj
      const double f = (a.transpose().cwiseProduct(projectors[j].elems())).sum().real();
      const int cls = ((i - j) % count + count) % count;
      lo[cls] = std::min(lo[cls], f);
      hi[cls] = std::max(hi[cls], f);
    }
  }
  double spread = 0.0;
  for (int c = 0; c < count; ++c) spread = std::max(spread, hi[c] - lo[c]);
  return spread;
}

Complex fourier_poly_integral(int p, int q, double theta0) {
  if (p < 0) throw std::invalid_argument("polynomial degree must be >= 0");
  const double a = theta0;
  const double b = theta0 + kTwoPi;
  if (q == 0) return (std::pow(b, p + 1) - std::pow(a, p + 1)) / (p + 1);
  // e^{iqb} = e^{iqa} for integer q, so each boundary term is
  // (b^k - a^k) e^{iqa} / (iq) and I_0 vanishes.
  const Complex iq(0.0, static_cast<double>(q));
  const Complex edge = std::polar(1.0, q * a);
  Complex value = 0.0;
  for (int k = 1; k <= p; ++k) {
    value = ((std::pow(b, k) - std::pow(a, k)) * edge - static_cast<double>(k) * value) / iq;
  }
  return value;
}

OperatorMatrix build_moment_operator(int p, double theta0, const OperatorMatrix& rho_w0) {
  const int dim = rho_w0.dim();
  std::vector<Complex> integrals(2 * dim - 1);
  for (int q = -(dim - 1); q <= dim - 1; ++q) {
    integrals[q + dim - 1] = fourier_poly_integral(p, q, theta0);
  }
  ComplexMatrix m(dim, dim);
  for (int k = 0; k < dim; ++k) {
    for (int j = 0; j < dim; ++j) m(j, k) = rho_w0(j, k) * integrals[j - k + dim - 1];
  }
  if (max_hermitian_deviation(m) > 1e-9) {
    throw KernelInconsistency("moment operator M_" + std::to_string(p) + " is not Hermitian");
  }
  m = (0.5 * (m + m.adjoint())).eval();
  return OperatorMatrix::hermitian(std::move(m));
}

OperatorMatrix build_moment_operator(int p, double theta0, int cutoff, int max_cutoff) {
  if (cutoff > max_cutoff) {
    throw PathUnavailable("moment operator needs the operator path, validated up to cutoff " +
                          std::to_string(max_cutoff));
  }
  return build_moment_operator(p, theta0, rho_w_zero(cutoff));
}

OperatorMatrix build_Q(double theta0, int cutoff, int max_cutoff) {
  return build_moment_operator(1, theta0, cutoff, max_cutoff);
}

double sampled_moment(const PhaseDistribution& dist, int p) {
  const PhaseGrid& grid = dist.grid;
  const int m = grid.count();
  const int degree = (m - 1) / 2;
  double total = 0.0;
  for (int d = -degree; d <= degree; ++d) {
    Complex c = 0.0;
    for (int i = 0; i < m; ++i) c += dist.values[i] * std::polar(1.0, -d * grid.theta(i));
    total += (c / static_cast<double>(m) * fourier_poly_integral(p, d, grid.theta0())).real();
  }
  return total;
}

QMomentMismatch q_moment_mismatch(const DensityMatrix& rho, double theta0, int p, int max_cutoff) {
  if (p < 1) throw std::invalid_argument("moment order must be >= 1");
  if (rho.cutoff() > max_cutoff) {
    throw PathUnavailable("Q moments need the operator path, validated up to cutoff " +
                          std::to_string(max_cutoff));
  }
  const OperatorMatrix w0 = rho_w_zero(rho.cutoff());
  const OperatorMatrix q = build_moment_operator(1, theta0, w0);
  ComplexMatrix q_power = q.elems();
  for (int k = 1; k < p; ++k) q_power = (q_power * q.elems()).eval();

  QMomentMismatch out;
  out.lhs = expectation(OperatorMatrix::general(std::move(q_power)), rho).real();
  out.rhs = expectation(build_moment_operator(p, theta0, w0), rho).real();
  out.gap = std::abs(out.lhs - out.rhs);
  return out;
}

NegativityReport negativity_report(const PhaseDistribution& dist) {
  if (dist.values.empty()) throw std::invalid_argument("empty distribution");
  NegativityReport out;
  const auto it = std::min_element(dist.values.begin(), dist.values.end());
  out.min_value = *it;
  out.argmin = dist.grid.theta(static_cast<int>(it - dist.values.begin()));
  const auto negative =
      std::count_if(dist.values.begin(), dist.values.end(), [](double v) { return v < -1e-12; });
  out.negative_fraction = static_cast<double>(negative) / dist.values.size();
  return out;
}

}  // namespace phasekit
