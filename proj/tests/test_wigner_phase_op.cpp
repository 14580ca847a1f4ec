#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "phasekit/error.hpp"
#include "phasekit/random.hpp"
#include "phasekit/wigner.hpp"
#include "phasekit/wigner_phase_op.hpp"

using namespace phasekit;
using std::numbers::pi;

namespace {

// The m sum of the triple sum is a binomial expansion of (1-2)^{k-l}, which
// leaves one alternating sum over l:
//   <j|rho_W(0)|k> = sqrt(j! k!)/(2pi) sum_l (-1)^{k-l} 2^{n/2} Gamma(n/2+1)
//                    / ((n-l)! l! (k-l)!),   n = j - k + 2l.
long double single_sum_oracle(int j, int k) {
  long double total = 0.0L;
  for (int l = std::max(0, k - j); l <= k; ++l) {
    const int n = j - k + 2 * l;
    const long double log_mag = 0.5L * n * std::log(2.0L) + std::lgamma(0.5L * n + 1.0L) -
                                std::lgamma(n - l + 1.0L) - std::lgamma(l + 1.0L) -
                                std::lgamma(k - l + 1.0L) +
                                0.5L * (std::lgamma(j + 1.0L) + std::lgamma(k + 1.0L));
    total += ((k - l) % 2 ? -1.0L : 1.0L) * std::exp(log_mag);
  }
  return total / (2.0L * std::numbers::pi_v<long double>);
}

}  // namespace

TEST(RhoWZero, SmallestCases) {
  const auto zero = rho_w_zero(0);
  ASSERT_EQ(zero.dim(), 1);
  EXPECT_NEAR(zero(0, 0).real(), 1 / (2 * pi), 1e-16);
  for (int cutoff : {1, 5, 17, 40}) EXPECT_NEAR(std::abs(rho_w_zero(cutoff)(0, 0) - 1 / (2 * pi)), 0.0, 1e-16);
  EXPECT_EQ(rho_w_zero_element(0, 0).term_count, 1);
}

TEST(RhoWZero, MatchesSingleSumOracle) {
  const auto w0 = rho_w_zero(14);
  for (int j = 0; j <= 14; ++j) {
    for (int k = 0; k <= 14; ++k) {
      const double oracle = static_cast<double>(single_sum_oracle(j, k));
      EXPECT_NEAR(w0(j, k).real(), oracle, 1e-11) << j << "," << k;
      EXPECT_EQ(w0(j, k).imag(), 0.0);
    }
  }
}

TEST(RhoWZero, SupportRuleTermCount) {
  for (int j = 0; j <= 9; ++j) {
    for (int k = 0; k <= 9; ++k) {
      long expected = 0;
      for (int l = std::max(0, k - j); l <= k; ++l) expected += k - l + 1;
      EXPECT_EQ(rho_w_zero_element(j, k).term_count, expected) << j << "," << k;
    }
  }
}

TEST(RhoWZero, HermitianAndUnitDiagonalAcrossValidatedRange) {
  for (int cutoff : {2, 10, 20, 40}) {
    const auto w0 = rho_w_zero(cutoff);
    EXPECT_TRUE(w0.hermitian_hint());
    EXPECT_LE(max_hermitian_deviation(w0.elems()), 1e-9);
    for (int n = 0; n <= cutoff; ++n) EXPECT_NEAR(w0(n, n).real(), 1 / (2 * pi), 1e-12) << n;
  }
}

TEST(RhoWZero, NotPositive) {
  for (int cutoff = 2; cutoff <= 12; ++cutoff) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho_w_zero(cutoff).elems(), Eigen::EigenvaluesOnly);
    EXPECT_LT(es.eigenvalues().minCoeff(), -1e-3) << cutoff;
  }
  // Regression anchor from the first run.
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho_w_zero(10).elems(), Eigen::EigenvaluesOnly);
  EXPECT_NEAR(es.eigenvalues().minCoeff(), -0.31601713378544677, 1e-9);
}

TEST(RhoWZero, CancellationOverflowBeyondSafeRange) {
  try {
    rho_w_zero(70);
    FAIL() << "expected CancellationOverflow";
  } catch (const CancellationOverflow& e) {
    EXPECT_GT(e.deviation(), 1e-9);
    EXPECT_GT(e.term_count(), 0);
    EXPECT_LE(std::max(e.row(), e.col()), 70);
  }
}

TEST(RhoW, Conjugation) {
  const auto w0 = rho_w_zero(8);
  EXPECT_EQ((rho_w(0.0, w0).elems() - w0.elems()).norm(), 0.0);
  EXPECT_LE((rho_w(0.7, 8).elems() - rho_w(0.7, w0).elems()).cwiseAbs().maxCoeff(), 0.0);
  const auto later = rho_w(2.1, w0);
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(later(n, n), w0(n, n));
  EXPECT_LE((rho_w(2 * pi, w0).elems() - w0.elems()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(RhoW, CompletenessRiemannSum) {
  const int cutoff = 9;
  const auto w0 = rho_w_zero(cutoff);
  const PhaseGrid grid(-pi, 2 * cutoff + 2);
  ComplexMatrix total = ComplexMatrix::Zero(cutoff + 1, cutoff + 1);
  for (int i = 0; i < grid.count(); ++i) total += rho_w(grid.theta(i), w0).elems() * grid.spacing();
  ComplexMatrix off = total;
  off.diagonal().setZero();
  EXPECT_LE(off.cwiseAbs().maxCoeff(), 1e-12);
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 4; ++trial) {
    const auto rho = density_from_pure(random_state(6, cutoff, rng));
    EXPECT_NEAR(std::abs(expectation(OperatorMatrix::general(total), rho) - 1.0), 0.0, 1e-8);
  }
}

TEST(OperatorPath, PairStates) {
  EXPECT_NEAR(expectation(rho_w_zero(2), density_from_pure(make_pair_state(1, 2))).real(),
              (1 + std::sqrt(2.0)) / (2 * pi), 1e-14);
  const PhaseGrid grid(-pi, 720);
  for (int n : {1, 2}) {
    const auto dist = phase_distribution_operator(density_from_pure(make_pair_state(n, 20)), grid);
    EXPECT_EQ(dist.kind, DistributionKind::wigner_operator);
    const double c = n == 1 ? std::sqrt(2.0) : 8 / std::sqrt(24.0);
    for (int i = 0; i < grid.count(); ++i) {
      EXPECT_NEAR(dist.values[i], (1 + c * std::cos(2 * n * grid.theta(i))) / (2 * pi), 1e-8);
    }
  }
  const auto vac = phase_distribution_operator(density_from_pure(make_number_state(0, 6)), grid);
  for (double v : vac.values) EXPECT_NEAR(v, 1 / (2 * pi), 1e-15);
}

TEST(OperatorPath, AgreesWithRadialPath) {
  const PhaseGrid grid(-pi, 180);
  std::mt19937_64 rng(67);
  for (int cutoff : {5, 12, 40}) {
    std::vector<StateVector> at_cutoff = {make_number_state(0, cutoff), make_number_state(3, cutoff),
                                          make_pair_state(1, cutoff), make_pair_state(2, cutoff),
                                          random_state(5, cutoff, rng)};
    if (cutoff >= 12) at_cutoff.push_back(make_coherent_state(1.0, cutoff));
    for (const auto& psi : at_cutoff) {
      const auto rho = density_from_pure(psi);
      const auto a = phase_distribution_operator(rho, grid);
      const auto b = phase_distribution_radial(rho, grid);
      for (int i = 0; i < grid.count(); ++i) EXPECT_NEAR(a.values[i], b.values[i], 1e-7);
    }
  }
}

TEST(OperatorPath, RefusesUnvalidatedCutoff) {
  const PhaseGrid grid(-pi, 16);
  EXPECT_THROW(phase_distribution_operator(density_from_pure(make_number_state(0, 41)), grid),
               PathUnavailable);
}

TEST(ClosedForm, Values) {
  EXPECT_NEAR(pair_state_coefficient(1), std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(pair_state_coefficient(2), 8 / std::sqrt(24.0), 1e-15);
  EXPECT_NEAR(pair_state_coefficient(2), 1.632993, 1e-6);
  const PhaseGrid grid(0.0, 8);  // samples at multiples of pi/4
  const auto one = closed_form_pair_state(1, grid);
  EXPECT_NEAR(one.values[0], (1 + std::sqrt(2.0)) / (2 * pi), 1e-15);
  EXPECT_NEAR(one.values[2], (1 - std::sqrt(2.0)) / (2 * pi), 1e-15);
  const auto two = closed_form_pair_state(2, grid);
  EXPECT_NEAR(two.values[1], (1 - 8 / std::sqrt(24.0)) / (2 * pi), 1e-15);
  EXPECT_NEAR(two.values[1], -0.1007441, 1e-6);
  const auto pb = closed_form_pair_state_pb(2, grid);
  EXPECT_NEAR(pb.values[1], 0.0, 1e-15);
  EXPECT_EQ(one.kind, DistributionKind::closed_form);
}
