#include <cmath>
#include <numbers>
#include <random>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <gtest/gtest.h>

#include "phasekit/error.hpp"
#include "phasekit/pegg_barnett.hpp"
#include "phasekit/random.hpp"
#include "phasekit/wigner.hpp"

using namespace phasekit;
using std::numbers::pi;

TEST(PBBasis, SmallSpaces) {
  const auto b0 = pb_basis(0, -pi);
  ASSERT_EQ(b0.states.size(), 1u);
  EXPECT_NEAR(std::abs(b0.states[0][0] - 1.0), 0.0, 1e-15);

  const auto b1 = pb_basis(1, 0.0);
  const double h = 1 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(b1.states[0][0] - h) + std::abs(b1.states[0][1] - h), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(b1.states[1][0] - h) + std::abs(b1.states[1][1] + h), 0.0, 1e-15);
  EXPECT_NEAR(b1.theta(1), pi, 1e-15);
}

TEST(PBBasis, OrthonormalAndComplete) {
  for (int s : {7, 20, 63}) {
    const auto basis = pb_basis(s, 0.37);
    ComplexMatrix v(s + 1, s + 1);
    for (int m = 0; m <= s; ++m) v.col(m) = basis.states[m].amplitudes();
    const double tol = s == 7 ? 1e-12 : 1e-10;
    EXPECT_LE((v.adjoint() * v - ComplexMatrix::Identity(s + 1, s + 1)).cwiseAbs().maxCoeff(), tol);
    EXPECT_LE((v * v.adjoint() - ComplexMatrix::Identity(s + 1, s + 1)).cwiseAbs().maxCoeff(), tol);
  }
}

TEST(PBDensity, Examples) {
  const PhaseGrid grid(-pi, 720);
  for (int n : {0, 3, 11}) {
    const auto d = pb_density(make_number_state(n, 12), grid);
    EXPECT_EQ(d.kind, DistributionKind::pegg_barnett);
    for (double v : d.values) EXPECT_NEAR(v, 1 / (2 * pi), 1e-15);
  }
  for (int n : {1, 2}) {
    const auto d = pb_density(make_pair_state(n, 2 * n), grid);
    for (int i = 0; i < grid.count(); ++i) {
      EXPECT_NEAR(d.values[i], (1 + std::cos(2 * n * grid.theta(i))) / (2 * pi), 1e-12);
    }
  }
}

TEST(PBDensity, NonnegativeAndNormalized) {
  std::mt19937_64 rng(71);
  const PhaseGrid grid(-pi, 200);
  for (int trial = 0; trial < 6; ++trial) {
    const auto d = pb_density(random_state(20, 40, rng), grid);
    for (double v : d.values) EXPECT_GE(v, -1e-12);
    // Exact for trigonometric polynomials of degree < M.
    EXPECT_NEAR(d.integral(), 1.0, 1e-10);
  }
}

TEST(PBDensity, CovarianceSharesDirectionWithWigner) {
  const PhaseGrid grid(-pi, 120);
  std::mt19937_64 rng(73);
  const auto psi = random_state(5, 8, rng);
  const int shift = 13;
  const auto moved = phase_shift(psi, shift * grid.spacing());
  const auto pb0 = pb_density(psi, grid);
  const auto pb1 = pb_density(moved, grid);
  const auto w0 = phase_distribution_radial(density_from_pure(psi), grid);
  const auto w1 = phase_distribution_radial(density_from_pure(moved), grid);
  for (int i = 0; i < grid.count(); ++i) {
    const int src = ((i - shift) % grid.count() + grid.count()) % grid.count();
    EXPECT_NEAR(pb1.values[i], pb0.values[src], 1e-12);
    EXPECT_NEAR(w1.values[i], w0.values[src], 1e-8);
  }
  // Coherent state with phase pi/3 peaks at +pi/3 in both.
  const auto coh = make_coherent_state(std::polar(2.0, pi / 3), 40);
  const auto pb = pb_density(coh, grid);
  const auto w = phase_distribution_radial(density_from_pure(coh), grid);
  const auto pb_peak = std::max_element(pb.values.begin(), pb.values.end()) - pb.values.begin();
  const auto w_peak = std::max_element(w.values.begin(), w.values.end()) - w.values.begin();
  EXPECT_NEAR(grid.theta(static_cast<int>(pb_peak)), pi / 3, grid.spacing());
  EXPECT_NEAR(grid.theta(static_cast<int>(w_peak)), pi / 3, grid.spacing());
}

TEST(PhiS, SpectrumAndTrace) {
  EXPECT_NEAR(phi_s_matrix(0, -pi)(0, 0).real(), -pi, 1e-15);

  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es1(phi_s_matrix(1, 0.0).elems());
  EXPECT_NEAR(es1.eigenvalues()[0], 0.0, 1e-14);
  EXPECT_NEAR(es1.eigenvalues()[1], pi, 1e-14);

  for (int s : {5, 16, 33}) {
    const double theta0 = -pi;
    const auto phi = phi_s_matrix(s, theta0);
    EXPECT_TRUE(phi.hermitian_hint());
    EXPECT_NEAR(phi.elems().trace().real(), (s + 1) * theta0 + pi * s, 1e-11);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(phi.elems(), Eigen::EigenvaluesOnly);
    const auto basis = pb_basis(s, theta0);
    for (int m = 0; m <= s; ++m) EXPECT_NEAR(es.eigenvalues()[m], basis.theta(m), 1e-12);
  }
}

TEST(PhiMoment, LimitValues) {
  const auto pair = make_pair_state(1, 2);
  EXPECT_NEAR(phi_s_moment(8, -pi, pair, 1).limit, 0.0, 1e-12);
  EXPECT_NEAR(phi_s_moment(8, -pi, pair, 2).limit, pi * pi / 3 + 0.5, 1e-10);
  EXPECT_NEAR(phi_s_moment(8, -pi, pair, 2).limit, 3.789868, 1e-6);
  EXPECT_NEAR(phi_s_moment(8, -pi, make_number_state(0, 0), 2).limit, pi * pi / 3, 1e-12);

  // Independent adaptive quadrature.
  const double ref = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
      [&](double t) { return t * t * pb_density_at(pair, t); }, -pi, pi, 10, 1e-14);
  EXPECT_NEAR(phi_s_moment(8, -pi, pair, 2).limit, ref, 1e-12);
}

TEST(PhiMoment, SpectralMatchesMatrixPower) {
  std::mt19937_64 rng(79);
  const auto psi = random_state(4, 6, rng);
  const int s = 9;
  const auto phi = phi_s_matrix(s, 0.2).elems();
  const ComplexVector v = psi.padded(s).amplitudes();
  EXPECT_NEAR(phi_s_moment(s, 0.2, psi, 1).spectral, v.dot(phi * v).real(), 1e-12);
  EXPECT_NEAR(phi_s_moment(s, 0.2, psi, 2).spectral, v.dot(phi * (phi * v)).real(), 1e-11);
  EXPECT_NEAR(phi_s_moment(s, 0.2, psi, 3).spectral, v.dot(phi * (phi * (phi * v))).real(), 1e-10);
}

TEST(PhiMoment, RiemannSumIdentity) {
  const auto pair = make_pair_state(1, 2);
  std::mt19937_64 rng(83);
  const auto rnd = random_state(5, 7, rng);
  for (const auto& psi : {pair, rnd}) {
    for (int s = psi.cutoff(); s <= 300; s += 37) {
      for (int p : {1, 2, 3}) {
        double rect = 0.0;
        for (int m = 0; m <= s; ++m) {
          const double t = -pi + 2 * pi * m / (s + 1);
          rect += std::pow(t, p) * pb_density_at(psi, t) * 2 * pi / (s + 1);
        }
        EXPECT_NEAR(phi_s_moment(s, -pi, psi, p).spectral, rect, 1e-12) << s << " " << p;
      }
    }
  }
}

TEST(PhiMoment, ConvergenceSecondMoment) {
  const auto pair = make_pair_state(1, 2);
  double previous = 1e300;
  for (int s = 64; s <= 1024; s *= 2) {
    const auto m = phi_s_moment(s, -pi, pair, 2);
    const double gap = std::abs(m.spectral - m.limit);
    EXPECT_LT(gap, previous);
    previous = gap;
  }
  EXPECT_LE(previous, 1e-3);
}

TEST(PhiMoment, FirstMomentIsFirstOrder) {
  // The left-endpoint rule on theta P(theta) misses (h/2)(2 pi P(theta0));
  // the gap times (s+1) tends to 2 pi^2 P(theta0).
  for (const auto& psi : {make_number_state(0, 0), make_pair_state(1, 2)}) {
    const double constant = 2 * pi * pi * pb_density_at(psi, -pi);
    double previous = 1e300;
    for (int s = 64; s <= 1024; s *= 2) {
      const auto m = phi_s_moment(s, -pi, psi, 1);
      const double gap = std::abs(m.spectral - m.limit);
      EXPECT_LT(gap, previous);
      previous = gap;
      EXPECT_NEAR(gap * (s + 1), constant, 0.02 * constant) << s;
    }
  }
}

TEST(PhiMoment, Errors) {
  EXPECT_THROW(phi_s_moment(3, -pi, make_pair_state(2, 4), 2), CutoffTooSmall);
  EXPECT_THROW(phi_s_moment(8, -pi, make_pair_state(1, 2), 0), std::invalid_argument);
}

TEST(PBProjector, Properties) {
  for (int cutoff : {0, 4, 15}) {
    EXPECT_NEAR(pb_projector(1.1, cutoff).elems().trace().real(), (cutoff + 1) / (2 * pi), 1e-13);
    const auto p0 = pb_projector(0.0, cutoff);
    EXPECT_EQ((phase_conjugate(p0, 0.9).elems() - pb_projector(0.9, cutoff).elems()).norm(), 0.0);
    for (int n = 0; n <= cutoff; ++n) {
      EXPECT_NEAR(expectation(pb_projector(2.4, cutoff), density_from_pure(make_number_state(n, cutoff))).real(),
                  1 / (2 * pi), 1e-15);
    }
  }
  std::mt19937_64 rng(89);
  const auto psi = random_state(7, 9, rng);
  for (double t : {-3.0, 0.1, 2.2}) {
    EXPECT_NEAR(expectation(pb_projector(t, 9), density_from_pure(psi)).real(), pb_density_at(psi, t), 1e-14);
  }
}
