#include <cmath>
#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>

#include "phasekit/error.hpp"
#include "phasekit/state_spec.hpp"

using namespace phasekit;

TEST(ParseComplex, Forms) {
  EXPECT_EQ(parse_complex("-2"), Complex(-2.0, 0.0));
  EXPECT_EQ(parse_complex("1.5i"), Complex(0.0, 1.5));
  EXPECT_EQ(parse_complex("1-2i"), Complex(1.0, -2.0));
  EXPECT_EQ(parse_complex("i"), Complex(0.0, 1.0));
  EXPECT_EQ(parse_complex("-i"), Complex(0.0, -1.0));
  EXPECT_EQ(parse_complex("(0.5+0.25i)"), Complex(0.5, 0.25));
  EXPECT_EQ(parse_complex("1e-3+2e2i"), Complex(1e-3, 2e2));
  EXPECT_THROW(parse_complex("abc"), ParseError);
  EXPECT_THROW(parse_complex(""), ParseError);
}

TEST(ParseStateSpec, Kinds) {
  auto s = parse_state_spec("fock:n=2");
  EXPECT_EQ(s.kind, StateSpec::Kind::fock);
  EXPECT_EQ(s.n, 2);
  s = parse_state_spec("coherent:alpha=-2");
  EXPECT_EQ(s.kind, StateSpec::Kind::coherent);
  EXPECT_EQ(s.alpha, Complex(-2.0));
  s = parse_state_spec("pair:n=1");
  EXPECT_EQ(s.kind, StateSpec::Kind::pair);
  s = parse_state_spec("cat:alpha=-2,beta=8");
  EXPECT_EQ(s.kind, StateSpec::Kind::cat);
  EXPECT_EQ(s.beta, Complex(8.0));
  s = parse_state_spec("super:1*fock:n=0+(0+1i)*fock:n=2");
  ASSERT_EQ(s.kind, StateSpec::Kind::super);
  ASSERT_EQ(s.terms.size(), 2u);
  EXPECT_EQ(s.terms[1].weight, Complex(0.0, 1.0));
  EXPECT_EQ(s.terms[1].state.n, 2);
  s = parse_state_spec("super:0.5*coherent:alpha=1-1i-2*fock:n=3");
  ASSERT_EQ(s.terms.size(), 2u);
  EXPECT_EQ(s.terms[0].state.alpha, Complex(1.0, -1.0));
  EXPECT_EQ(s.terms[1].weight, Complex(-2.0));
}

TEST(ParseStateSpec, Errors) {
  for (const char* bad : {"", "fock", "fock:", "fock:n=x", "fock:m=2", "pair:n=0", "unknown:n=1",
                          "cat:alpha=1", "super:", "super:fock:n=1", "coherent:alpha=1,alpha=2x"}) {
    EXPECT_THROW(parse_state_spec(bad), ParseError) << bad;
  }
}

TEST(BuildState, PairAndCutoffs) {
  const auto spec = parse_state_spec("pair:n=2");
  EXPECT_EQ(minimal_cutoff(spec), 4);
  const auto psi = build_state(spec, minimal_cutoff(spec));
  EXPECT_NEAR(psi[0].real(), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(psi[4].real(), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_THROW(build_state(spec, 3), CutoffTooSmall);

  const auto cat = parse_state_spec("cat:alpha=-2,beta=8");
  // mean + 10 sqrt(mean) for |beta|^2 = 64
  EXPECT_EQ(minimal_cutoff(cat), 144);
  EXPECT_LT(coherent_tail_mass(64.0, 144), 1e-10);
  EXPECT_NO_THROW(build_state(cat, 144));
}

TEST(BuildState, SuperSpec) {
  const auto psi = build_state(parse_state_spec("super:1*fock:n=0+1i*fock:n=1"), 1);
  EXPECT_NEAR(std::abs(psi[0] - 1.0 / std::sqrt(2.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(psi[1] - Complex(0.0, 1.0 / std::sqrt(2.0))), 0.0, 1e-15);
  EXPECT_THROW(build_state(parse_state_spec("super:1*fock:n=0-1*fock:n=0"), 2), DegenerateSuperposition);
}

TEST(StateFile, RoundTrip) {
  const auto dir = std::filesystem::temp_directory_path() / "phasekit_state_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "psi.csv";
  const auto psi = build_state(parse_state_spec("coherent:alpha=0.7-1.1i"), 30);
  write_state_file(path, psi);
  const auto back = read_state_file(path);
  ASSERT_EQ(back.cutoff(), psi.cutoff());
  // Normalizing an already normalized vector may move the last bit.
  EXPECT_LE((back.amplitudes() - psi.amplitudes()).cwiseAbs().maxCoeff(), 4e-16);

  const auto spec = parse_state_spec("file:" + path.string());
  EXPECT_EQ(spec.kind, StateSpec::Kind::file);
  EXPECT_EQ(minimal_cutoff(spec), 30);

  std::ofstream(dir / "bad.csv") << "#cutoff=1\n0,1,0\n1,zz,0\n";
  EXPECT_THROW(read_state_file(dir / "bad.csv"), ParseError);
  std::filesystem::remove_all(dir);
}
