#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "multiwell/eigensolver.hpp"
#include "multiwell/hyperbolic.hpp"
#include "multiwell/potential_core.hpp"

using namespace multiwell;

namespace {

WellSpec symmetric_triple(double lambda, double a) {
  return WellSpec(sech_seed(),
                  WeightTuple({1.0 - lambda, 0.5 * lambda, 0.5 * lambda}),
                  ShiftTuple({0.0, a, -a}));
}

WellSpec random_spec(std::mt19937& rng) {
  std::uniform_int_distribution<int> size_dist(2, 5);
  std::uniform_real_distribution<double> weight_dist(0.1, 1.0);
  std::uniform_real_distribution<double> shift_dist(-15.0, 15.0);
  const int n = size_dist(rng);
  std::vector<double> weights(n), shifts(n);
  double sum = 0.0;
  for (double& w : weights) {
    w = weight_dist(rng);
    sum += w;
  }
  for (double& w : weights) w /= sum;
  for (double& s : shifts) s = shift_dist(rng);
  return WellSpec(sech_seed(), WeightTuple(weights), ShiftTuple(shifts));
}

}  // namespace

TEST_CASE("the canonical seed passes its own audit") {
  const SeedCheckReport report = check_seed(sech_seed());
  CHECK(report.norm_deviation < 1e-10);
  CHECK(report.max_residual < 1e-5);
  CHECK(report.min_ground_state > 0.0);
  CHECK(report.bounds_violation == 0.0);
  CHECK(report.ok());
}

TEST_CASE("tuple validation rejects broken input") {
  CHECK_THROWS_AS(WeightTuple({0.5, 0.6}), std::invalid_argument);   // sum != 1
  CHECK_THROWS_AS(WeightTuple({1.5, -0.5}), std::invalid_argument);  // negative
  CHECK_THROWS_AS(WeightTuple({}), std::invalid_argument);
  CHECK_THROWS_AS(WeightTuple({0.5, 0.5 + 1e-10}), std::invalid_argument);
  CHECK_NOTHROW(WeightTuple({0.5, 0.5 + 1e-13}));  // within rounding allowance

  CHECK_THROWS_AS(ShiftTuple({0.0, std::nan("")}), std::invalid_argument);
  CHECK_THROWS_AS(ShiftTuple({std::numeric_limits<double>::infinity()}),
                  std::invalid_argument);

  CHECK_THROWS_AS(WellSpec(sech_seed(), WeightTuple({1.0}),
                           ShiftTuple({0.0, 1.0})),
                  std::invalid_argument);

  const ShiftTuple shifts({-3.0, 0.0, 7.0});
  CHECK(shifts.spread() == 10.0);
  CHECK(shifts.max_abs() == 7.0);
}

TEST_CASE("xi collapses, evaluates and mirrors") {
  const WellSpec single(sech_seed(), WeightTuple({1.0}), ShiftTuple({0.0}));
  for (double x : {-4.0, -0.3, 0.0, 1.7, 9.0})
    CHECK(xi(single, x) == sech_seed().ground_state(x));

  const WellSpec triple = symmetric_triple(2.0 / 3.0, 5.0);
  // (1/sqrt2)(1/3)(1 + 2 sech 5)
  CHECK(xi(triple, 0.0) ==
        doctest::Approx(0.24205456935357383).epsilon(1e-14));

  // mirrored spec: A -> -A with paired weights leaves xi(x) = xi_mirror(-x)
  const WellSpec skewed(sech_seed(), WeightTuple({0.2, 0.5, 0.3}),
                        ShiftTuple({-1.0, 2.0, 6.0}));
  const WellSpec mirrored(sech_seed(), WeightTuple({0.2, 0.5, 0.3}),
                          ShiftTuple({1.0, -2.0, -6.0}));
  for (double x = -8.0; x <= 8.0; x += 0.37)
    CHECK(xi(skewed, x) == doctest::Approx(xi(mirrored, -x)).epsilon(1e-14));
}

TEST_CASE("synthesized potential: collapse, sandwich and range") {
  const WellSpec shifted_single(sech_seed(), WeightTuple({1.0}),
                                ShiftTuple({2.5}));
  for (double x : {-3.0, 0.0, 0.9})
    CHECK(synth_potential(shifted_single, x) ==
          doctest::Approx(sech_seed().potential(x + 2.5)).epsilon(1e-15));

  std::mt19937 rng(7u);
  for (int trial = 0; trial < 8; ++trial) {
    const WellSpec spec = random_spec(rng);
    for (double x = -20.0; x <= 20.0; x += 0.83) {
      const double v = synth_potential(spec, x);
      double lo = 0.0, hi = -2.0;
      for (double a : spec.shifts.values()) {
        lo = std::min(lo, sech_seed().potential(x + a));
        hi = std::max(hi, sech_seed().potential(x + a));
      }
      CHECK(v >= lo - 1e-12);
      CHECK(v <= hi + 1e-12);
      CHECK(v >= -2.0);
      CHECK(v < 0.0);
    }
  }

  CHECK(synth_potential(symmetric_triple(2.0 / 3.0, 5.0), 0.0) ==
        doctest::Approx(-1.9475229449108546).epsilon(1e-13));
}

TEST_CASE("overlap matrix: closed form, quadrature fallback, decay") {
  const WellSpec triple = symmetric_triple(1.0 / 3.0, 5.0);
  const Matrix closed = overlap_matrix(triple);
  for (std::size_t i = 0; i < 3; ++i) CHECK(closed(i, i) == 1.0);
  CHECK(closed(0, 1) == doctest::Approx(5.0 / std::sinh(5.0)).epsilon(1e-14));
  CHECK(closed(1, 2) == doctest::Approx(10.0 / std::sinh(10.0)).epsilon(1e-14));

  // strip the closed form: the quadrature route must agree
  SolvableSeed plain = sech_seed();
  plain.overlap_closed_form = nullptr;
  const WellSpec quad_spec(plain, triple.weights, triple.shifts);
  const Matrix quad = overlap_matrix(quad_spec);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      CHECK(std::abs(quad(i, j) - closed(i, j)) < 1e-10);

  // monotone decrease with separation
  double previous = 1.0;
  for (double d : {2.0, 5.0, 8.0, 12.0, 20.0}) {
    const WellSpec pair(sech_seed(), WeightTuple({0.5, 0.5}),
                        ShiftTuple({0.0, d}));
    const double value = overlap_matrix(pair)(0, 1);
    CHECK(value > 0.0);
    CHECK(value < previous);
    previous = value;
  }
}

TEST_CASE("ground normalization constant") {
  const WellSpec single(sech_seed(), WeightTuple({1.0}), ShiftTuple({3.0}));
  CHECK(ground_alpha(single) == doctest::Approx(1.0).epsilon(1e-12));

  const WellSpec triple = symmetric_triple(1.0 / 3.0 * 2.0, 5.0);
  CHECK(ground_alpha(triple) ==
        doctest::Approx(1.6586624271186479).epsilon(1e-12));

  std::mt19937 rng(17u);
  for (int trial = 0; trial < 6; ++trial) {
    const WellSpec spec = random_spec(rng);
    const double alpha = ground_alpha(spec);
    const double upper = 1.0 / std::sqrt(spec.weights.sum_squares());
    CHECK(alpha > 1.0);
    CHECK(alpha < upper);
  }
}

TEST_CASE("exact ground state of the synthesized potential") {
  const WellSpec single(sech_seed(), WeightTuple({1.0}), ShiftTuple({0.0}));
  CHECK(ground_wavefunction(single, 0.7) ==
        doctest::Approx(sech_seed().ground_state(0.7)).epsilon(1e-12));

  const WellSpec triple = symmetric_triple(2.0 / 3.0, 5.0);
  CHECK(ground_wavefunction(triple, 0.0) ==
        doctest::Approx(0.40148681949915785).epsilon(1e-12));

  const GroundState ground = ground_state(triple);
  // normalized within quadrature tolerance
  CHECK(quadrature([&](double x) { return ground.density(x); }, -30.0, 30.0,
                   1e-12) == doctest::Approx(1.0).epsilon(1e-8));
  // strictly positive
  for (double x = -25.0; x <= 25.0; x += 0.37) CHECK(ground(x) > 0.0);

  // eigen-residual of the exact pair on an h = 1e-3 grid
  GridSpec grid;
  grid.x_min = -15.0;
  grid.x_max = 15.0;
  grid.n_points = 30001;
  const double res = residual(
      [&](double x) { return synth_potential(triple, x); },
      sech_seed().ground_energy, [&](double x) { return ground(x); }, grid);
  CHECK(res < 1e-6);

  // a lopsided four-well spec passes the same residual check
  const WellSpec quad(sech_seed(), WeightTuple({0.4, 0.3, 0.2, 0.1}),
                      ShiftTuple({-6.0, -1.0, 3.0, 8.0}));
  const GroundState quad_ground = ground_state(quad);
  const double quad_res = residual(
      [&](double x) { return synth_potential(quad, x); },
      sech_seed().ground_energy, [&](double x) { return quad_ground(x); },
      grid);
  CHECK(quad_res < 1e-6);
}

TEST_CASE("density decomposition and its classical limit") {
  const WellSpec single(sech_seed(), WeightTuple({1.0}), ShiftTuple({0.0}));
  const DensityDecomposition trivial = density_decomposition(single);
  CHECK(trivial.weights.size() == 1);
  CHECK(trivial.weights[0] == doctest::Approx(1.0).epsilon(1e-12));
  for (double x : {-2.0, 0.0, 1.0}) CHECK(std::abs(trivial.overlap_term(x)) < 1e-14);

  const WellSpec triple = symmetric_triple(2.0 / 3.0, 7.0);
  const DensityDecomposition parts = density_decomposition(triple);
  const GroundState ground = ground_state(triple);
  for (int i = 0; i < 1000; ++i) {
    const double x = -17.0 + 34.0 * i / 999.0;
    double reassembled = parts.overlap_term(x);
    for (std::size_t n = 0; n < parts.weights.size(); ++n)
      reassembled += parts.weights[n] * parts.components[n](x);
    CHECK(std::abs(reassembled - ground.density(x)) < 1e-12);
  }

  // overlap term fades relative to the incoherent sum as wells separate
  double previous = std::numeric_limits<double>::max();
  for (double a : {4.0, 8.0, 12.0, 16.0, 20.0}) {
    const WellSpec spec = symmetric_triple(2.0 / 3.0, a);
    const DensityDecomposition d = density_decomposition(spec);
    double incoherent = 0.0;
    for (std::size_t n = 0; n < d.weights.size(); ++n)
      incoherent += d.weights[n] * d.components[n](0.0);
    const double ratio = d.overlap_term(0.0) / incoherent;
    CHECK(ratio < previous);
    previous = ratio;
  }
}

TEST_CASE("classical density") {
  const WellSpec single(sech_seed(), WeightTuple({1.0}), ShiftTuple({0.0}));
  for (double x : {-1.0, 0.0, 2.0}) {
    const double p = sech_seed().ground_state(x);
    CHECK(classical_density(single, x) == doctest::Approx(p * p).epsilon(1e-14));
  }

  const WellSpec triple = symmetric_triple(2.0 / 3.0, 6.0);
  CHECK(quadrature([&](double x) { return classical_density(triple, x); },
                   -31.0, 31.0, 1e-12) == doctest::Approx(1.0).epsilon(1e-8));

  const auto l1_distance = [](double a) {
    const WellSpec spec = symmetric_triple(2.0 / 3.0, a);
    const GroundState g = ground_state(spec);
    return quadrature(
        [&](double x) {
          return std::abs(g.density(x) - classical_density(spec, x));
        },
        -(a + 25.0), a + 25.0, 1e-9);
  };
  CHECK(l1_distance(20.0) < l1_distance(4.0));
}

TEST_CASE("oracle agrees with the construction on a two-well spec") {
  const WellSpec pair(sech_seed(), WeightTuple({0.35, 0.65}),
                      ShiftTuple({-2.0, 4.0}));
  const GridSpec grid = symmetric_grid(29.0, 0.005, Parity::none);
  const Spectrum spectrum = lowest_eigenpairs(
      [&](double x) { return synth_potential(pair, x); }, grid, 1);
  CHECK(spectrum.energies[0] == doctest::Approx(-1.0).epsilon(1e-4));
}

TEST_CASE("duplicate shifts merge their weights") {
  const WellSpec split(sech_seed(), WeightTuple({0.3, 0.3, 0.4}),
                       ShiftTuple({1.0, 1.0, -2.0}));
  const WellSpec merged(sech_seed(), WeightTuple({0.6, 0.4}),
                        ShiftTuple({1.0, -2.0}));
  for (double x = -8.0; x <= 8.0; x += 0.41) {
    CHECK(xi(split, x) == doctest::Approx(xi(merged, x)).epsilon(1e-14));
    CHECK(synth_potential(split, x) ==
          doctest::Approx(synth_potential(merged, x)).epsilon(1e-14));
  }
  CHECK(ground_alpha(split) ==
        doctest::Approx(ground_alpha(merged)).epsilon(1e-12));
}
