#include <cmath>

#include "doctest.h"
#include "multiwell/hyperbolic.hpp"
#include "multiwell/matrix.hpp"
#include "multiwell/quadrature.hpp"

using namespace multiwell;

TEST_CASE("guarded hyperbolic evaluations") {
  CHECK(hyperbolic::sech(0.0) == 1.0);
  CHECK(hyperbolic::sech(5.0) ==
        doctest::Approx(1.0 / std::cosh(5.0)).epsilon(1e-15));
  CHECK(hyperbolic::sech(-5.0) == hyperbolic::sech(5.0));
  CHECK(hyperbolic::sech(800.0) == 0.0);  // no overflow on the way

  CHECK(hyperbolic::csch(1.0) ==
        doctest::Approx(1.0 / std::sinh(1.0)).epsilon(1e-15));
  CHECK(hyperbolic::csch(400.0) == 0.0);  // underflow guard
  CHECK(hyperbolic::csch(-400.0) == 0.0);
  // series region joins the direct evaluation smoothly
  CHECK(hyperbolic::csch(9.9e-5) ==
        doctest::Approx(1.0 / std::sinh(9.9e-5)).epsilon(1e-13));
  CHECK(hyperbolic::csch(1.01e-4) ==
        doctest::Approx(1.0 / std::sinh(1.01e-4)).epsilon(1e-13));

  CHECK(hyperbolic::d_csch_d(0.0) == 1.0);
  CHECK(hyperbolic::d_csch_d(1e-9) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(hyperbolic::d_csch_d(2.0) ==
        doctest::Approx(2.0 / std::sinh(2.0)).epsilon(1e-15));
  CHECK(hyperbolic::d_csch_d(400.0) == 0.0);
}

TEST_CASE("quadrature reproduces closed-form integrals") {
  const auto sech = [](double x) { return hyperbolic::sech(x); };
  CHECK(quadrature([&](double x) { const double s = sech(x); return 0.5 * s * s; },
                   -30.0, 30.0, 1e-13) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(quadrature(
            [&](double x) {
              const double s = sech(x);
              return s * s * s * s;
            },
            -30.0, 30.0, 1e-12) ==
        doctest::Approx(4.0 / 3.0).epsilon(1e-11));
  // overlap of two shifted seed states at separation 10: 10 csch 10
  const double overlap = quadrature(
      [&](double x) { return 0.5 * sech(x + 5.0) * sech(x - 5.0); }, -30.0,
      30.0, 1e-13);
  CHECK(std::abs(overlap - 10.0 / std::sinh(10.0)) < 1e-10);
}

TEST_CASE("quadrature diagnostics and validation") {
  CHECK_THROWS_AS(quadrature([](double) { return 1.0; }, 1.0, 0.0, 1e-10),
                  std::invalid_argument);
  CHECK_THROWS_AS(quadrature([](double) { return 1.0; }, 0.0, 1.0, -1.0),
                  std::invalid_argument);

  // subdivision limit: oscillation far below panel resolution
  QuadratureOptions opts;
  opts.abs_tol = 1e-15;
  opts.max_panels = 12;
  bool thrown = false;
  try {
    quadrature([](double x) { return std::cos(1000.0 * x); }, 0.0, 3.37,
               opts);
  } catch (const QuadratureError& e) {
    thrown = true;
    CHECK(std::isfinite(e.best_estimate));
    CHECK(e.achieved_error > 1e-15);
  }
  CHECK(thrown);
}

TEST_CASE("dispersion of reference densities") {
  const auto seed_density = [](double x) {
    const double s = hyperbolic::sech(x);
    return 0.5 * s * s;
  };
  // <x^2> = pi^2/12 for the sech^2/2 density
  CHECK(dispersion(seed_density, -30.0, 30.0) ==
        doctest::Approx(M_PI / std::sqrt(12.0)).epsilon(1e-9));
  // symmetric density has vanishing first moment
  const double mean =
      quadrature([&](double x) { return x * seed_density(x); }, -30.0, 30.0,
                 1e-13);
  CHECK(std::abs(mean) < 1e-12);
}

TEST_CASE("small dense symmetric eigenvalues") {
  Matrix diag3(3);
  diag3(0, 0) = 3.0;
  diag3(1, 1) = 1.0;
  diag3(2, 2) = 2.0;
  const auto eigs = symmetric_eigenvalues(diag3);
  CHECK(eigs[0] == doctest::Approx(1.0));
  CHECK(eigs[1] == doctest::Approx(2.0));
  CHECK(eigs[2] == doctest::Approx(3.0));

  Matrix coupled(2);
  coupled(0, 0) = 2.0;
  coupled(1, 1) = 2.0;
  coupled(0, 1) = coupled(1, 0) = 1.0;
  const auto pair = symmetric_eigenvalues(coupled);
  CHECK(pair[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(pair[1] == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(smallest_eigenvalue(coupled) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("generalized symmetric-definite eigenvalues") {
  // A = S: every generalized eigenvalue is 1
  Matrix s(2);
  s(0, 0) = 1.0;
  s(1, 1) = 1.0;
  s(0, 1) = s(1, 0) = 0.4;
  const auto ones = generalized_eigenvalues(s, s);
  CHECK(ones[0] == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(ones[1] == doctest::Approx(1.0).epsilon(1e-13));

  // 1D check: a x = mu s x reduces to mu = a/s
  Matrix a1(1), s1(1);
  a1(0, 0) = -3.0;
  s1(0, 0) = 2.0;
  CHECK(generalized_eigenvalues(a1, s1)[0] == doctest::Approx(-1.5));

  // indefinite metric is rejected
  Matrix bad(2);
  bad(0, 0) = 1.0;
  bad(1, 1) = -1.0;
  CHECK_THROWS_AS(generalized_eigenvalues(bad, bad), std::invalid_argument);
}
