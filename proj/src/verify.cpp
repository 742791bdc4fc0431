#include "multiwell/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

#include "multiwell/eigensolver.hpp"
#include "multiwell/kernels.hpp"
#include "multiwell/potential_core.hpp"
#include "multiwell/quadrature.hpp"
#include "multiwell/scaling.hpp"
#include "multiwell/triple_well.hpp"
#include "multiwell/variational.hpp"
#include "multiwell/version.hpp"

namespace multiwell {

namespace {

const double k_e0 = -1.0;
const std::vector<double> k_lambda_grid = {0.1, 0.3, 0.5, 2.0 / 3.0, 0.9};
const std::vector<double> k_a_grid = {1.0, 2.0, 4.0, 5.0, 7.0, 10.0};

// independently recomputed closed-form reference values (30-digit arithmetic)
const double k_f10_spec = 4.95e-7;             // as specified, margin 3.2e-10
const double k_f4_0999 = 3.2051130644593077e-2;  // Eq.-faithful at lambda=0.999
const double k_f4_quoted = 3.203e-2;           // matches the lambda->1 supremum
const double k_mean_v_exact = -4.0 / 3.0;
const double k_seed_dispersion = 0.90689968211710892;  // pi/sqrt(12)

struct CheckSet {
  std::vector<Check>* checks;
  std::vector<Discrepancy>* flags;
  double tol_scale;

  void within(int criterion, const char* suite, std::string name,
              double computed, double expected, double tol,
              std::string note = {}) {
    const double t = tol * tol_scale;
    checks->push_back({criterion, suite, std::move(name), "within tol of",
                       computed, expected, t,
                       std::abs(computed - expected) <= t, std::move(note)});
  }
  void at_least(int criterion, const char* suite, std::string name,
                double computed, double bound, double tol,
                std::string note = {}) {
    const double t = tol * tol_scale;
    checks->push_back({criterion, suite, std::move(name), ">=", computed,
                       bound, t, computed >= bound - t, std::move(note)});
  }
  void at_most(int criterion, const char* suite, std::string name,
               double computed, double bound, double tol,
               std::string note = {}) {
    const double t = tol * tol_scale;
    checks->push_back({criterion, suite, std::move(name), "<=", computed,
                       bound, t, computed <= bound + t, std::move(note)});
  }
  void failed(int criterion, const char* suite, std::string name,
              std::string why) {
    checks->push_back({criterion, suite, std::move(name), "ran", 0.0, 0.0, 0.0,
                       false, std::move(why)});
  }
  void flag(std::string id, std::string description, double claimed,
            double computed) {
    flags->push_back(
        {std::move(id), std::move(description), claimed, computed});
  }
};

std::vector<double> sample_full_grid(const TripleParams& p,
                                     const GridSpec& grid) {
  std::vector<double> xs(grid.n_points), values(grid.n_points);
  const double h = grid.step();
  for (std::size_t i = 0; i < grid.n_points; ++i)
    xs[i] = grid.x_min + static_cast<double>(i) * h;
  v3_grid(p, xs.data(), values.data(), xs.size());
  return values;
}

// --- criterion 1: exact ground level and ground vector on the (lambda,a) grid

void criterion_1(CheckSet& out, const VerifyOptions& opts) {
  double worst_energy = 0.0, worst_distance = 0.0;
  try {
    for (double lambda : k_lambda_grid) {
      for (double a : k_a_grid) {
        const TripleParams p(lambda, a);
        const GridSpec grid =
            symmetric_grid(a + 25.0, opts.oracle_step, Parity::even);
        const std::vector<double> v_full = sample_full_grid(p, grid);
        const Spectrum spectrum =
            lowest_eigenpairs(std::span<const double>(v_full), grid, 1);
        worst_energy =
            std::max(worst_energy, std::abs(spectrum.energies[0] - k_e0));

        const std::vector<double> oracle_vec = spectrum.vector_on_full_grid(0);
        const std::vector<double> xs = spectrum.full_abscissae();
        std::vector<double> exact(xs.size());
        psi3_grid(p, xs.data(), exact.data(), xs.size());
        const double h = grid.step();
        const double norm =
            std::sqrt(h * kernels::dot(exact.data(), exact.data(), exact.size()));
        double dist_sq = 0.0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
          const double d = oracle_vec[i] - exact[i] / norm;
          dist_sq += d * d;
        }
        worst_distance = std::max(worst_distance, std::sqrt(h * dist_sq));
      }
    }
    out.within(1, "construction",
               "oracle ground energy = -1 over the (lambda,a) grid",
               k_e0 + worst_energy, k_e0, 1e-4,
               "worst deviation across 30 parameter points");
    out.at_most(1, "construction",
                "grid-L2 distance of oracle ground vector from exact",
                worst_distance, 1e-3, 0.0,
                "worst distance across 30 parameter points");
  } catch (const std::exception& e) {
    out.failed(1, "construction", "exact-ground verification", e.what());
  }
}

// --- criterion 2: general-N construction with random weights and shifts

void criterion_2(CheckSet& out, const VerifyOptions& opts) {
  try {
    std::mt19937 rng(20250809u);
    std::uniform_real_distribution<double> weight_dist(0.1, 1.0);
    std::uniform_real_distribution<double> shift_dist(-15.0, 15.0);
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
      const std::size_t n = 2 + (rng() % 4);
      std::vector<double> lambdas(n), shifts(n);
      double sum = 0.0;
      for (double& l : lambdas) {
        l = weight_dist(rng);
        sum += l;
      }
      for (double& l : lambdas) l /= sum;
      for (double& s : shifts) s = shift_dist(rng);

      const WellSpec spec(sech_seed(), WeightTuple(lambdas), ShiftTuple(shifts));
      const GridSpec grid = symmetric_grid(spec.shifts.max_abs() + 25.0,
                                           opts.oracle_step, Parity::none);
      const Spectrum spectrum = lowest_eigenpairs(
          [&](double x) { return synth_potential(spec, x); }, grid, 1);
      worst = std::max(worst, std::abs(spectrum.energies[0] - k_e0));
    }
    out.within(2, "construction",
               "oracle ground energy = -1 for 5 random N-well specs",
               k_e0 + worst, k_e0, 1e-4, "N in {2..5}, shifts in [-15,15]");
  } catch (const std::exception& e) {
    out.failed(2, "construction", "general-N construction", e.what());
  }
}

// --- criterion 3: overlap closed forms vs quadrature

void criterion_3(CheckSet& out) {
  try {
    const auto& seed = sech_seed();
    double worst = 0.0;
    for (double a : {0.5, 1.0, 2.0, 4.0, 5.0, 10.0}) {
      const double half_width = a + 25.0;
      const double quad_pm = quadrature(
          [&](double x) {
            return seed.ground_state(x + a) * seed.ground_state(x - a);
          },
          -half_width, half_width, 1e-13);
      const double quad_0p = quadrature(
          [&](double x) {
            return seed.ground_state(x) * seed.ground_state(x + a);
          },
          -half_width, half_width, 1e-13);
      worst = std::max(worst, std::abs(quad_pm - overlap_pm(a)));
      worst = std::max(worst, std::abs(quad_0p - overlap_0p(a)));
    }
    out.at_most(3, "construction",
                "|quadrature - closed form| for both overlaps, a in "
                "{0.5,1,2,4,5,10}",
                worst, 1e-10, 0.0);
  } catch (const std::exception& e) {
    out.failed(3, "construction", "overlap closed forms", e.what());
  }
}

// --- criterion 4: variational chain on the (lambda,a) grid

void criterion_4(CheckSet& out, const VerifyOptions& opts) {
  try {
    double slack_oracle_r1 = std::numeric_limits<double>::max();
    double slack_r1_bound = std::numeric_limits<double>::max();
    double slack_r2_f = std::numeric_limits<double>::max();
    for (double lambda : k_lambda_grid) {
      for (double a : k_a_grid) {
        const TripleParams p(lambda, a);
        const WellSpec spec = to_well_spec(p);
        const IntegralSet integrals = integral_set(spec);
        const Matrix overlaps = overlap_matrix(spec);

        const double r1 =
            rayleigh({spec, {0.0, 1.0, -1.0}}, integrals, overlaps);
        const double r2 = rayleigh(
            {spec, {1.0 - lambda, -0.5 * lambda, -0.5 * lambda}}, integrals,
            overlaps);

        const GridSpec odd_grid =
            symmetric_grid(a + 25.0, opts.oracle_step, Parity::odd);
        const std::vector<double> v_full = sample_full_grid(
            p, symmetric_grid(a + 25.0, opts.oracle_step, Parity::none));
        const double e1_oracle =
            lowest_eigenpairs(std::span<const double>(v_full), odd_grid, 1)
                .energies[0];

        slack_oracle_r1 = std::min(slack_oracle_r1, r1 - e1_oracle);
        slack_r1_bound = std::min(slack_r1_bound, bound_e1(p) - r1);
        slack_r2_f = std::min(slack_r2_f, (k_e0 + gap_bound_f(p)) - r2);
      }
    }
    out.at_least(4, "bounds", "min slack of oracle-E1 <= Rayleigh(phi1)",
                 slack_oracle_r1, 0.0, 1e-8);
    out.at_least(4, "bounds", "min slack of Rayleigh(phi1) <= E1 upper bound",
                 slack_r1_bound, 0.0, 1e-8);
    out.at_least(4, "bounds", "min slack of Rayleigh(phi2) <= E0 + f_a(lambda)",
                 slack_r2_f, 0.0, 1e-8,
                 "the quoted reduction of the two-node bound drops the "
                 "dominant central-lateral overlap term; the bound retaining "
                 "it holds (see appendix suite)");
  } catch (const std::exception& e) {
    out.failed(4, "bounds", "variational chain", e.what());
  }
}

// --- criterion 5: gap-bound values and the a-threshold claim

double f_at(double lambda, double a) {
  return gap_bound_f(TripleParams(lambda, a));
}

void criterion_5(CheckSet& out) {
  const double f10 = f_at(0.999, 10.0);
  const double f4 = f_at(0.999, 4.0);
  out.within(5, "bounds", "f_10(0.999)", f10, k_f10_spec, 1e-9);
  out.at_most(5, "bounds", "f_10(0.999) below 1e-6", f10, 1e-6, 0.0);
  out.within(5, "bounds", "f_4(0.999)", f4, k_f4_0999, 1e-5,
             "reference recomputed from the closed form; the quoted 3.203e-2 "
             "matches the lambda->1 supremum instead (flagged)");

  out.flag("f4-quoted-value",
           "quoted f_4(0.999) = 3.203e-2 corresponds to the lambda->1 "
           "supremum 3.2032e-2; the closed form at lambda = 0.999 gives "
           "3.2051e-2",
           k_f4_quoted, f4);

  // threshold claim: gap bound below 1e-6 from a = 4 on. Solve
  // sup_lambda f_a = 1e-6 for a by bisection on [4, 16].
  const auto sup_f = [](double a) {
    return f_at(f_monotone_limit(a) - 1e-12, a);
  };
  double lo = 4.0, hi = 16.0;
  for (int i = 0; i < 80; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (sup_f(mid) > 1e-6)
      lo = mid;
    else
      hi = mid;
  }
  out.flag("gap-threshold-claim",
           "claimed: max-over-lambda gap bound < 1e-6 from a = 4 on; "
           "computed: sup f_4 = " + format_double(sup_f(4.0)) +
               ", the bound only drops below 1e-6 from a ~ " +
               format_double(0.5 * (lo + hi)),
           1e-6, sup_f(4.0));
}

// --- criterion 6: monotonicity of f in lambda on the provable range

void criterion_6(CheckSet& out) {
  double worst_min_increase = std::numeric_limits<double>::max();
  std::string lamstar_list;
  for (double a : {4.0, 7.0, 10.0}) {
    const double lamstar = f_monotone_limit(a);
    const double lo = 1e-3;
    const int pairs = 1000;
    double prev = f_at(lo, a);
    double min_increase = std::numeric_limits<double>::max();
    for (int i = 1; i <= pairs; ++i) {
      const double lambda =
          lo + (lamstar - lo) * static_cast<double>(i) / pairs;
      const double value = f_at(lambda, a);
      min_increase = std::min(min_increase, value - prev);
      prev = value;
    }
    worst_min_increase = std::min(worst_min_increase, min_increase);
    if (!lamstar_list.empty()) lamstar_list += ", ";
    lamstar_list += "lambda*(" + format_double(a) + ") = " +
                    format_double(lamstar);
  }
  out.at_least(6, "bounds",
               "f_a increasing over 10^3 ordered pairs per a in {4,7,10} "
               "(sampled on (0, lambda*(a)])",
               worst_min_increase, 0.0, 0.0,
               "min pairwise increase across all three sweeps");

  const double a_ref = 4.0;
  const double lamstar = f_monotone_limit(a_ref);
  const double beyond = 0.5 * (lamstar + 1.0);
  out.flag("f-monotonicity-claim",
           "claimed: f_a increases on all of (0,1); computed: the increase "
           "stops at " + lamstar_list +
               " and f decreases beyond (e.g. f_4(" + format_double(beyond) +
               ") = " + format_double(f_at(beyond, a_ref)) + " < f_4(lambda*) = " +
               format_double(f_at(lamstar, a_ref)) + ")",
           f_at(lamstar, a_ref), f_at(beyond, a_ref));
}

// --- criterion 7: sensitivity quotients (peak ratio span, depth-ratio spread)

void criterion_7(CheckSet& out) {
  const double c_span = c_ratio(TripleParams(0.002, 20.0)) /
                        c_ratio(TripleParams(0.995, 20.0));
  out.at_least(7, "construction", "C(0.002)/C(0.995) at a = 20", c_span, 1e8,
               0.0);

  const auto q_spread = [](double a) {
    double lo = std::numeric_limits<double>::max(), hi = -lo;
    for (double lambda = 0.01; lambda <= 0.99 + 1e-12; lambda += 0.005) {
      const double q = q_ratio(TripleParams(lambda, a));
      lo = std::min(lo, q);
      hi = std::max(hi, q);
    }
    return hi - lo;
  };
  const double ratio = q_spread(5.0) / q_spread(10.0);
  out.at_least(7, "construction",
               "Q-spread(a=5) / Q-spread(a=10) over lambda in [0.01,0.99]",
               ratio, 5.0, 0.0);
}

// --- criterion 8: density decomposition identity and classical limit

void criterion_8(CheckSet& out) {
  try {
    const TripleParams p(2.0 / 3.0, 7.0);
    const WellSpec spec = to_well_spec(p);
    const DensityDecomposition decomposition = density_decomposition(spec);
    const GroundState ground = ground_state(spec);

    double worst = 0.0;
    const double x_lo = -17.0, x_hi = 17.0;
    for (int i = 0; i < 1000; ++i) {
      const double x = x_lo + (x_hi - x_lo) * i / 999.0;
      double reassembled = decomposition.overlap_term(x);
      for (std::size_t n = 0; n < decomposition.weights.size(); ++n)
        reassembled += decomposition.weights[n] * decomposition.components[n](x);
      worst = std::max(worst, std::abs(reassembled - ground.density(x)));
    }
    out.at_most(8, "construction",
                "max |rho - iota - sum W_n rho_n| at 10^3 points", worst,
                1e-12, 0.0);

    const auto l1_distance = [](double a) {
      const TripleParams params(2.0 / 3.0, a);
      const WellSpec s = to_well_spec(params);
      const GroundState g = ground_state(s);
      return quadrature(
          [&](double x) { return std::abs(g.density(x) - classical_density(s, x)); },
          -(a + 25.0), a + 25.0, 1e-9);
    };
    const double far = l1_distance(20.0), near = l1_distance(4.0);
    out.at_most(8, "construction",
                "L1(rho, rho_class) at a=20 relative to a=4", far / near, 0.1,
                0.0,
                "raw distances " + format_double(far) + " vs " +
                    format_double(near));
  } catch (const std::exception& e) {
    out.failed(8, "construction", "density decomposition", e.what());
  }
}

// --- criterion 9: seed integrals

void criterion_9(CheckSet& out) {
  try {
    const auto& seed = sech_seed();
    out.within(9, "scaling", "<V> of the seed", mean_v(seed), k_mean_v_exact,
               1e-10);
    const double computed = dispersion(
        [&](double x) {
          const double p = seed.ground_state(x);
          return p * p;
        },
        -30.0, 30.0, 1e-12);
    out.within(9, "scaling", "dispersion of the seed density", computed,
               k_seed_dispersion, 1e-6);
    out.flag("seed-dispersion-quoted",
             "quoted adimensional dispersion 2.34 vs computed pi/sqrt(12) = "
             "0.90690; both conventions stay available through derive_length",
             k_quoted_seed_dispersion, computed);
  } catch (const std::exception& e) {
    out.failed(9, "scaling", "seed integrals", e.what());
  }
}

// --- criterion 10: SI scaling

void criterion_10(CheckSet& out) {
  const double length = derive_length(k_default_well_width, k_quoted_seed_dispersion);
  const PhysicalScale scale(k_quoted_mass, length);
  const double unit = scale.frequency_unit();
  out.at_least(10, "scaling", "frequency unit hbar/2mL^2 (quoted presets)",
               unit, 6e7, 0.0);
  out.at_most(10, "scaling", "frequency unit hbar/2mL^2 (quoted presets)",
              unit, 8e7, 0.0, "computed " + format_double(unit) + " s^-1");

  double worst_rel = 0.0;
  for (double value : {1.0, -1.0, 1e-6, 137.0}) {
    const double e = scale.energy_from_si(scale.energy_to_si(value));
    const double w = scale.frequency_from_si(scale.frequency_to_si(value));
    const double l = scale.length_from_si(scale.length_to_si(value));
    worst_rel = std::max({worst_rel, std::abs(e - value) / std::abs(value),
                          std::abs(w - value) / std::abs(value),
                          std::abs(l - value) / std::abs(value)});
  }
  out.at_most(10, "scaling", "round-trip relative error of SI conversions",
              worst_rel, 1e-12, 0.0);
}

// --- criterion 11: degeneracy trend of the oracle gaps

void criterion_11(CheckSet& out, const VerifyOptions& opts) {
  try {
    const double lambda = 2.0 / 3.0;
    std::vector<double> gap1, gap2;  // E1-E0, E2-E0 over a in {4,6,8,10}
    double gap2_a5 = 0.0;
    for (double a : {4.0, 5.0, 6.0, 8.0, 10.0}) {
      const TripleParams p(lambda, a);
      const GridSpec even_grid =
          symmetric_grid(a + 25.0, opts.oracle_step, Parity::even);
      const GridSpec odd_grid =
          symmetric_grid(a + 25.0, opts.oracle_step, Parity::odd);
      const std::vector<double> v_full = sample_full_grid(
          p, symmetric_grid(a + 25.0, opts.oracle_step, Parity::none));
      const Spectrum even =
          lowest_eigenpairs(std::span<const double>(v_full), even_grid, 2);
      const Spectrum odd =
          lowest_eigenpairs(std::span<const double>(v_full), odd_grid, 1);
      const double g1 = odd.energies[0] - even.energies[0];
      const double g2 = even.energies[1] - even.energies[0];
      if (a == 5.0) {
        gap2_a5 = g2;
        continue;
      }
      gap1.push_back(g1);
      gap2.push_back(g2);
    }
    double min_drop = std::numeric_limits<double>::max();
    for (std::size_t i = 1; i < gap1.size(); ++i) {
      min_drop = std::min(min_drop, gap1[i - 1] - gap1[i]);
      min_drop = std::min(min_drop, gap2[i - 1] - gap2[i]);
    }
    out.at_least(11, "bounds",
                 "oracle gaps E1-E0 and E2-E0 decrease over a in {4,6,8,10}",
                 min_drop, 0.0, 0.0, "min consecutive drop");
    out.at_least(11, "bounds", "(E2-E0)(a=5) / (E2-E0)(a=10)",
                 gap2_a5 / gap2.back(), 10.0, 0.0);

    const double f_claim = gap_bound_f(TripleParams(lambda, 10.0));
    out.flag("oracle-gap-vs-f",
             "the closed-form gap function does not bound the oracle gap: at "
             "(2/3, 10) the oracle E2-E0 = " + format_double(gap2.back()) +
                 " while f = " + format_double(f_claim) +
                 " (the two-node trial is nearly parallel to the ground state "
                 "away from lambda = 2-sqrt(2), so its energy bounds nothing)",
             f_claim, gap2.back());
  } catch (const std::exception& e) {
    out.failed(11, "bounds", "degeneracy trend", e.what());
  }
}

// --- criterion 12: byte-identical sweep output

void criterion_12(CheckSet& out, const VerifyOptions& opts) {
  namespace fs = std::filesystem;
  try {
    const fs::path scratch = opts.scratch_dir.empty()
                                 ? fs::temp_directory_path() / "multiwell-verify"
                                 : fs::path(opts.scratch_dir);
    fs::create_directories(scratch);

    SweepConfig config;
    config.lambdas = {0.25, 0.5, 0.75};
    config.a_values = {5.0};
    config.quantities = {Quantity::c, Quantity::f, Quantity::potential};
    config.x_min = -2.0;
    config.x_max = 2.0;
    config.dx = 0.5;

    auto read_all = [](const std::string& path) {
      std::ifstream in(path, std::ios::binary);
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    };

    config.out_prefix = (scratch / "det_run").string();
    const RunReport first = run_sweep(config);
    std::vector<std::string> snapshots;
    for (const std::string& file : first.files)
      snapshots.push_back(read_all(file));
    const RunReport second = run_sweep(config);  // identical config, same paths

    bool identical = first.files == second.files;
    for (std::size_t i = 0; identical && i < first.files.size(); ++i)
      identical = snapshots[i] == read_all(second.files[i]);
    for (const std::string& file : first.files) fs::remove(file);

    out.at_least(12, "construction",
                 "two sweep runs with one config produce byte-identical CSV",
                 identical ? 1.0 : 0.0, 1.0, 0.0);
  } catch (const std::exception& e) {
    out.failed(12, "construction", "sweep determinism", e.what());
  }
}

// --- appendix chain on its own grid

// Trial energy by direct quadrature of the trial against the Hamiltonian,
// using H psi0(x+a_k) = [E0 - V_seed(x+a_k) + V_synth(x)] psi0(x+a_k); an
// independent route from the matrix-element expansion in `variational`.
double rayleigh_direct(const WellSpec& spec, const std::vector<double>& betas) {
  const double half_width = spec.domain_half_width();
  const Matrix overlaps = overlap_matrix(spec);
  double norm_sq = 0.0;
  for (std::size_t k = 0; k < spec.size(); ++k)
    for (std::size_t l = 0; l < spec.size(); ++l)
      norm_sq += betas[k] * betas[l] * overlaps(k, l);

  const double numerator = quadrature(
      [&](double x) {
        const double v_synth = synth_potential(spec, x);
        double f = 0.0, hf = 0.0;
        for (std::size_t k = 0; k < spec.size(); ++k) {
          const double p = spec.seed.ground_state(x + spec.shifts[k]);
          f += betas[k] * p;
          hf += betas[k] *
                (spec.seed.ground_energy - spec.seed.potential(x + spec.shifts[k]) +
                 v_synth) *
                p;
        }
        return f * hf;
      },
      -half_width, half_width, 1e-12);
  return numerator / norm_sq;
}

void appendix_suite(CheckSet& out) {
  try {
    const auto& seed = sech_seed();
    double slack5 = std::numeric_limits<double>::max();
    double slack9 = slack5, slack10 = slack5, slack11 = slack5;
    for (double lambda = 0.05; lambda <= 0.95 + 1e-12; lambda += 0.05) {
      for (double a = 2.0; a <= 12.0 + 1e-12; a += 2.0) {
        const TripleParams p(lambda, a);
        const WellSpec spec = to_well_spec(p);
        const double half_width = spec.domain_half_width();
        const double o0p = overlap_0p(a), opm = overlap_pm(a);
        const double mv = mean_v(seed, half_width);

        // diagonal matrix elements of the synthesized potential
        const double v_pp = quadrature(
            [&](double x) {
              const double ps = seed.ground_state(x + a);
              return ps * synth_potential(spec, x) * ps;
            },
            -half_width, half_width, 1e-12);
        const double v_00 = quadrature(
            [&](double x) {
              const double ps = seed.ground_state(x);
              return ps * synth_potential(spec, x) * ps;
            },
            -half_width, half_width, 1e-12);

        slack5 = std::min(
            slack5, 4.0 * ((1.0 - lambda) / lambda) * o0p + 2.0 * opm -
                        (v_pp - mv));
        slack9 = std::min(
            slack9, 2.0 * lambda / (1.0 - lambda) * o0p - (v_00 - mv));

        const double r2 = rayleigh_direct(
            spec, {1.0 - lambda, -0.5 * lambda, -0.5 * lambda});
        slack10 = std::min(slack10, phi2_rayleigh_bound(p) - r2);
        slack11 = std::min(slack11, (k_e0 + gap_bound_f(p)) - r2);
      }
    }
    out.at_least(0, "appendix",
                 "lateral diagonal element bound (single-node chain)", slack5,
                 0.0, 1e-8, "min slack over lambda in [0.05,0.95], a in [2,12]");
    out.at_least(0, "appendix", "central diagonal element bound", slack9, 0.0,
                 1e-8);
    out.at_least(0, "appendix",
                 "two-node trial energy <= bound retaining the "
                 "central-lateral overlap term",
                 slack10, 0.0, 1e-8);
    out.at_least(0, "appendix",
                 "two-node trial energy <= E0 + f (quoted reduction)", slack11,
                 0.0, 1e-8,
                 "fails as quoted: the reduction drops the dominant "
                 "8 lambda (1-lambda) O_0p term");
  } catch (const std::exception& e) {
    out.failed(0, "appendix", "appendix chain", e.what());
  }
}

}  // namespace

const char* suite_name(Suite s) {
  switch (s) {
    case Suite::construction: return "construction";
    case Suite::bounds: return "bounds";
    case Suite::appendix: return "appendix";
    case Suite::scaling: return "scaling";
    case Suite::all: return "all";
  }
  return "unknown";
}

std::optional<Suite> suite_from_name(const std::string& name) {
  for (Suite s : {Suite::construction, Suite::bounds, Suite::appendix,
                  Suite::scaling, Suite::all})
    if (name == suite_name(s)) return s;
  return std::nullopt;
}

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

VerifyReport run_verify(Suite suite, const VerifyOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  VerifyReport report;
  report.suite = suite;
  report.tolerance_scale = opts.tolerance_scale;

  CheckSet out{&report.checks, &report.flags, opts.tolerance_scale};
  const bool all = suite == Suite::all;

  if (all || suite == Suite::construction) {
    criterion_1(out, opts);
    criterion_2(out, opts);
    criterion_3(out);
    criterion_7(out);
    criterion_8(out);
  }
  if (all || suite == Suite::bounds) {
    criterion_4(out, opts);
    criterion_5(out);
    criterion_6(out);
    criterion_11(out, opts);
  }
  if (all || suite == Suite::appendix) appendix_suite(out);
  if (all || suite == Suite::scaling) {
    criterion_9(out);
    criterion_10(out);
  }
  if (all) criterion_12(out, opts);

  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

void print_report(const VerifyReport& report, std::ostream& out) {
  out << k_tool_name << " verify v" << k_version
      << "  suite=" << suite_name(report.suite)
      << "  tolerance_scale=" << format_double(report.tolerance_scale) << "\n";
  std::size_t passed = 0;
  for (const Check& check : report.checks) {
    out << (check.pass ? "[PASS] " : "[FAIL] ");
    if (check.criterion > 0) out << "criterion " << check.criterion << ": ";
    out << check.name << "\n       computed=" << format_double(check.computed)
        << "  " << check.relation << "  expected="
        << format_double(check.expected)
        << "  tol=" << format_double(check.tolerance) << "\n";
    if (!check.note.empty()) out << "       note: " << check.note << "\n";
    if (check.pass) ++passed;
  }
  for (const Discrepancy& flag : report.flags) {
    out << "[FLAG] " << flag.id << ": " << flag.description
        << "\n       claimed=" << format_double(flag.claimed)
        << "  computed=" << format_double(flag.computed) << "\n";
  }
  out << passed << "/" << report.checks.size() << " checks passed in "
      << format_double(report.wall_seconds) << " s\n";
}

}  // namespace multiwell
