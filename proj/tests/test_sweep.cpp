#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "multiwell/sweep.hpp"
#include "multiwell/triple_well.hpp"
#include "multiwell/verify.hpp"

using namespace multiwell;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "multiwell-sweep-tests";
  fs::create_directories(dir);
  return dir;
}

std::string read_all(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct ParsedRow {
  std::string quantity;
  double lambda, a, value;
  bool has_x = false;
  double x = 0.0;
};

std::vector<ParsedRow> parse_csv(const std::string& text) {
  std::vector<ParsedRow> rows;
  std::istringstream ss(text);
  std::string line;
  bool seen_header = false;
  while (std::getline(ss, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!seen_header) {
      REQUIRE(line == "quantity,lambda,a,x,value");
      seen_header = true;
      continue;
    }
    std::istringstream fields(line);
    std::string q, lam, av, xv, val;
    std::getline(fields, q, ',');
    std::getline(fields, lam, ',');
    std::getline(fields, av, ',');
    std::getline(fields, xv, ',');
    std::getline(fields, val, ',');
    ParsedRow row;
    row.quantity = q;
    row.lambda = std::stod(lam);
    row.a = std::stod(av);
    if (!xv.empty()) {
      row.has_x = true;
      row.x = std::stod(xv);
    }
    row.value = std::stod(val);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

TEST_CASE("value grid parsing") {
  CHECK(parse_value_grid("1,2.5,3") == std::vector<double>{1.0, 2.5, 3.0});

  const auto range = parse_value_grid("0.1:0.5:0.1");
  REQUIRE(range.size() == 5);
  CHECK(range.front() == doctest::Approx(0.1));
  CHECK(range.back() == doctest::Approx(0.5));

  const auto fig_grid = parse_value_grid("0.002:0.998:0.004");
  CHECK(fig_grid.size() == 250);
  CHECK(fig_grid.front() == doctest::Approx(0.002));
  CHECK(fig_grid.back() == doctest::Approx(0.998));

  CHECK_THROWS_AS(parse_value_grid(""), UsageError);
  CHECK_THROWS_AS(parse_value_grid("1:2"), UsageError);
  CHECK_THROWS_AS(parse_value_grid("2:1:0.5"), UsageError);
  CHECK_THROWS_AS(parse_value_grid("abc"), UsageError);
  CHECK_THROWS_AS(parse_value_grid("1,xyz"), UsageError);
}

TEST_CASE("quantity names round trip") {
  for (Quantity q : {Quantity::potential, Quantity::density, Quantity::alpha,
                     Quantity::bounds, Quantity::q, Quantity::c, Quantity::f,
                     Quantity::oracle_spectrum})
    CHECK(quantity_from_name(quantity_name(q)) == q);
  CHECK_FALSE(quantity_from_name("nonsense").has_value());
}

TEST_CASE("config validation refuses bad grids before any file is written") {
  SweepConfig config;
  config.a_values = {5.0};
  config.quantities = {Quantity::c};
  config.out_prefix = (scratch_dir() / "never").string();
  CHECK_THROWS_AS(run_sweep(config), UsageError);  // empty lambda grid
  CHECK_FALSE(fs::exists(config.out_prefix + "_c.csv"));

  config.lambdas = {0.5};
  config.a_values = {};
  CHECK_THROWS_AS(run_sweep(config), UsageError);

  config.a_values = {-1.0};
  CHECK_THROWS_AS(run_sweep(config), UsageError);

  config.a_values = {5.0};
  config.quantities = {};
  CHECK_THROWS_AS(run_sweep(config), UsageError);

  config.quantities = {Quantity::c};
  config.lambdas = {0.9999999};  // outside the guard band
  CHECK_THROWS_AS(run_sweep(config), UsageError);
}

TEST_CASE("row order is lambda-major, then a, then x") {
  SweepConfig config;
  config.lambdas = {0.2, 0.8};
  config.a_values = {3.0, 6.0};
  config.quantities = {Quantity::potential};
  config.x_min = -1.0;
  config.x_max = 1.0;
  config.dx = 1.0;

  const auto rows = evaluate_sweep(config);
  REQUIRE(rows.size() == 2 * 2 * 3);
  CHECK(rows[0].lambda == 0.2);
  CHECK(rows[0].a == 3.0);
  CHECK(rows[0].x == -1.0);
  CHECK(rows[1].x == 0.0);
  CHECK(rows[2].x == 1.0);
  CHECK(rows[3].a == 6.0);
  CHECK(rows[6].lambda == 0.8);

  for (const SweepRow& row : rows)
    CHECK(row.value == doctest::Approx(v3(TripleParams(row.lambda, row.a),
                                          *row.x)).epsilon(1e-15));
}

TEST_CASE("scalar quantities carry no x and match the closed forms") {
  SweepConfig config;
  config.lambdas = {0.25, 0.5};
  config.a_values = {4.0};
  config.quantities = {Quantity::alpha, Quantity::q, Quantity::c, Quantity::f,
                       Quantity::bounds};
  const auto rows = evaluate_sweep(config);
  for (const SweepRow& row : rows) {
    CHECK_FALSE(row.x.has_value());
    const TripleParams p(row.lambda, row.a);
    if (row.quantity == "alpha") CHECK(row.value == doctest::Approx(alpha3(p)));
    if (row.quantity == "q") CHECK(row.value == doctest::Approx(q_ratio(p)));
    if (row.quantity == "c") CHECK(row.value == doctest::Approx(c_ratio(p)));
    if (row.quantity == "f")
      CHECK(row.value == doctest::Approx(gap_bound_f(p)));
    if (row.quantity == "e1_upper")
      CHECK(row.value == doctest::Approx(bound_e1(p)));
  }
  // bounds group contributes five sub-quantities per point
  std::size_t bounds_rows = 0;
  for (const SweepRow& row : rows)
    if (row.group == Quantity::bounds) ++bounds_rows;
  CHECK(bounds_rows == 2 * 5);
}

TEST_CASE("oracle spectrum rows") {
  SweepConfig config;
  config.lambdas = {2.0 / 3.0};
  config.a_values = {4.0};
  config.quantities = {Quantity::oracle_spectrum};
  config.oracle_step = 0.01;  // coarser grid keeps the test quick
  const auto rows = evaluate_sweep(config);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].quantity == "oracle_e0");
  CHECK(rows[1].quantity == "oracle_e1");
  CHECK(rows[2].quantity == "oracle_e2");
  CHECK(rows[0].value == doctest::Approx(-1.0).epsilon(1e-3));
  CHECK(rows[0].value < rows[1].value);
  CHECK(rows[1].value < rows[2].value);
}

TEST_CASE("csv emission: header, config echo, determinism") {
  SweepConfig config;
  config.lambdas = {0.25, 0.75};
  config.a_values = {5.0};
  config.quantities = {Quantity::c, Quantity::potential};
  config.x_min = -2.0;
  config.x_max = 2.0;
  config.dx = 0.5;
  config.out_prefix = (scratch_dir() / "emit").string();

  const RunReport report = run_sweep(config);
  CHECK(report.version == std::string("0.1.0"));
  REQUIRE(report.files.size() == 2);
  CHECK(report.row_count == 2 * 1 + 2 * 1 * 9);

  const std::string first = read_all(report.files[0]);
  CHECK(first.find("# lambda=0.25,0.75") != std::string::npos);
  CHECK(first.find("# dx=0.5") != std::string::npos);
  CHECK(first.find("quantity,lambda,a,x,value") != std::string::npos);

  const auto rows = parse_csv(read_all(report.files[1]));
  CHECK(rows.size() == 18);
  CHECK(rows[0].has_x);

  // byte-identical on a repeat run of the identical config
  std::vector<std::string> before;
  for (const auto& file : report.files) before.push_back(read_all(file));
  const RunReport again = run_sweep(config);
  REQUIRE(again.files == report.files);
  for (std::size_t i = 0; i < report.files.size(); ++i)
    CHECK(before[i] == read_all(report.files[i]));

  for (const auto& file : report.files) fs::remove(file);
}

TEST_CASE("json emission parses back with config and rows") {
  SweepConfig config;
  config.lambdas = {0.4};
  config.a_values = {3.0};
  config.quantities = {Quantity::alpha};
  config.format = OutputFormat::json;
  config.out_prefix = (scratch_dir() / "json_emit").string();

  const RunReport report = run_sweep(config);
  REQUIRE(report.files.size() == 1);
  const nlohmann::json doc = nlohmann::json::parse(read_all(report.files[0]));
  CHECK(doc["tool"] == "multiwell");
  CHECK(doc["config"]["lambda"] == "0.40000000000000002");
  REQUIRE(doc["rows"].size() == 1);
  CHECK(doc["rows"][0]["quantity"] == "alpha");
  CHECK(doc["rows"][0]["x"].is_null());
  CHECK(double(doc["rows"][0]["value"]) ==
        doctest::Approx(alpha3(TripleParams(0.4, 3.0))).epsilon(1e-14));
  fs::remove(report.files[0]);
}

TEST_CASE("config files merge under CLI-style overrides") {
  const fs::path path = scratch_dir() / "sweep.conf";
  {
    std::ofstream out(path);
    out << "# comment line\n"
        << "lambda = 0.1,0.9\n"
        << "a = 5\n"
        << "quantity = c,f\n"
        << "format = json\n";
  }
  const auto kv = read_config_file(path.string());
  SweepConfig config;
  for (const auto& [key, value] : kv) apply_key_value(config, key, value);
  CHECK(config.lambdas == std::vector<double>{0.1, 0.9});
  CHECK(config.quantities ==
        std::vector<Quantity>{Quantity::c, Quantity::f});
  CHECK(config.format == OutputFormat::json);

  // flag override wins
  apply_key_value(config, "format", "csv");
  CHECK(config.format == OutputFormat::csv);

  CHECK_THROWS_AS(apply_key_value(config, "bogus", "1"), UsageError);
  CHECK_THROWS_AS(apply_key_value(config, "dx", "abc"), UsageError);
  CHECK_THROWS_AS(read_config_file("/nonexistent/path.conf"), IoError);

  const fs::path broken = scratch_dir() / "broken.conf";
  {
    std::ofstream out(broken);
    out << "no equals sign here\n";
  }
  CHECK_THROWS_AS(read_config_file(broken.string()), UsageError);
  fs::remove(path);
  fs::remove(broken);
}

TEST_CASE("io failure carries the offending path") {
  SweepConfig config;
  config.lambdas = {0.5};
  config.a_values = {5.0};
  config.quantities = {Quantity::c};
  config.out_prefix = "/nonexistent-dir/sub/prefix";
  try {
    run_sweep(config);
    CHECK(false);
  } catch (const IoError& e) {
    CHECK(e.path.find("/nonexistent-dir/sub/prefix") == 0);
  }
}

namespace {

struct GoldenSpec {
  const char* file;
  SweepConfig config;
  double tolerance;
};

std::vector<GoldenSpec> golden_specs() {
  std::vector<GoldenSpec> specs;
  {
    // central example curves: potential and density at (2/3, 5)
    SweepConfig config;
    config.lambdas = {2.0 / 3.0};
    config.a_values = {5.0};
    config.quantities = {Quantity::potential, Quantity::density};
    config.x_min = -12.0;
    config.x_max = 12.0;
    config.dx = 0.05;
    specs.push_back({"fig1.csv", config, 1e-8});
  }
  {
    // gap function over the dense lambda grid
    SweepConfig config;
    config.lambdas = parse_value_grid("0.002:0.998:0.004");
    config.a_values = {4.0, 7.0, 10.0};
    config.quantities = {Quantity::f};
    specs.push_back({"fig3.csv", config, 1e-8});
  }
  {
    // depth quotient
    SweepConfig config;
    config.lambdas = parse_value_grid("0.002:0.998:0.004");
    config.a_values = {5.0, 6.0, 7.0, 10.0};
    config.quantities = {Quantity::q};
    specs.push_back({"fig5.csv", config, 1e-8});
  }
  {
    // peak quotient
    SweepConfig config;
    config.lambdas = parse_value_grid("0.002:0.998:0.004");
    config.a_values = {5.0, 6.0, 20.0};
    config.quantities = {Quantity::c};
    specs.push_back({"fig6.csv", config, 1e-8});
  }
  return specs;
}

}  // namespace

TEST_CASE("stored figure tables regenerate within tolerance") {
  for (const GoldenSpec& golden : golden_specs()) {
    const fs::path path = fs::path(MULTIWELL_GOLDEN_DIR) / golden.file;
    INFO("golden table ", path.string());
    REQUIRE(fs::exists(path));
    const auto stored = parse_csv(read_all(path));
    const auto fresh = evaluate_sweep(golden.config);
    REQUIRE(stored.size() == fresh.size());
    for (std::size_t i = 0; i < stored.size(); ++i) {
      CHECK(stored[i].quantity == fresh[i].quantity);
      CHECK(stored[i].lambda == doctest::Approx(fresh[i].lambda).epsilon(1e-15));
      CHECK(stored[i].a == fresh[i].a);
      const double scale =
          std::max(1.0, std::abs(fresh[i].value));
      CHECK(std::abs(stored[i].value - fresh[i].value) <=
            golden.tolerance * scale);
    }
  }
}

TEST_CASE("parametric sensitivity columns derived from the peak quotient") {
  // e^Q against ln C: the pairing behind the steep-sensitivity readout
  SweepConfig config;
  config.lambdas = parse_value_grid("0.1:0.9:0.1");
  config.a_values = {12.0, 20.0};
  config.quantities = {Quantity::q, Quantity::c};
  const auto rows = evaluate_sweep(config);

  const auto column = [&](const char* name, double a) {
    std::vector<double> values;
    for (const auto& row : rows)
      if (row.quantity == name && row.a == a) values.push_back(row.value);
    return values;
  };
  for (double a : {12.0, 20.0}) {
    const auto qs = column("q", a);
    const auto cs = column("c", a);
    REQUIRE(qs.size() == 9);
    REQUIRE(cs.size() == 9);
    double dq_span = 0.0, dlnc_span = 0.0;
    for (std::size_t i = 1; i < qs.size(); ++i) {
      dq_span += std::abs(std::exp(qs[i]) - std::exp(qs[i - 1]));
      dlnc_span += std::abs(std::log(cs[i]) - std::log(cs[i - 1]));
    }
    // the rate of change d(lnC)/d(e^Q) grows sharply with a
    if (a == 12.0) CHECK(dlnc_span / dq_span < 1e6);
    if (a == 20.0) CHECK(dlnc_span / dq_span > 1e6);
  }
}

TEST_CASE("verify suites: membership and tolerance tightening") {
  // suite names round trip; unknown names are rejected
  for (Suite s : {Suite::construction, Suite::bounds, Suite::appendix,
                  Suite::scaling, Suite::all})
    CHECK(suite_from_name(suite_name(s)) == s);
  CHECK_FALSE(suite_from_name("everything").has_value());

  // the scaling suite passes at nominal tolerances...
  const VerifyReport nominal = run_verify(Suite::scaling);
  CHECK(nominal.all_passed());
  for (const Check& check : nominal.checks)
    CHECK((check.criterion == 9 || check.criterion == 10));

  // ...and reports failures with diagnostics when tightened far beyond the
  // attainable quadrature accuracy
  VerifyOptions tight;
  tight.tolerance_scale = 1e-8;
  const VerifyReport squeezed = run_verify(Suite::scaling, tight);
  CHECK_FALSE(squeezed.all_passed());
  bool diagnosed = false;
  for (const Check& check : squeezed.checks)
    if (!check.pass) diagnosed = std::isfinite(check.computed);
  CHECK(diagnosed);

  std::ostringstream report_text;
  print_report(squeezed, report_text);
  CHECK(report_text.str().find("[FAIL]") != std::string::npos);
  CHECK(report_text.str().find("tolerance_scale=") != std::string::npos);
}
