#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace multiwell {

enum class Quantity {
  potential,
  density,
  alpha,
  bounds,
  q,
  c,
  f,
  oracle_spectrum,
};

const char* quantity_name(Quantity q);
std::optional<Quantity> quantity_from_name(const std::string& name);

enum class OutputFormat { csv, json };

/// Bad parameters or flag values; maps to the usage-error exit status.
class UsageError : public std::runtime_error {
 public:
  explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

/// File-system failures; carries the offending path.
class IoError : public std::runtime_error {
 public:
  IoError(const std::string& what, std::string path_in)
      : std::runtime_error(what + ": " + path_in), path(std::move(path_in)) {}
  std::string path;
};

struct SweepConfig {
  std::vector<double> lambdas;
  std::vector<double> a_values;
  std::vector<Quantity> quantities;
  /// x sampling for the x-resolved quantities (potential, density); when
  /// unset, defaults to +-(max a + 12).
  std::optional<double> x_min, x_max;
  double dx = 0.01;
  OutputFormat format = OutputFormat::csv;
  std::string out_prefix = "sweep";
  /// FD oracle controls for quantity oracle_spectrum.
  double oracle_step = 0.005;
  double oracle_padding = 25.0;
};

/// One output record. group selects the output table; quantity is the row
/// label inside it (equal to the group name except for the multi-valued
/// groups bounds and oracle_spectrum).
struct SweepRow {
  Quantity group;
  std::string quantity;
  double lambda;
  double a;
  std::optional<double> x;
  double value;
};

struct Discrepancy {
  std::string id;
  std::string description;
  double claimed = 0.0;
  double computed = 0.0;
};

struct RunReport {
  std::vector<std::string> files;
  std::size_t row_count = 0;
  double wall_seconds = 0.0;
  std::string version;
  std::vector<std::string> config_echo;  // key=value lines, stable order
  std::vector<Discrepancy> flags;
};

void validate(const SweepConfig& config);

/// Deterministic row production (lambda-major, then a, then x), no I/O.
std::vector<SweepRow> evaluate_sweep(const SweepConfig& config);

/// Evaluate and emit one table per requested quantity as
/// <out_prefix>_<quantity>.csv/.json, each embedding the config echo.
RunReport run_sweep(const SweepConfig& config);

/// "lo:hi:step" (inclusive of hi up to rounding) or a comma list.
std::vector<double> parse_value_grid(const std::string& text);

/// Flat key=value config file ('#' comments). Throws UsageError / IoError.
std::map<std::string, std::string> read_config_file(const std::string& path);

/// Apply one key=value pair onto a config; unknown keys raise UsageError.
/// Keys: lambda, a, quantity, xmin, xmax, dx, format, out.
void apply_key_value(SweepConfig& config, const std::string& key,
                     const std::string& value);

/// Deterministic %.17g rendering used by every emitter.
std::string format_double(double v);

std::vector<std::string> config_echo_lines(const SweepConfig& config);

}  // namespace multiwell
