#include "multiwell/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "multiwell/eigensolver.hpp"
#include "multiwell/triple_well.hpp"
#include "multiwell/version.hpp"

namespace multiwell {

namespace {

constexpr const char* k_quantity_names[] = {
    "potential", "density", "alpha", "bounds", "q", "c", "f", "oracle_spectrum"};

std::string join_values(const std::vector<double>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ',';
    out += format_double(values[i]);
  }
  return out;
}

std::vector<double> x_grid(const SweepConfig& config) {
  double lo, hi;
  if (config.x_min && config.x_max) {
    lo = *config.x_min;
    hi = *config.x_max;
  } else {
    const double max_a =
        *std::max_element(config.a_values.begin(), config.a_values.end());
    lo = -(max_a + 12.0);
    hi = max_a + 12.0;
  }
  const auto count =
      static_cast<std::size_t>(std::floor((hi - lo) / config.dx + 0.5)) + 1;
  std::vector<double> xs(count);
  for (std::size_t i = 0; i < count; ++i)
    xs[i] = lo + static_cast<double>(i) * config.dx;
  return xs;
}

// RFC 4180: quote fields containing separators, quotes or line breaks.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char ch : s) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  quoted += '"';
  return quoted;
}

void emit_csv(const std::string& path, const SweepConfig& config,
              const std::vector<const SweepRow*>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file", path);
  out << "# " << k_tool_name << " sweep v" << k_version << "\n";
  for (const std::string& line : config_echo_lines(config))
    out << "# " << line << "\n";
  out << "quantity,lambda,a,x,value\n";
  for (const SweepRow* row : rows) {
    out << csv_field(row->quantity) << ',' << format_double(row->lambda) << ','
        << format_double(row->a) << ','
        << (row->x ? format_double(*row->x) : std::string()) << ','
        << format_double(row->value) << "\n";
  }
  if (!out) throw IoError("write failure", path);
}

void emit_json(const std::string& path, const SweepConfig& config,
               const std::vector<const SweepRow*>& rows) {
  nlohmann::ordered_json doc;
  doc["tool"] = k_tool_name;
  doc["version"] = k_version;
  nlohmann::ordered_json cfg;
  for (const std::string& line : config_echo_lines(config)) {
    const auto pos = line.find('=');
    cfg[line.substr(0, pos)] = line.substr(pos + 1);
  }
  doc["config"] = cfg;
  nlohmann::ordered_json out_rows = nlohmann::ordered_json::array();
  for (const SweepRow* row : rows) {
    nlohmann::ordered_json r;
    r["quantity"] = row->quantity;
    r["lambda"] = row->lambda;
    r["a"] = row->a;
    if (row->x)
      r["x"] = *row->x;
    else
      r["x"] = nullptr;
    r["value"] = row->value;
    out_rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(out_rows);

  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file", path);
  out << doc.dump(2) << "\n";
  if (!out) throw IoError("write failure", path);
}

}  // namespace

const char* quantity_name(Quantity q) {
  return k_quantity_names[static_cast<int>(q)];
}

std::optional<Quantity> quantity_from_name(const std::string& name) {
  for (int i = 0; i < 8; ++i)
    if (name == k_quantity_names[i]) return static_cast<Quantity>(i);
  return std::nullopt;
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void validate(const SweepConfig& config) {
  if (config.lambdas.empty()) throw UsageError("lambda grid is empty");
  if (config.a_values.empty()) throw UsageError("a grid is empty");
  if (config.quantities.empty()) throw UsageError("no quantities requested");
  for (double lambda : config.lambdas)
    if (!(lambda >= 1e-6 && lambda <= 1.0 - 1e-6))
      throw UsageError("lambda " + format_double(lambda) +
                       " outside (0,1) guard band [1e-6, 1-1e-6]");
  for (double a : config.a_values)
    if (!(a > 0.0)) throw UsageError("a " + format_double(a) + " must be positive");
  if (!(config.dx > 0.0)) throw UsageError("dx must be positive");
  if (config.x_min.has_value() != config.x_max.has_value())
    throw UsageError("xmin and xmax must be given together");
  if (config.x_min && !(*config.x_min < *config.x_max))
    throw UsageError("xmin must be below xmax");
  if (!(config.oracle_step > 0.0)) throw UsageError("oracle step must be positive");
}

std::vector<SweepRow> evaluate_sweep(const SweepConfig& config) {
  validate(config);
  std::vector<SweepRow> rows;
  const std::vector<double> xs = x_grid(config);

  for (Quantity group : config.quantities) {
    for (double lambda : config.lambdas) {
      for (double a : config.a_values) {
        const TripleParams p(lambda, a);
        switch (group) {
          case Quantity::potential: {
            std::vector<double> values(xs.size());
            v3_grid(p, xs.data(), values.data(), xs.size());
            for (std::size_t i = 0; i < xs.size(); ++i)
              rows.push_back({group, "potential", lambda, a, xs[i], values[i]});
            break;
          }
          case Quantity::density: {
            std::vector<double> values(xs.size());
            rho3_grid(p, xs.data(), values.data(), xs.size());
            for (std::size_t i = 0; i < xs.size(); ++i)
              rows.push_back({group, "density", lambda, a, xs[i], values[i]});
            break;
          }
          case Quantity::alpha:
            rows.push_back({group, "alpha", lambda, a, std::nullopt, alpha3(p)});
            break;
          case Quantity::bounds: {
            const BoundReport report = bounds_report(p);
            rows.push_back({group, "e1_upper", lambda, a, std::nullopt,
                            report.e1_upper});
            rows.push_back({group, "e2_gap_upper", lambda, a, std::nullopt,
                            report.e2_gap_upper});
            rows.push_back({group, "overlap_pm", lambda, a, std::nullopt,
                            report.overlap_pm});
            rows.push_back({group, "overlap_0p", lambda, a, std::nullopt,
                            report.overlap_0p});
            rows.push_back({group, "alpha", lambda, a, std::nullopt, report.alpha});
            break;
          }
          case Quantity::q:
            rows.push_back({group, "q", lambda, a, std::nullopt, q_ratio(p)});
            break;
          case Quantity::c:
            rows.push_back({group, "c", lambda, a, std::nullopt, c_ratio(p)});
            break;
          case Quantity::f:
            rows.push_back({group, "f", lambda, a, std::nullopt, gap_bound_f(p)});
            break;
          case Quantity::oracle_spectrum: {
            const double half_width = a + config.oracle_padding;
            const GridSpec even_grid =
                symmetric_grid(half_width, config.oracle_step, Parity::even);
            const GridSpec odd_grid =
                symmetric_grid(half_width, config.oracle_step, Parity::odd);
            std::vector<double> v_full(even_grid.n_points);
            std::vector<double> abscissae(even_grid.n_points);
            const double h = even_grid.step();
            for (std::size_t i = 0; i < even_grid.n_points; ++i)
              abscissae[i] = even_grid.x_min + static_cast<double>(i) * h;
            v3_grid(p, abscissae.data(), v_full.data(), abscissae.size());

            const Spectrum even = lowest_eigenpairs(
                std::span<const double>(v_full), even_grid, 2);
            const Spectrum odd = lowest_eigenpairs(
                std::span<const double>(v_full), odd_grid, 1);
            rows.push_back({group, "oracle_e0", lambda, a, std::nullopt,
                            even.energies[0]});
            rows.push_back({group, "oracle_e1", lambda, a, std::nullopt,
                            odd.energies[0]});
            rows.push_back({group, "oracle_e2", lambda, a, std::nullopt,
                            even.energies[1]});
            break;
          }
        }
      }
    }
  }
  return rows;
}

std::vector<std::string> config_echo_lines(const SweepConfig& config) {
  std::vector<std::string> lines;
  lines.push_back("lambda=" + join_values(config.lambdas));
  lines.push_back("a=" + join_values(config.a_values));
  std::string quantities;
  for (std::size_t i = 0; i < config.quantities.size(); ++i) {
    if (i) quantities += ',';
    quantities += quantity_name(config.quantities[i]);
  }
  lines.push_back("quantity=" + quantities);
  const std::vector<double> xs = x_grid(config);
  lines.push_back("xmin=" + format_double(xs.front()));
  lines.push_back("xmax=" + format_double(xs.back()));
  lines.push_back("dx=" + format_double(config.dx));
  lines.push_back(std::string("format=") +
                  (config.format == OutputFormat::csv ? "csv" : "json"));
  lines.push_back("out=" + config.out_prefix);
  lines.push_back("oracle_step=" + format_double(config.oracle_step));
  lines.push_back("oracle_padding=" + format_double(config.oracle_padding));
  return lines;
}

RunReport run_sweep(const SweepConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<SweepRow> rows = evaluate_sweep(config);

  RunReport report;
  report.version = k_version;
  report.config_echo = config_echo_lines(config);
  report.row_count = rows.size();

  for (Quantity group : config.quantities) {
    std::vector<const SweepRow*> group_rows;
    for (const SweepRow& row : rows)
      if (row.group == group) group_rows.push_back(&row);

    const std::string path =
        config.out_prefix + "_" + quantity_name(group) +
        (config.format == OutputFormat::csv ? ".csv" : ".json");
    if (config.format == OutputFormat::csv)
      emit_csv(path, config, group_rows);
    else
      emit_json(path, config, group_rows);
    report.files.push_back(path);
  }

  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

std::vector<double> parse_value_grid(const std::string& text) {
  if (text.empty()) throw UsageError("empty value grid");
  std::vector<double> values;
  const auto parse_one = [](const std::string& s) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &pos);
    } catch (const std::exception&) {
      throw UsageError("cannot parse number: '" + s + "'");
    }
    if (pos != s.size()) throw UsageError("cannot parse number: '" + s + "'");
    return v;
  };

  if (text.find(':') != std::string::npos) {
    std::stringstream ss(text);
    std::string part;
    std::vector<double> parts;
    while (std::getline(ss, part, ':')) parts.push_back(parse_one(part));
    if (parts.size() != 3)
      throw UsageError("range grid must be lo:hi:step, got '" + text + "'");
    const double lo = parts[0], hi = parts[1], step = parts[2];
    if (!(step > 0.0) || !(hi >= lo))
      throw UsageError("range grid must satisfy lo <= hi and step > 0");
    const auto count =
        static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
    for (std::size_t i = 0; i < count; ++i)
      values.push_back(lo + static_cast<double>(i) * step);
    return values;
  }

  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) values.push_back(parse_one(part));
  return values;
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file", path);
  std::map<std::string, std::string> kv;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw UsageError("config file " + path + " line " +
                       std::to_string(line_no) + ": expected key=value");
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

void apply_key_value(SweepConfig& config, const std::string& key,
                     const std::string& value) {
  const auto parse_double = [&](const std::string& s) {
    try {
      return std::stod(s);
    } catch (const std::exception&) {
      throw UsageError("bad numeric value for " + key + ": '" + s + "'");
    }
  };
  if (key == "lambda") {
    config.lambdas = parse_value_grid(value);
  } else if (key == "a") {
    config.a_values = parse_value_grid(value);
  } else if (key == "quantity") {
    config.quantities.clear();
    std::stringstream ss(value);
    std::string part;
    while (std::getline(ss, part, ',')) {
      const auto q = quantity_from_name(part);
      if (!q) throw UsageError("unknown quantity '" + part + "'");
      if (std::find(config.quantities.begin(), config.quantities.end(), *q) ==
          config.quantities.end())
        config.quantities.push_back(*q);
    }
  } else if (key == "xmin") {
    config.x_min = parse_double(value);
  } else if (key == "xmax") {
    config.x_max = parse_double(value);
  } else if (key == "dx") {
    config.dx = parse_double(value);
  } else if (key == "format") {
    if (value == "csv")
      config.format = OutputFormat::csv;
    else if (value == "json")
      config.format = OutputFormat::json;
    else
      throw UsageError("format must be csv or json, got '" + value + "'");
  } else if (key == "out") {
    config.out_prefix = value;
  } else {
    throw UsageError("unknown config key '" + key + "'");
  }
}

}  // namespace multiwell
