#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "multiwell/sweep.hpp"

namespace multiwell {

enum class Suite { construction, bounds, appendix, scaling, all };

const char* suite_name(Suite s);
std::optional<Suite> suite_from_name(const std::string& name);

/// One verification check: a computed value compared against an expected
/// value under the stated relation and tolerance. criterion tags the
/// acceptance criterion the check belongs to (0 for suite-internal checks).
struct Check {
  int criterion = 0;
  std::string suite;
  std::string name;
  std::string relation;  // "within tol of", ">=", "<=", ...
  double computed = 0.0;
  double expected = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
};

struct VerifyOptions {
  /// Multiplies every tolerance; values < 1 tighten the suite (useful for
  /// probing which checks sit close to their grid accuracy).
  double tolerance_scale = 1.0;
  /// FD oracle step used throughout.
  double oracle_step = 0.005;
  /// Directory for the determinism check's scratch files; empty = system
  /// temp directory.
  std::string scratch_dir;
};

struct VerifyReport {
  Suite suite = Suite::all;
  std::vector<Check> checks;
  std::vector<Discrepancy> flags;
  double wall_seconds = 0.0;
  double tolerance_scale = 1.0;

  bool all_passed() const;
};

/// Runs the requested verification suite. Checks never throw on a failed
/// assertion -- they report pass/fail; oracle or quadrature breakdowns are
/// converted into failed checks carrying the error text.
VerifyReport run_verify(Suite suite, const VerifyOptions& opts = {});

/// Human-readable table: one line per check plus the discrepancy flags.
void print_report(const VerifyReport& report, std::ostream& out);

}  // namespace multiwell
