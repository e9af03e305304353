#pragma once

// Command-line front end. dispatch() never exits the process; it returns the exit code.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "subordlab/dominants.hpp"
#include "subordlab/harness.hpp"

namespace subordlab {

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2, kExitIo = 3 };

struct CliConfig {
  int order = kDefaultOrder;  // N
  int samples = 1024;         // M
  std::vector<double> radii{0.5, 0.8, 0.95, 0.99};
  double tolerance = 1e-4;
  std::uint64_t seed = 0;
  std::string out;  // empty: no file
  int verbosity = 0;

  /// N in [8, 512], M in [64, 16384], tolerance in [1e-8, 1e-2], radii in (0, 1).
  void validate() const;
  SubordinationConfig subordination() const;
  HarnessConfig harness() const;
};

/// Series argument: inline JSON (power-series schema or a coefficient array whose entries are
/// numbers or [re, im] pairs), "@path" for a JSON file, or "dominant:<name>[:<scale>]" for h(scale z).
TaylorSeries parse_series_arg(const std::string& spec, int order);
/// "x" or "x,y" for x + iy.
cplx parse_complex_arg(const std::string& text);

void emit_curve_csv(const BoundaryCurve& curve, std::ostream& os);
/// Writes text to path; IoFailure when the file cannot be written.
void write_text_file(const std::string& path, const std::string& text);

/// args excludes the program name.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int dispatch(int argc, const char* const* argv);

}  // namespace subordlab
