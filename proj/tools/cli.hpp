#ifndef PADE_TOOLS_CLI_HPP
#define PADE_TOOLS_CLI_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "pade/diagnostics.hpp"

namespace pade::cli {

enum class Subcommand { approximate, compare, roots, table };
enum class OutputFormat { json, csv, text };

struct RunConfig {
  Subcommand subcommand = Subcommand::approximate;
  // Exactly one input source: a rational function (coefficients in powers of
  // z, lowest first) or a coefficient file.
  std::optional<std::vector<Complex>> num;
  std::optional<std::vector<Complex>> den;
  std::optional<std::filesystem::path> coeffs;
  int m = 0;
  int n = 0;
  int m_max = 0;
  int n_max = 0;
  std::optional<Complex> center;
  bool cleanup = true;
  std::optional<double> tol;
  double pairing_tol = kDefaultPairingTol;
  OutputFormat format = OutputFormat::json;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitKernel = 3;

/// Space-separated coefficients; each token is `re` or `re,im`.
std::vector<Complex> parse_coefficient_list(const std::string& text);
/// `re` or `re,im`.
Complex parse_center(const std::string& text);

/// Resolves --tol, then PADE_TOL, else nullopt (per-matrix default).
std::optional<double> resolve_tolerance(const RunConfig& cfg);

/// Builds the Taylor coefficients the subcommand needs.
PowerSeries load_series(const RunConfig& cfg);

nlohmann::ordered_json approximate_report(const RunConfig& cfg);
nlohmann::ordered_json compare_report(const RunConfig& cfg);
nlohmann::ordered_json roots_report(const RunConfig& cfg);
nlohmann::ordered_json table_report(const RunConfig& cfg);

/// JSON with every floating-point number printed with 17 significant
/// digits; non-finite numbers become null.
std::string dump_json(const nlohmann::ordered_json& j);

/// Runs the configured subcommand, writing the report to `out` and
/// diagnostics to `err`. Returns the process exit code.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

/// Full command-line entry point.
int main(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace pade::cli

#endif  // PADE_TOOLS_CLI_HPP
