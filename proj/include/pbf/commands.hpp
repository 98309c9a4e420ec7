#pragma once

// The command layer behind the `pbf` executable. Each command writes to a
// stream and returns a process exit code, so tests can drive it in-process.

#include <pbf/game_file.hpp>
#include <pbf/indices.hpp>
#include <pbf/measure.hpp>

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace pbf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitVerificationFailed = 2;

/// Largest n for which the "all" selector is accepted.
inline constexpr int kMaxEnumeratedPlayers = 16;

enum class OutputFormat { csv, text };

OutputFormat parse_format(const std::string& name);

/// "0.3,0.8" gives one probability per player, "0.25" is replicated, and an
/// empty argument gives the uniform profile.
ProbabilityProfile parse_profile(const std::optional<std::string>& arg, int n);

/// "1,3" or "{1,3}"; "{}" is the empty coalition.
CoalitionMask parse_subset(const std::string& text, int n);

/// "all", "singletons", "pairs", or an explicit ';'-separated list of subsets.
std::vector<CoalitionMask> parse_selector(const std::string& selector, int n);

/// "{1,2}", players sorted, 1-based.
std::string format_subset(const CoalitionMask& s);

/// Locale-independent, 12 significant digits.
std::string format_number(double v);

/// One line of machine-readable output.
struct ReportRow {
  CoalitionMask subset;
  std::string index;
  double value;
};

/// Flattens a report into (subset, index, value) rows: interaction,
/// influence, shapley, and normalized when defined.
std::vector<ReportRow> report_rows(const IndexReport& report);

/// Columns subset, index, value, mask; the subset is quoted since it holds commas.
void write_csv(std::ostream& out, const std::vector<ReportRow>& rows);

struct AnalyzeOptions {
  std::optional<std::string> profile;
  std::string subsets = "all";
  OutputFormat format = OutputFormat::csv;
};

int cmd_analyze(const io::Game& game, const AnalyzeOptions& opts, std::ostream& out);

struct ApproximateOptions {
  std::optional<std::string> subset;  ///< defaults to N
  std::optional<int> degree;          ///< degree-k approximation instead of an S-approximation
  std::optional<std::string> profile;
  OutputFormat format = OutputFormat::text;
};

int cmd_approximate(const io::Game& game, const ApproximateOptions& opts, std::ostream& out);

struct VerifyOptions {
  std::optional<std::string> profile;
  int trials = 20;
  std::uint64_t seed = 1;
  std::size_t samples = 10000;
  /// Negative control: perturbs the projection route so the suite must fail.
  bool inject_fault = false;
};

struct CheckResult {
  std::string name;
  bool passed;
  double max_deviation;
  double tolerance;
  std::string detail;
};

std::vector<CheckResult> run_verification(const io::Game& game, const VerifyOptions& opts);

int cmd_verify(const io::Game& game, const VerifyOptions& opts, std::ostream& out);

struct GenerateOptions {
  std::string kind = "random";  ///< random | weighted-voting | unanimity
  std::optional<int> players;
  std::uint64_t seed = 1;
  std::string distribution = "uniform";
  std::optional<double> quota;
  std::string weights;
  std::string members;
  std::string name;
};

io::Game generate_game(const GenerateOptions& opts);

int cmd_generate(const GenerateOptions& opts, std::ostream& out);

}  // namespace pbf::cli
