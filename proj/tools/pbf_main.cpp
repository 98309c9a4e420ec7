#include <pbf/commands.hpp>
#include <pbf/errors.hpp>
#include <pbf/game_file.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

pbf::io::Game read_game(const std::string& path) {
  if (path == "-") return pbf::io::parse_game(std::cin);
  return pbf::io::load_game(path);
}

template <class Fn>
int with_output(const std::string& out_path, Fn&& fn) {
  if (out_path.empty() || out_path == "-") return fn(std::cout);
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw pbf::ValidationError("--out: cannot open " + out_path + " for writing");
  const int code = fn(out);
  out.flush();
  if (!out) throw pbf::ValidationError("--out: write to " + out_path + " failed");
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Banzhaf-type indices and least-squares approximations of pseudo-Boolean functions"};
  app.require_subcommand(1);

  std::string game_path;
  std::string out_path;
  std::string format_name;
  std::optional<std::string> profile;

  pbf::cli::AnalyzeOptions analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Index report for selected subsets");
  analyze_cmd->add_option("game", game_path, "Game file ('-' reads stdin)")->required();
  analyze_cmd->add_option("--p", profile, "Probability profile: list, scalar, or omitted for 1/2");
  analyze_cmd->add_option("--subsets", analyze.subsets,
                          "all | singletons | pairs | explicit list such as '{1};{1,2}'")
      ->capture_default_str();
  analyze_cmd->add_option("--format", format_name, "csv or text")->default_str("csv");
  analyze_cmd->add_option("--out", out_path, "Output file (default stdout)");

  pbf::cli::ApproximateOptions approximate;
  auto* approx_cmd = app.add_subcommand("approximate", "Best S- or degree-k approximation");
  approx_cmd->add_option("game", game_path, "Game file ('-' reads stdin)")->required();
  auto* subset_opt = approx_cmd->add_option("--subset", approximate.subset, "Subset S, e.g. '1,3'");
  approx_cmd->add_option("--degree", approximate.degree, "Degree bound k")->excludes(subset_opt);
  approx_cmd->add_option("--p", profile, "Probability profile");
  approx_cmd->add_option("--format", format_name, "text or csv")->default_str("text");
  approx_cmd->add_option("--out", out_path, "Output file (default stdout)");

  pbf::cli::VerifyOptions verify;
  auto* verify_cmd = app.add_subcommand("verify", "Cross-check the library against oracles");
  verify_cmd->add_option("game", game_path, "Game file ('-' reads stdin)")->required();
  verify_cmd->add_option("--p", profile, "Probability profile");
  verify_cmd->add_option("--trials", verify.trials, "Random subsets per check")->capture_default_str();
  verify_cmd->add_option("--seed", verify.seed, "Seed for subsets and sampling")->capture_default_str();
  verify_cmd->add_option("--samples", verify.samples, "Monte Carlo samples")->capture_default_str();
  verify_cmd->add_flag("--inject-fault", verify.inject_fault,
                       "Perturb the projection route (negative control)");
  verify_cmd->add_option("--out", out_path, "Output file (default stdout)");

  pbf::cli::GenerateOptions generate;
  int players = 0;
  double quota = 0.0;
  auto* generate_cmd = app.add_subcommand("generate", "Write a game file");
  generate_cmd->add_option("kind", generate.kind, "random | weighted-voting | unanimity")
      ->capture_default_str();
  auto* n_opt = generate_cmd->add_option("--n", players, "Number of players");
  generate_cmd->add_option("--seed", generate.seed, "Seed for random games")->capture_default_str();
  generate_cmd->add_option("--distribution", generate.distribution,
                           "uniform | boolean | monotone")
      ->capture_default_str();
  auto* quota_opt = generate_cmd->add_option("--quota", quota, "Weighted-voting quota");
  generate_cmd->add_option("--weights", generate.weights, "Voting weights, e.g. '2,2,1'");
  generate_cmd->add_option("--members", generate.members, "Unanimity coalition, e.g. '1,2'");
  generate_cmd->add_option("--name", generate.name, "Game name");
  generate_cmd->add_option("--out", out_path, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? pbf::cli::kExitOk : pbf::cli::kExitInvalid;
  }

  try {
    if (analyze_cmd->parsed()) {
      const auto game = read_game(game_path);
      analyze.profile = profile;
      if (!format_name.empty()) analyze.format = pbf::cli::parse_format(format_name);
      return with_output(out_path, [&](std::ostream& out) {
        return pbf::cli::cmd_analyze(game, analyze, out);
      });
    }
    if (approx_cmd->parsed()) {
      const auto game = read_game(game_path);
      approximate.profile = profile;
      if (!format_name.empty()) approximate.format = pbf::cli::parse_format(format_name);
      return with_output(out_path, [&](std::ostream& out) {
        return pbf::cli::cmd_approximate(game, approximate, out);
      });
    }
    if (verify_cmd->parsed()) {
      const auto game = read_game(game_path);
      verify.profile = profile;
      return with_output(out_path, [&](std::ostream& out) {
        return pbf::cli::cmd_verify(game, verify, out);
      });
    }
    if (*n_opt) generate.players = players;
    if (*quota_opt) generate.quota = quota;
    return with_output(out_path, [&](std::ostream& out) {
      return pbf::cli::cmd_generate(generate, out);
    });
  } catch (const pbf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return pbf::cli::kExitInvalid;
  }
}
