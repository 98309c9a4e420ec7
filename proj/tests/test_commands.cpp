#include <pbf/commands.hpp>
#include <pbf/generators.hpp>

#include <doctest.h>

#include "reference.hpp"

#include <sstream>

using namespace pbf;
using namespace pbf::cli;

namespace {

io::Game or_game() { return {"or", PseudoBooleanFunction(2, {0, 1, 1, 1})}; }

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

bool has_line(const std::string& text, const std::string& line) {
  for (const auto& l : lines(text)) {
    if (l == line) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("argument parsing") {
  CHECK(parse_format("csv") == OutputFormat::csv);
  CHECK(parse_format("text") == OutputFormat::text);
  CHECK_THROWS_AS(parse_format("xml"), ValidationError);

  const auto u = parse_profile(std::nullopt, 3);
  for (int i = 0; i < 3; ++i) CHECK(u[i] == 0.5);
  const auto s = parse_profile(std::string("0.25"), 4);
  for (int i = 0; i < 4; ++i) CHECK(s[i] == 0.25);
  const auto l = parse_profile(std::string("0.3, 0.8"), 2);
  CHECK(l[0] == 0.3);
  CHECK(l[1] == 0.8);
  CHECK_THROWS_AS(parse_profile(std::string("0.3,0.8"), 3), ValidationError);
  CHECK_THROWS_AS(parse_profile(std::string("0.3,abc"), 2), ValidationError);
  CHECK_THROWS_AS(parse_profile(std::string("1.5"), 2), DomainError);

  CHECK(parse_subset("{}", 3).is_empty());
  CHECK(parse_subset("", 3).is_empty());
  CHECK(parse_subset("1,3", 3).bits() == 0b101u);
  CHECK(parse_subset("{3, 1}", 3).bits() == 0b101u);
  CHECK_THROWS_AS(parse_subset("4", 3), ValidationError);
  CHECK_THROWS_AS(parse_subset("0", 3), ValidationError);
  CHECK_THROWS_AS(parse_subset("1,x", 3), ValidationError);

  CHECK(parse_selector("all", 3).size() == 8);
  CHECK(parse_selector("singletons", 5).size() == 5);
  CHECK(parse_selector("pairs", 5).size() == 10);
  const auto list = parse_selector("{1};{1,2};{}", 3);
  REQUIRE(list.size() == 3);
  CHECK(list[1].bits() == 0b011u);
  CHECK(list[2].is_empty());
  CHECK(parse_selector("all", kMaxEnumeratedPlayers).size() == table_size(kMaxEnumeratedPlayers));
  CHECK_THROWS_AS(parse_selector("all", kMaxEnumeratedPlayers + 1), ValidationError);
}

TEST_CASE("number and subset formatting") {
  CHECK(format_subset(CoalitionMask::from_players(4, {4, 2})) == "{2,4}");
  CHECK(format_subset(CoalitionMask::empty(2)) == "{}");
  CHECK(format_number(1.0) == "1");
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(-0.0) == "0");
  CHECK(format_number(1.0 / 3.0) == "0.333333333333");
  CHECK(format_number(2.0 / 3.0) == "0.666666666667");
  CHECK(format_number(123456789012345.0) == "1.23456789012e+14");
  CHECK(format_number(1e-20) == "1e-20");
}

TEST_CASE("analyze") {
  std::ostringstream out;
  CHECK(cmd_analyze(or_game(), {}, out) == kExitOk);
  const auto csv = out.str();
  const auto rows = lines(csv);
  REQUIRE(!rows.empty());
  CHECK(rows[0] == "subset,index,value,mask");
  // Four subsets times interaction, influence and Shapley, plus the three
  // normalized indexes defined for nonempty subsets.
  CHECK(rows.size() == 1 + 15);
  CHECK(has_line(csv, "\"{}\",influence,0,0"));
  CHECK(has_line(csv, "\"{1}\",influence,0.5,1"));
  CHECK(has_line(csv, "\"{2}\",influence,0.5,2"));
  CHECK(has_line(csv, "\"{1,2}\",influence,1,3"));
  CHECK(has_line(csv, "\"{1,2}\",interaction,-1,3"));
  CHECK(has_line(csv, "\"{}\",interaction,0.75,0"));
  CHECK(has_line(csv, "\"{1}\",shapley,0.5,1"));
  CHECK_FALSE(has_line(csv, "\"{}\",normalized,0,0"));

  std::ostringstream singles;
  AnalyzeOptions opts;
  opts.subsets = "singletons";
  CHECK(cmd_analyze(or_game(), opts, singles) == kExitOk);
  int influence_rows = 0;
  for (const auto& l : lines(singles.str())) influence_rows += l.find(",influence,") != std::string::npos;
  CHECK(influence_rows == 2);

  std::ostringstream weighted;
  opts.profile = "0.25";
  opts.subsets = "{1}";
  CHECK(cmd_analyze(or_game(), opts, weighted) == kExitOk);
  CHECK(has_line(weighted.str(), "\"{1}\",influence,0.75,1"));

  std::ostringstream text;
  opts.format = OutputFormat::text;
  CHECK(cmd_analyze(or_game(), opts, text) == kExitOk);
  CHECK(text.str().find("profile: (0.25, 0.25)") != std::string::npos);

  std::ostringstream sink;
  opts.subsets = "{3}";
  CHECK_THROWS_AS(cmd_analyze(or_game(), opts, sink), ValidationError);
}

TEST_CASE("approximate") {
  ApproximateOptions opts;
  opts.subset = "1";
  opts.format = OutputFormat::csv;
  std::ostringstream out;
  CHECK(cmd_approximate(or_game(), opts, out) == kExitOk);
  const auto csv = out.str();
  CHECK(has_line(csv, "\"{}\",coefficient,0.5,0"));
  CHECK(has_line(csv, "\"{1}\",coefficient,0.5,1"));
  CHECK(has_line(csv, "\"{1}\",interaction,0.5,1"));
  CHECK(has_line(csv, "\"{1}\",residual,0.125,1"));
  CHECK(lines(csv).size() == 5);

  std::ostringstream text;
  opts.format = OutputFormat::text;
  CHECK(cmd_approximate(or_game(), opts, text) == kExitOk);
  CHECK(text.str().find("(leading: interaction index)") != std::string::npos);
  CHECK(text.str().find("residual: 0.125") != std::string::npos);

  std::ostringstream full;
  CHECK(cmd_approximate(or_game(), {}, full) == kExitOk);
  CHECK(full.str().find("residual: 0\n") != std::string::npos);

  // u_T with T inside S prints exactly one coefficient.
  const io::Game u{"u", unanimity_game(4, CoalitionMask::from_players(4, {2, 3}))};
  ApproximateOptions uo;
  uo.subset = "1,2,3";
  uo.profile = "0.2,0.4,0.6,0.8";
  uo.format = OutputFormat::csv;
  std::ostringstream uout;
  CHECK(cmd_approximate(u, uo, uout) == kExitOk);
  int coeffs = 0;
  for (const auto& l : lines(uout.str())) coeffs += l.find(",coefficient,") != std::string::npos;
  CHECK(coeffs == 1);
  CHECK(has_line(uout.str(), "\"{2,3}\",coefficient,1,6"));

  ApproximateOptions deg;
  deg.degree = 1;
  std::ostringstream dout;
  CHECK(cmd_approximate(or_game(), deg, dout) == kExitOk);
  CHECK(dout.str().find("target: degree <= 1") != std::string::npos);

  ApproximateOptions both;
  both.degree = 1;
  both.subset = "1";
  std::ostringstream sink;
  CHECK_THROWS_AS(cmd_approximate(or_game(), both, sink), ValidationError);
}

TEST_CASE("verify") {
  std::ostringstream out;
  CHECK(cmd_verify(or_game(), {}, out) == kExitOk);
  for (const char* name : {"four_way_influence", "parseval", "orthonormality", "monte_carlo", "quadrature"}) {
    CHECK(out.str().find(std::string("PASS ") + name) != std::string::npos);
  }

  const auto results = run_verification({"r", random_game(7, 5)}, {});
  for (const auto& r : results) {
    CHECK_MESSAGE(r.passed, r.name << " deviation " << r.max_deviation);
  }

  VerifyOptions faulty;
  faulty.inject_fault = true;
  std::ostringstream bad;
  CHECK(cmd_verify(or_game(), faulty, bad) == kExitVerificationFailed);
  CHECK(bad.str().find("FAIL four_way_influence") != std::string::npos);
  CHECK(bad.str().find("verification failed: four_way_influence") != std::string::npos);

  VerifyOptions weighted;
  weighted.profile = "0.2,0.9";
  std::ostringstream wout;
  CHECK(cmd_verify(or_game(), weighted, wout) == kExitOk);

  VerifyOptions none;
  none.trials = 0;
  CHECK_THROWS_AS(run_verification(or_game(), none), ValidationError);
}

TEST_CASE("generate") {
  GenerateOptions opts;
  opts.players = 5;
  opts.seed = 9;
  const auto g = generate_game(opts);
  CHECK(ref::table(g.function) == ref::table(random_game(5, 9)));
  std::ostringstream a;
  std::ostringstream b;
  CHECK(cmd_generate(opts, a) == kExitOk);
  CHECK(cmd_generate(opts, b) == kExitOk);
  CHECK(a.str() == b.str());
  CHECK(ref::table(io::parse_game(a.str()).function) == ref::table(g.function));

  GenerateOptions wv;
  wv.kind = "weighted-voting";
  wv.quota = 3;
  wv.weights = "2,2,1";
  wv.name = "wv";
  const auto w = generate_game(wv);
  CHECK(w.name == "wv");
  CHECK(w.function[CoalitionMask::from_players(3, {2, 3})] == 1.0);
  CHECK(w.function[CoalitionMask::from_players(3, {3})] == 0.0);

  GenerateOptions un;
  un.kind = "unanimity";
  un.players = 3;
  un.members = "1,2";
  CHECK(ref::table(generate_game(un).function) ==
        ref::table(unanimity_game(3, CoalitionMask::from_players(3, {1, 2}))));

  GenerateOptions missing;
  CHECK_THROWS_AS(generate_game(missing), ValidationError);
  GenerateOptions big;
  big.players = 25;
  CHECK_THROWS_AS(generate_game(big), ValidationError);
  GenerateOptions dist;
  dist.players = 3;
  dist.distribution = "cauchy";
  CHECK_THROWS_AS(generate_game(dist), ValidationError);
  GenerateOptions kind;
  kind.kind = "lottery";
  CHECK_THROWS_AS(generate_game(kind), ValidationError);
  GenerateOptions noquota;
  noquota.kind = "weighted-voting";
  noquota.weights = "1,1";
  CHECK_THROWS_AS(generate_game(noquota), ValidationError);
}
