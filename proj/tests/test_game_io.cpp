#include <pbf/game_file.hpp>
#include <pbf/generators.hpp>

#include <doctest.h>

#include "reference.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace pbf;
using pbf::io::parse_game;

namespace {

template <class E>
std::string message_of(const std::string& text) {
  try {
    parse_game(text);
  } catch (const E& e) {
    return e.what();
  }
  return "<no error>";
}

}  // namespace

TEST_CASE("explicit tables") {
  const auto g = parse_game(R"({"n":2, "values":[0,1,1,1]})");
  CHECK(g.function.players() == 2);
  CHECK(ref::table(g.function) == std::vector<double>{0, 1, 1, 1});
  CHECK(g.name.empty());
  const auto named = parse_game(R"({"version":1, "name":"or", "n":1, "values":[0.5, -2e3]})");
  CHECK(named.name == "or");
  CHECK(ref::table(named.function) == std::vector<double>{0.5, -2000});
}

TEST_CASE("generators expand at parse time") {
  const auto wv = parse_game(R"({"weighted_voting": {"quota": 3, "weights":[2,2,1]}})").function;
  CHECK(wv.players() == 3);
  CHECK(wv[CoalitionMask::from_players(3, {1, 2})] == 1.0);
  CHECK(wv[CoalitionMask::from_players(3, {1, 3})] == 1.0);
  CHECK(wv[CoalitionMask::from_players(3, {3})] == 0.0);
  CHECK(wv[CoalitionMask::from_players(3, {2, 3})] == 1.0);

  const auto u = parse_game(R"({"unanimity": {"players":[1,2]}, "n":3})").function;
  CHECK(ref::table(u) == ref::table(unanimity_game(3, CoalitionMask::from_players(3, {1, 2}))));

  const auto r1 = parse_game(R"({"n":6, "random": {"seed": 7}})").function;
  const auto r2 = parse_game(R"({"n":6, "random": {"seed": 7, "distribution": "uniform"}})").function;
  CHECK(ref::table(r1) == ref::table(r2));
  CHECK(ref::table(r1) == ref::table(random_game(6, 7)));
  const auto mono = parse_game(R"({"n":4, "random": {"seed": 7, "distribution": "monotone"}})").function;
  CHECK(ref::table(mono) == ref::table(random_game(4, 7, RandomDistribution::monotone)));
}

TEST_CASE("malformed documents report line and column") {
  try {
    parse_game("{\n  \"n\": 2,\n  \"values\": [0, 1, 1,, 1]\n}");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 22);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_game(""), ParseError);
  CHECK_THROWS_AS(parse_game("{\"n\": 2"), ParseError);
  CHECK_THROWS_AS(parse_game("[0, 1]"), ValidationError);
  CHECK_THROWS_AS(parse_game(R"({"n":1, "values":[NaN, 1]})"), ParseError);
}

TEST_CASE("schema violations name the field") {
  CHECK(message_of<ValidationError>(R"({"n":2, "values":[0,1,1]})").rfind("values:", 0) == 0);
  CHECK(message_of<ValidationError>(R"({"n":25, "values":[]})").rfind("n:", 0) == 0);
  CHECK(message_of<ValidationError>(R"({"n":0, "values":[]})").rfind("n:", 0) == 0);
  CHECK(message_of<ValidationError>(R"({"n":1.5, "values":[0,1]})").rfind("n:", 0) == 0);
  CHECK(message_of<ValidationError>(R"({"values":[0,1]})").rfind("n:", 0) == 0);
  CHECK(message_of<ValidationError>(R"({"n":1, "values":[0,"x"]})").rfind("values[1]:", 0) == 0);
  CHECK(message_of<ValidationError>(R"({"n":1, "values":[0,1e400]})").find("not finite") !=
        std::string::npos);
  CHECK(message_of<ValidationError>(R"({"version":2, "n":1, "values":[0,1]})").rfind("version:", 0) == 0);
  CHECK(message_of<ValidationError>(R"({"name":3, "n":1, "values":[0,1]})").rfind("name:", 0) == 0);
  CHECK(message_of<ValidationError>(R"({"n":1})").rfind("game:", 0) == 0);
  CHECK(message_of<ValidationError>(R"({"n":2, "values":[0,1,1,1], "random":{"seed":1}})").rfind("game:", 0) == 0);
  CHECK(message_of<ValidationError>(R"({"weighted_voting": {"weights":[1]}})").rfind("weighted_voting:", 0) == 0);
  CHECK(message_of<ValidationError>(R"({"weighted_voting": {"quota":1, "weights":[]}})")
            .rfind("weighted_voting.weights:", 0) == 0);
  CHECK(message_of<ValidationError>(R"({"n":3, "weighted_voting": {"quota":1, "weights":[1,1]}})")
            .rfind("n:", 0) == 0);
  CHECK(message_of<ValidationError>(R"({"n":2, "unanimity": {"players":[3]}})")
            .rfind("unanimity.players[0]:", 0) == 0);
  CHECK(message_of<ValidationError>(R"({"unanimity": {"players":[1]}})").rfind("n:", 0) == 0);
  CHECK(message_of<ValidationError>(R"({"n":2, "random": {"seed": -1}})").rfind("random.seed:", 0) == 0);
  CHECK(message_of<ValidationError>(R"({"n":2, "random": {"seed": 1, "distribution": "normal"}})")
            .rfind("random.distribution:", 0) == 0);
}

TEST_CASE("serialization round-trips explicit tables") {
  Rng rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = ref::random_int(rng, 1, 8);
    io::Game g{trial % 2 ? "game" + std::to_string(trial) : "", ref::function(n, ref::random_table(rng, n, -1e6, 1e6))};
    const auto text = io::serialize_game(g);
    const auto back = parse_game(text);
    CHECK(back.name == g.name);
    CHECK(ref::table(back.function) == ref::table(g.function));
    CHECK(io::serialize_game(back) == text);
  }
}

TEST_CASE("files and streams") {
  const auto dir = std::filesystem::temp_directory_path() / "pbf_game_io_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "majority.json";
  {
    std::ofstream out(path);
    out << R"({"weighted_voting": {"quota": 2, "weights": [1, 1, 1]}})";
  }
  const auto g = io::load_game(path);
  CHECK(g.name == "majority");
  CHECK(g.function[CoalitionMask::from_players(3, {1, 3})] == 1.0);
  CHECK(g.function[CoalitionMask::from_players(3, {2})] == 0.0);
  std::filesystem::remove_all(dir);

  std::istringstream in(R"({"n":1, "values":[3, 4]})");
  CHECK(ref::table(parse_game(in).function) == std::vector<double>{3, 4});
  CHECK_THROWS_AS(io::load_game(dir / "missing.json"), ParseError);
}
