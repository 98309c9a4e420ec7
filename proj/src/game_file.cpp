#include <pbf/game_file.hpp>

#include <pbf/generators.hpp>

#include <json.hpp>

#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

namespace pbf::io {

namespace {

using nlohmann::json;

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

[[noreturn]] void invalid(const std::string& field, const std::string& msg) {
  throw ValidationError(field + ": " + msg);
}

const json& require(const json& obj, const char* key, const std::string& where) {
  const auto it = obj.find(key);
  if (it == obj.end()) invalid(where, std::string("missing field '") + key + "'");
  return *it;
}

double as_real(const json& v, const std::string& field) {
  if (!v.is_number()) invalid(field, "expected a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) invalid(field, "value is not finite");
  return x;
}

int as_player_count(const json& v, const std::string& field) {
  if (!v.is_number_integer()) invalid(field, "expected an integer");
  const auto n = v.get<long long>();
  if (n < 1 || n > kMaxPlayers) {
    invalid(field, "player count " + std::to_string(n) + " outside [1, " +
                       std::to_string(kMaxPlayers) + "]");
  }
  return static_cast<int>(n);
}

std::vector<double> real_list(const json& v, const std::string& field) {
  if (!v.is_array()) invalid(field, "expected an array");
  std::vector<double> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(as_real(v[i], field + "[" + std::to_string(i) + "]"));
  }
  return out;
}

PseudoBooleanFunction expand(const json& doc, std::optional<int> n) {
  const char* kinds[] = {"values", "weighted_voting", "unanimity", "random"};
  int present = 0;
  for (const char* k : kinds) present += doc.contains(k) ? 1 : 0;
  if (present != 1) {
    invalid("game", "expected exactly one of values, weighted_voting, unanimity, random");
  }

  if (doc.contains("values")) {
    std::vector<double> values = real_list(doc["values"], "values");
    if (!n) invalid("n", "required with an explicit value table");
    if (values.size() != table_size(*n)) {
      invalid("values", "length " + std::to_string(values.size()) + " but 2^n = " +
                            std::to_string(table_size(*n)));
    }
    return PseudoBooleanFunction(*n, std::move(values));
  }

  if (doc.contains("weighted_voting")) {
    const json& spec = doc["weighted_voting"];
    if (!spec.is_object()) invalid("weighted_voting", "expected an object");
    const double quota = as_real(require(spec, "quota", "weighted_voting"), "weighted_voting.quota");
    const std::vector<double> weights =
        real_list(require(spec, "weights", "weighted_voting"), "weighted_voting.weights");
    if (weights.empty() || weights.size() > static_cast<std::size_t>(kMaxPlayers)) {
      invalid("weighted_voting.weights", "needs between 1 and " + std::to_string(kMaxPlayers) +
                                             " weights");
    }
    if (n && static_cast<std::size_t>(*n) != weights.size()) {
      invalid("n", "disagrees with the " + std::to_string(weights.size()) + " voting weights");
    }
    return weighted_voting_game(quota, weights);
  }

  if (doc.contains("unanimity")) {
    const json& spec = doc["unanimity"];
    if (!spec.is_object()) invalid("unanimity", "expected an object");
    if (!n) invalid("n", "required with a unanimity generator");
    const json& players = require(spec, "players", "unanimity");
    if (!players.is_array()) invalid("unanimity.players", "expected an array");
    std::vector<int> list;
    for (std::size_t i = 0; i < players.size(); ++i) {
      const std::string field = "unanimity.players[" + std::to_string(i) + "]";
      if (!players[i].is_number_integer()) invalid(field, "expected an integer");
      const auto player = players[i].get<long long>();
      if (player < 1 || player > *n) invalid(field, "player outside 1.." + std::to_string(*n));
      list.push_back(static_cast<int>(player));
    }
    return unanimity_game(*n, CoalitionMask::from_players(*n, list));
  }

  const json& spec = doc["random"];
  if (!spec.is_object()) invalid("random", "expected an object");
  if (!n) invalid("n", "required with a random generator");
  const json& seed = require(spec, "seed", "random");
  if (!seed.is_number_unsigned()) invalid("random.seed", "expected a nonnegative integer");
  RandomDistribution dist = RandomDistribution::uniform;
  if (spec.contains("distribution")) {
    if (!spec["distribution"].is_string()) invalid("random.distribution", "expected a string");
    try {
      dist = parse_distribution(spec["distribution"].get<std::string>());
    } catch (const DomainError& e) {
      invalid("random.distribution", e.what());
    }
  }
  return random_game(*n, seed.get<std::uint64_t>(), dist);
}

}  // namespace

Game parse_game(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                         ": " + e.what(),
                     line, column);
  } catch (const json::out_of_range& e) {
    // Literals such as 1e400 overflow to infinity.
    invalid("value", std::string("not finite: ") + e.what());
  }
  if (!doc.is_object()) invalid("game", "top level must be an object");

  if (doc.contains("version")) {
    const json& v = doc["version"];
    if (!v.is_number_integer() || v.get<long long>() != kGameFormatVersion) {
      invalid("version", "unsupported format version (expected " +
                             std::to_string(kGameFormatVersion) + ")");
    }
  }
  std::string name;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) invalid("name", "expected a string");
    name = doc["name"].get<std::string>();
  }
  std::optional<int> n;
  if (doc.contains("n")) n = as_player_count(doc["n"], "n");

  return Game{std::move(name), expand(doc, n)};
}

Game parse_game(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_game(buf.str());
}

Game load_game(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open game file " + path.string());
  Game g = parse_game(in);
  if (g.name.empty()) g.name = path.stem().string();
  return g;
}

std::string serialize_game(const Game& game) {
  json doc;
  doc["version"] = kGameFormatVersion;
  if (!game.name.empty()) doc["name"] = game.name;
  doc["n"] = game.function.players();
  doc["values"] = std::vector<double>(game.function.values().begin(), game.function.values().end());
  return doc.dump(2) + "\n";
}

}  // namespace pbf::io
