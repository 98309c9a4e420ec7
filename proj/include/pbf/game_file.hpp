#pragma once

// Game files: JSON documents holding either an explicit value table or a
// generator that expands to one.
//
//   {"version": 1, "n": 2, "values": [0, 1, 1, 1]}
//   {"version": 1, "weighted_voting": {"quota": 3, "weights": [2, 2, 1]}}
//   {"version": 1, "n": 3, "unanimity": {"players": [1, 2]}}
//   {"version": 1, "n": 6, "random": {"seed": 7, "distribution": "uniform"}}
//
// "version" defaults to 1 and "name" is an optional identifier. Exactly one
// of values / weighted_voting / unanimity / random must be present.

#include <pbf/core.hpp>

#include <filesystem>
#include <istream>
#include <string>

namespace pbf::io {

inline constexpr int kGameFormatVersion = 1;

struct Game {
  std::string name;
  PseudoBooleanFunction function;
};

/// ParseError on malformed JSON (with line and column), ValidationError on
/// schema violations (with the offending field).
Game parse_game(std::string_view text);
Game parse_game(std::istream& in);
Game load_game(const std::filesystem::path& path);

/// Explicit-table document; parse_game(serialize_game(g)) reproduces g exactly.
std::string serialize_game(const Game& game);

}  // namespace pbf::io
