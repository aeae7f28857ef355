#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace arena {

// Movement directions.  The enumeration order (Up, Down, Left, Right) is
// also the reporting order used by the adjacency and safety subproblems.
enum class Direction { Up, Down, Left, Right };

// Diagonal travel direction of the ball as seen by the right-side player.
enum class BallDirection { LeftDown, RightUp, LeftUp, RightDown };

const char* to_string(Direction d);
const char* to_string(BallDirection d);
constexpr std::array<Direction, 4> kAllDirections = {
    Direction::Up, Direction::Down, Direction::Left, Direction::Right};

// A board coordinate.  Meaning is game-specific: (row, col) for the grid
// games, (col, row) for Othello (column letter first, as rendered).
struct Coord {
  int a = 0;
  int b = 0;
  auto operator<=>(const Coord&) const = default;
};

// Fixed-point percentage with one decimal, e.g. 84.9% -> {849}.
struct Percent {
  int tenths = 0;
  auto operator<=>(const Percent&) const = default;
};

using CoordSet = std::set<Coord>;
using MovePath = std::vector<Coord>;  // square sequence of a (multi-)jump
using PathSet = std::set<MovePath>;
using AdjacentValues = std::array<int, 4>;     // indexed by Direction
using ActionSet = std::set<Direction>;
using SafetyMap = std::map<Direction, bool>;   // true = Safe

// Ground truth (or extracted answer) for one intermediate subproblem.
// monostate means the subproblem is undefined on this turn: it then takes
// part in no metric.
using Payload = std::variant<std::monostate, bool, int64_t, Percent,
                             BallDirection, CoordSet, PathSet, AdjacentValues,
                             ActionSet, SafetyMap>;

inline bool is_defined(const Payload& p) {
  return !std::holds_alternative<std::monostate>(p);
}

// Wire/textual type of each subproblem slot.  CoordSet and OthelloCoordSet
// share a storage type but differ in rendering: "(2,2)" vs "(C,5)".
enum class PayloadKind {
  Bool,
  Int,
  Percent,
  BallDir,
  CoordSet,
  OthelloCoordSet,
  PathSet,
  Adjacent,
  Actions,
  Safety,
};

}  // namespace arena
