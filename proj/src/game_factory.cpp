#include <memory>
#include <stdexcept>

#include "arena/games/checkers.hpp"
#include "arena/games/holdem.hpp"
#include "arena/games/line_games.hpp"
#include "arena/games/negotiation.hpp"
#include "arena/games/othello.hpp"
#include "arena/games/pong.hpp"
#include "arena/games/surround.hpp"

namespace arena {

std::unique_ptr<Game> make_game(GameId id) {
  switch (id) {
    case GameId::Othello: return std::make_unique<othello::OthelloGame>();
    case GameId::Pong: return std::make_unique<pong::PongGame>();
    case GameId::Surround: return std::make_unique<surround::SurroundGame>();
    case GameId::Checkers: return std::make_unique<checkers::CheckersGame>();
    case GameId::TicTacToe: return std::make_unique<grid::TicTacToeGame>();
    case GameId::Connect4: return std::make_unique<grid::Connect4Game>();
    case GameId::Holdem: return std::make_unique<holdem::HoldemGame>();
    case GameId::Negotiation:
      return std::make_unique<negotiation::NegotiationGame>();
  }
  throw std::invalid_argument("unknown game id");
}

}  // namespace arena
