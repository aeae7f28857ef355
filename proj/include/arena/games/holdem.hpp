#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "arena/game.hpp"

namespace arena::holdem {

// Card encoding: rank-major, rank 0..12 = 2..A, suit 0..3.
using Card = int;

inline int rank_of(Card c) { return c >> 2; }
inline int suit_of(Card c) { return c & 3; }
inline Card make_card(int rank, int suit) { return rank * 4 + suit; }

extern const char* const kSuitNames[4];   // Spades, Hearts, Diamonds, Clubs
extern const char kRankChars[13];         // '2'..'9','T','J','Q','K','A'

std::string card_text(Card c);            // e.g. "Hearts Q", "Spades 10"
std::optional<Card> parse_card(const std::string& text);
std::string card_list_text(const std::vector<Card>& cards);

// Hand strength: category 1 (Royal Flush) .. 10 (High Card); score is a
// packed total order where a larger value is a stronger hand.
struct HandRank {
  int category = 10;
  uint32_t score = 0;
  auto operator<=>(const HandRank&) const = default;
};

inline bool beats(const HandRank& a, const HandRank& b) {
  return a.score > b.score;
}

HandRank evaluate_cards(const Card* cards, int n);
HandRank evaluate_hand(const std::vector<Card>& cards);

// Canonical 169-class preflop index: pairs on the diagonal, suited hands
// in the upper triangle, offsuit in the lower.
int hand_class_index(Card a, Card b);
std::string hand_class_name(int index);
std::array<Card, 2> hand_class_representative(int index);

// Pinned win-probability table (percent tenths) vs a uniform random hand
// with all five community cards dealt out.
extern const std::array<int16_t, 169> kPreflopWinTenths;

// Fresh Monte Carlo estimate of the same quantity (ties excluded from
// wins); used to generate and to audit the pinned table.
double preflop_win_percent_mc(int class_index, uint64_t seed, int trials);

Percent oracle_preflop(Card a, Card b);
int oracle_rank(const std::array<Card, 2>& hole,
                const std::vector<Card>& community);

enum class BetAction { Fold, CheckCall, RaiseHalfPot, RaiseFullPot, AllIn };
enum class Stage { Preflop, Flop, Turn, River };

constexpr int kStartingStack = 100;
constexpr int kSmallBlind = 1;
constexpr int kBigBlind = 2;
constexpr int kHandsPerMatch = 8;

struct HandState {
  std::array<Card, 52> deck{};
  std::array<std::array<Card, 2>, 2> hole{};
  int board_revealed = 0;  // 0 / 3 / 4 / 5 cards of deck[4..8]
  std::array<int, 2> contrib{};
  std::array<bool, 2> acted{};
  Stage stage = Stage::Preflop;
  int to_act = 0;
  bool over = false;

  Card board_card(int i) const { return deck[4 + i]; }
  std::vector<Card> community() const;
};

struct State {
  std::array<int, 2> stacks{kStartingStack, kStartingStack};
  int hands_played = 0;
  bool match_over = false;
  HandState hand;
};

void start_hand(State& s, RngStream& env);
// One betting decision by hand.to_act; closes rounds, deals streets, and
// runs the showdown / next-hand bookkeeping (drawing a fresh deck).
void holdem_step(State& s, BetAction action, RngStream& env);

const char* action_text(BetAction a);
std::optional<BetAction> parse_bet_action(const std::string& text);

class HoldemGame final : public Game {
 public:
  GameId id() const override { return GameId::Holdem; }
  void reset(RngStream& env) override;
  GameResult result() const override;
  GameResult cutoff_result() const override;
  Seat to_move() const override;
  std::vector<std::string> legal_actions(Seat seat) const override;
  std::optional<std::string> normalize_action(
      Seat seat, const std::string& action) const override;
  std::string state_text(Seat viewer) const override;
  std::vector<Payload> compute_truths(Seat viewer) const override;
  void apply(Seat seat, const std::string& action, RngStream& env) override;
  std::string reply_for_action(const std::string& action) const override;

  const State& state() const { return st_; }
  void set_state(State s) { st_ = std::move(s); }

 private:
  State st_;
};

}  // namespace arena::holdem
