#include "arena/games/holdem.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace arena::holdem {

const char* const kSuitNames[4] = {"Spades", "Hearts", "Diamonds", "Clubs"};
const char kRankChars[13] = {'2', '3', '4', '5', '6', '7',
                             '8', '9', 'T', 'J', 'Q', 'K', 'A'};

std::string card_text(Card c) {
  std::string out = kSuitNames[suit_of(c)];
  out += ' ';
  int r = rank_of(c);
  if (r <= 7) out += static_cast<char>('2' + r);
  else if (r == 8) out += "10";
  else out += kRankChars[r];
  return out;
}

std::optional<Card> parse_card(const std::string& text) {
  std::istringstream in(text);
  std::string suit_word, rank_word;
  if (!(in >> suit_word >> rank_word)) return std::nullopt;
  int suit = -1;
  for (int s = 0; s < 4; ++s) {
    if (suit_word.size() == std::string(kSuitNames[s]).size() &&
        std::equal(suit_word.begin(), suit_word.end(), kSuitNames[s],
                   [](char a, char b) {
                     return std::tolower(static_cast<unsigned char>(a)) ==
                            std::tolower(static_cast<unsigned char>(b));
                   }))
      suit = s;
  }
  if (suit < 0) return std::nullopt;
  int rank = -1;
  if (rank_word == "10" || rank_word == "T" || rank_word == "t") rank = 8;
  else if (rank_word.size() == 1) {
    char ch = static_cast<char>(std::toupper(
        static_cast<unsigned char>(rank_word[0])));
    for (int r = 0; r < 13; ++r)
      if (kRankChars[r] == ch) rank = r;
  }
  if (rank < 0) return std::nullopt;
  return make_card(rank, suit);
}

std::string card_list_text(const std::vector<Card>& cards) {
  std::string out = "[";
  for (size_t i = 0; i < cards.size(); ++i) {
    if (i) out += ", ";
    out += card_text(cards[i]);
  }
  out += "]";
  return out;
}

namespace {

uint32_t pack_score(int category, const int* keys, int nkeys) {
  uint32_t s = static_cast<uint32_t>(10 - category) << 20;
  for (int i = 0; i < nkeys; ++i)
    s |= static_cast<uint32_t>(keys[i]) << (16 - 4 * i);
  return s;
}

HandRank make_rank(int category, std::initializer_list<int> keys) {
  int buf[5];
  int n = 0;
  for (int k : keys) buf[n++] = k;
  return HandRank{category, pack_score(category, buf, n)};
}

// Top rank of a 5-run in a 13-bit rank mask; the wheel (A-2-3-4-5) maps
// to top '5' so it ranks below 2-3-4-5-6.
int straight_top_mask(uint16_t m) {
  for (int top = 12; top >= 4; --top) {
    uint16_t need = static_cast<uint16_t>(0x1F << (top - 4));
    if ((m & need) == need) return top;
  }
  constexpr uint16_t kWheel = 0x100F;
  if ((m & kWheel) == kWheel) return 3;
  return -1;
}

}  // namespace

HandRank evaluate_cards(const Card* cards, int n) {
  uint16_t suit_mask[4] = {0, 0, 0, 0};
  int rank_cnt[13] = {0};
  for (int i = 0; i < n; ++i) {
    suit_mask[suit_of(cards[i])] |= static_cast<uint16_t>(1 << rank_of(cards[i]));
    rank_cnt[rank_of(cards[i])] += 1;
  }

  int flush_suit = -1;
  for (int s = 0; s < 4; ++s)
    if (std::popcount(suit_mask[s]) >= 5) flush_suit = s;
  if (flush_suit >= 0) {
    int top = straight_top_mask(suit_mask[flush_suit]);
    if (top == 12) return make_rank(1, {12, 11, 10, 9, 8});
    if (top >= 0) return make_rank(2, {top});
  }

  int quad = -1, trip_hi = -1, trip_lo = -1;
  int pair_buf[3] = {-1, -1, -1};
  int npairs = 0;
  for (int r = 12; r >= 0; --r) {
    if (rank_cnt[r] == 4) quad = r;
    else if (rank_cnt[r] == 3) {
      if (trip_hi < 0) trip_hi = r;
      else if (trip_lo < 0) trip_lo = r;
    } else if (rank_cnt[r] == 2 && npairs < 3) pair_buf[npairs++] = r;
  }
  auto kickers = [&](int count, int ex1, int ex2, int* out) {
    int c = 0;
    for (int r = 12; r >= 0 && c < count; --r)
      if (rank_cnt[r] > 0 && r != ex1 && r != ex2) out[c++] = r;
    return c;
  };

  if (quad >= 0) {
    int k[1] = {0};
    kickers(1, quad, -1, k);
    return make_rank(3, {quad, k[0]});
  }
  if (trip_hi >= 0) {
    int pair_part = std::max(trip_lo, npairs > 0 ? pair_buf[0] : -1);
    if (pair_part >= 0) return make_rank(4, {trip_hi, pair_part});
  }
  if (flush_suit >= 0) {
    int k[5], c = 0;
    for (int r = 12; r >= 0 && c < 5; --r)
      if (suit_mask[flush_suit] & (1 << r)) k[c++] = r;
    return make_rank(5, {k[0], k[1], k[2], k[3], k[4]});
  }
  uint16_t all = static_cast<uint16_t>(suit_mask[0] | suit_mask[1] |
                                       suit_mask[2] | suit_mask[3]);
  if (int top = straight_top_mask(all); top >= 0) return make_rank(6, {top});
  if (trip_hi >= 0) {
    int k[2] = {0, 0};
    kickers(2, trip_hi, -1, k);
    return make_rank(7, {trip_hi, k[0], k[1]});
  }
  if (npairs >= 2) {
    int k[1] = {0};
    kickers(1, pair_buf[0], pair_buf[1], k);
    return make_rank(8, {pair_buf[0], pair_buf[1], k[0]});
  }
  if (npairs == 1) {
    int k[3] = {0, 0, 0};
    kickers(3, pair_buf[0], -1, k);
    return make_rank(9, {pair_buf[0], k[0], k[1], k[2]});
  }
  int k[5] = {0, 0, 0, 0, 0};
  kickers(5, -1, -1, k);
  return make_rank(10, {k[0], k[1], k[2], k[3], k[4]});
}

HandRank evaluate_hand(const std::vector<Card>& cards) {
  if (cards.size() < 5 || cards.size() > 7)
    throw std::invalid_argument("evaluate_hand takes 5 to 7 cards");
  uint64_t seen = 0;
  for (Card c : cards) {
    if (c < 0 || c >= 52 || (seen >> c) & 1)
      throw std::invalid_argument("invalid or duplicate card");
    seen |= 1ULL << c;
  }
  return evaluate_cards(cards.data(), static_cast<int>(cards.size()));
}

int hand_class_index(Card a, Card b) {
  int ra = rank_of(a), rb = rank_of(b);
  int hi = std::max(ra, rb), lo = std::min(ra, rb);
  if (hi == lo) return hi * 13 + lo;
  return suit_of(a) == suit_of(b) ? lo * 13 + hi : hi * 13 + lo;
}

std::string hand_class_name(int index) {
  int r = index / 13, c = index % 13;
  std::string out;
  if (r == c) {
    out = {kRankChars[r], kRankChars[r]};
  } else if (r < c) {
    out = {kRankChars[c], kRankChars[r], 's'};
  } else {
    out = {kRankChars[r], kRankChars[c], 'o'};
  }
  return out;
}

std::array<Card, 2> hand_class_representative(int index) {
  int r = index / 13, c = index % 13;
  if (r == c) return {make_card(r, 0), make_card(r, 1)};
  if (r < c) return {make_card(c, 0), make_card(r, 0)};
  return {make_card(r, 0), make_card(c, 1)};
}

double preflop_win_percent_mc(int class_index, uint64_t seed, int trials) {
  std::array<Card, 2> hole = hand_class_representative(class_index);
  Card rest[50];
  int n = 0;
  for (Card c = 0; c < 52; ++c)
    if (c != hole[0] && c != hole[1]) rest[n++] = c;
  RngStream rng(mix_seed(seed, static_cast<uint64_t>(class_index)));
  Card mine[7] = {hole[0], hole[1]};
  Card theirs[7];
  int wins = 0;
  for (int t = 0; t < trials; ++t) {
    int idx[7];
    for (int k = 0; k < 7; ++k) {
      bool dup;
      do {
        idx[k] = static_cast<int>(rng.uniform(50));
        dup = false;
        for (int j = 0; j < k; ++j) dup = dup || idx[j] == idx[k];
      } while (dup);
    }
    theirs[0] = rest[idx[0]];
    theirs[1] = rest[idx[1]];
    for (int b = 0; b < 5; ++b) {
      mine[2 + b] = rest[idx[2 + b]];
      theirs[2 + b] = rest[idx[2 + b]];
    }
    wins += beats(evaluate_cards(mine, 7), evaluate_cards(theirs, 7)) ? 1 : 0;
  }
  return 100.0 * wins / trials;
}

Percent oracle_preflop(Card a, Card b) {
  return Percent{kPreflopWinTenths[hand_class_index(a, b)]};
}

int oracle_rank(const std::array<Card, 2>& hole,
                const std::vector<Card>& community) {
  std::vector<Card> cards(community);
  cards.push_back(hole[0]);
  cards.push_back(hole[1]);
  return evaluate_hand(cards).category;
}

std::vector<Card> HandState::community() const {
  std::vector<Card> out;
  for (int i = 0; i < board_revealed; ++i) out.push_back(board_card(i));
  return out;
}

namespace {

void settle(State& s, int winner /* -1 = split */) {
  HandState& h = s.hand;
  int matched = std::min(h.contrib[0], h.contrib[1]);
  s.stacks[0] += h.contrib[0] - matched;
  s.stacks[1] += h.contrib[1] - matched;
  if (winner < 0) {
    s.stacks[0] += matched;
    s.stacks[1] += matched;
  } else {
    s.stacks[winner] += 2 * matched;
  }
  h.over = true;
  s.hands_played += 1;
}

void showdown(State& s) {
  HandState& h = s.hand;
  HandRank r[2];
  for (int p = 0; p < 2; ++p) {
    Card cs[7] = {h.hole[p][0], h.hole[p][1]};
    for (int i = 0; i < 5; ++i) cs[2 + i] = h.board_card(i);
    r[p] = evaluate_cards(cs, 7);
  }
  settle(s, r[0] == r[1] ? -1 : (beats(r[0], r[1]) ? 0 : 1));
}

// Close finished betting rounds, deal streets, run showdowns, and stop
// once a live decision is pending (or the hand is over).
void resolve(State& s) {
  HandState& h = s.hand;
  while (!h.over) {
    auto eff_acted = [&](int i) { return h.acted[i] || s.stacks[i] == 0; };
    bool equal = h.contrib[0] == h.contrib[1];
    bool closed = eff_acted(0) && eff_acted(1) &&
                  (equal || s.stacks[0] == 0 || s.stacks[1] == 0);
    if (!closed) {
      if (s.stacks[h.to_act] == 0) {
        h.acted[h.to_act] = true;
        h.to_act ^= 1;
        continue;
      }
      return;  // decision pending
    }
    if (h.stage == Stage::River || s.stacks[0] == 0 || s.stacks[1] == 0) {
      h.board_revealed = 5;
      showdown(s);
      return;
    }
    h.stage = h.stage == Stage::Preflop
                  ? Stage::Flop
                  : (h.stage == Stage::Flop ? Stage::Turn : Stage::River);
    h.board_revealed = h.stage == Stage::Flop ? 3
                       : h.stage == Stage::Turn ? 4 : 5;
    h.acted = {false, false};
    h.to_act = 1;  // big blind speaks first after the flop
  }
}

void deal_hand(State& s, RngStream& env) {
  HandState h;
  std::iota(h.deck.begin(), h.deck.end(), 0);
  env.shuffle(h.deck);
  h.hole[0] = {h.deck[0], h.deck[1]};
  h.hole[1] = {h.deck[2], h.deck[3]};
  int sb = std::min(kSmallBlind, s.stacks[0]);
  int bb = std::min(kBigBlind, s.stacks[1]);
  s.stacks[0] -= sb;
  s.stacks[1] -= bb;
  h.contrib = {sb, bb};
  h.to_act = 0;  // small blind opens preflop
  s.hand = h;
}

// Park the match at the next decision point, dealing fresh hands (and
// settling forced all-in ones) as needed.
void advance(State& s, RngStream& env) {
  for (;;) {
    if (!s.hand.over) {
      resolve(s);
      if (!s.hand.over) return;
    }
    s.match_over = s.hands_played >= kHandsPerMatch || s.stacks[0] == 0 ||
                   s.stacks[1] == 0;
    if (s.match_over) return;
    deal_hand(s, env);
  }
}

}  // namespace

void start_hand(State& s, RngStream& env) {
  deal_hand(s, env);
  resolve(s);
}

void holdem_step(State& s, BetAction action, RngStream& env) {
  if (s.match_over || s.hand.over)
    throw std::logic_error("no decision pending");
  HandState& h = s.hand;
  int me = h.to_act, opp = 1 - me;
  int to_call = h.contrib[opp] - h.contrib[me];
  auto pay = [&](int amount) {
    amount = std::min(amount, s.stacks[me]);
    s.stacks[me] -= amount;
    h.contrib[me] += amount;
    return amount;
  };
  switch (action) {
    case BetAction::Fold:
      settle(s, opp);
      break;
    case BetAction::CheckCall:
      pay(to_call);
      h.acted[me] = true;
      break;
    case BetAction::RaiseHalfPot:
    case BetAction::RaiseFullPot: {
      int pot = h.contrib[0] + h.contrib[1];
      int raise = action == BetAction::RaiseHalfPot ? pot / 2 : pot;
      int paid = pay(to_call + raise);
      h.acted[me] = true;
      if (paid > to_call) h.acted[opp] = false;
      break;
    }
    case BetAction::AllIn: {
      int paid = pay(s.stacks[me]);
      h.acted[me] = true;
      if (paid > to_call) h.acted[opp] = false;
      break;
    }
  }
  h.to_act = opp;
  advance(s, env);
}

const char* action_text(BetAction a) {
  switch (a) {
    case BetAction::Fold: return "Fold";
    case BetAction::CheckCall: return "Check and Call";
    case BetAction::RaiseHalfPot: return "Raise Half Pot";
    case BetAction::RaiseFullPot: return "Raise Full Pot";
    case BetAction::AllIn: return "All in";
  }
  return "Fold";
}

std::optional<BetAction> parse_bet_action(const std::string& text) {
  std::string t;
  for (char ch : text) {
    if (ch == '-' || ch == '/') ch = ' ';
    t += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  }
  std::istringstream in(t);
  std::string word, norm;
  while (in >> word) {
    if (!norm.empty()) norm += ' ';
    norm += word;
  }
  if (norm == "fold") return BetAction::Fold;
  if (norm == "check and call" || norm == "check" || norm == "call" ||
      norm == "check call")
    return BetAction::CheckCall;
  if (norm == "raise half pot" || norm == "raise half")
    return BetAction::RaiseHalfPot;
  if (norm == "raise full pot" || norm == "raise full" || norm == "raise pot")
    return BetAction::RaiseFullPot;
  if (norm == "all in" || norm == "allin") return BetAction::AllIn;
  return std::nullopt;
}

void HoldemGame::reset(RngStream& env) {
  st_ = State{};
  st_.hand.over = true;  // advance() deals the first hand
  advance(st_, env);
}

GameResult HoldemGame::result() const {
  GameResult r;
  if (!st_.match_over) return r;
  r.terminal = true;
  r.reward_first = st_.stacks[0] - kStartingStack;
  r.reward_second = st_.stacks[1] - kStartingStack;
  r.draw = st_.stacks[0] == st_.stacks[1];
  return r;
}

GameResult HoldemGame::cutoff_result() const {
  // Unwind the live hand: contributions go back to their owners.
  GameResult r;
  r.terminal = true;
  int eff0 = st_.stacks[0], eff1 = st_.stacks[1];
  if (!st_.hand.over) {
    eff0 += st_.hand.contrib[0];
    eff1 += st_.hand.contrib[1];
  }
  r.reward_first = eff0 - kStartingStack;
  r.reward_second = eff1 - kStartingStack;
  r.draw = eff0 == eff1;
  return r;
}

Seat HoldemGame::to_move() const {
  return st_.hand.to_act == 0 ? Seat::First : Seat::Second;
}

std::vector<std::string> HoldemGame::legal_actions(Seat seat) const {
  if (st_.match_over || st_.hand.over || to_move() != seat) return {};
  return {"Fold", "Check and Call", "Raise Half Pot", "Raise Full Pot",
          "All in"};
}

std::optional<std::string> HoldemGame::normalize_action(
    Seat seat, const std::string& action) const {
  if (legal_actions(seat).empty()) return std::nullopt;
  auto a = parse_bet_action(action);
  if (!a) return std::nullopt;
  return std::string(action_text(*a));
}

std::string HoldemGame::state_text(Seat viewer) const {
  int me = viewer == Seat::First ? 0 : 1;
  const HandState& h = st_.hand;
  std::ostringstream out;
  out << "Your two private cards: "
      << card_list_text({h.hole[me][0], h.hole[me][1]}) << "\n";
  out << "The revealed community cards: " << card_list_text(h.community())
      << "\n";
  out << "Your chips in the pot: " << h.contrib[me] << "\n";
  out << "Your opponent's chips in the pot: " << h.contrib[1 - me] << "\n";
  return out.str();
}

std::vector<Payload> HoldemGame::compute_truths(Seat viewer) const {
  std::vector<Payload> truths(2, Payload{});
  int me = viewer == Seat::First ? 0 : 1;
  const HandState& h = st_.hand;
  if (h.stage == Stage::Preflop) {
    truths[0] = oracle_preflop(h.hole[me][0], h.hole[me][1]);
  } else {
    truths[1] =
        static_cast<int64_t>(oracle_rank(h.hole[me], h.community()));
  }
  return truths;
}

void HoldemGame::apply(Seat seat, const std::string& action, RngStream& env) {
  if (to_move() != seat) throw std::logic_error("acting out of turn");
  auto a = parse_bet_action(action);
  if (!a) throw std::invalid_argument("bad hold'em action");
  holdem_step(st_, *a, env);
}

std::string HoldemGame::reply_for_action(const std::string& action) const {
  auto a = parse_bet_action(action);
  return a ? action_text(*a) : action;
}

}  // namespace arena::holdem
