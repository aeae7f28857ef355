#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "arena/game.hpp"

namespace arena::negotiation {

constexpr int kItemKinds = 3;
constexpr int kTotalValue = 30;     // each player's whole-pool value
constexpr int kMinCount = 1;
constexpr int kMaxCount = 5;
constexpr int kGuaranteedRounds = 8;  // termination draws start afterwards
constexpr int kEndChanceOutOf = 5;    // 1-in-5 = 20 percent per round

using Triple = std::array<int, kItemKinds>;

// A division of the pool by absolute labels: p1 is always Player 1's
// share, regardless of who proposed it.
struct Proposal {
  Triple p1{};
  Triple p2{};
  auto operator<=>(const Proposal&) const = default;
};

struct Pool {
  Triple counts{};
  std::array<Triple, 2> values{};  // private valuations, per player
};

struct HistoryEntry {
  int round = 0;
  int player = 0;  // 0 = Player 1
  Proposal proposal;
};

struct State {
  Pool pool;
  std::vector<HistoryEntry> history;
  int round = 1;  // current round; Player 1 proposes in round 1
  bool agreed = false;
  bool timed_out = false;

  bool over() const { return agreed || timed_out; }
  // The offer currently on the table (the latest proposal), if any.
  const Proposal* standing() const {
    return history.empty() ? nullptr : &history.back().proposal;
  }
};

// All non-negative valuations with dot(counts, v) == kTotalValue, in
// lexicographic order.  Empty only for counts = (4,4,4), which cannot
// split 30.
std::vector<Triple> enumerate_valuations(const Triple& counts);

// Counts uniform in [kMinCount, kMaxCount]; each player's valuation
// uniform over enumerate_valuations(counts).  Resamples counts that
// admit no valuation.
Pool generate_pool(RngStream& rng);

bool proposal_valid(const Proposal& p, const Triple& counts);

// Value oracle: what `player` (0 or 1) receives under `p`, priced by
// that player's valuations.
int proposal_value(const Proposal& p, const Triple& values, int player);

// One reply: accept the standing offer, or put a new division on the
// table.
struct Reply {
  bool agree = false;
  Proposal proposal;  // meaningful when !agree
};

// Applies one reply for the player to move.  A proposal played in round
// kGuaranteedRounds or later is followed by the termination draw.
void negotiation_step(State& s, const Reply& reply, RngStream& env);

std::string triple_text(const Triple& t);      // "[5,4,3]"
std::string proposal_text(const Proposal& p);  // "[P1: (3,3,2), P2: (2,1,1)]"
std::string reply_text(const Reply& r);        // "Proposal: [...]"
std::optional<Reply> parse_reply(const std::string& text);

class NegotiationGame final : public Game {
 public:
  GameId id() const override { return GameId::Negotiation; }
  void reset(RngStream& env) override;
  GameResult result() const override;
  Seat to_move() const override;
  std::vector<std::string> legal_actions(Seat seat) const override;
  std::optional<std::string> normalize_action(
      Seat seat, const std::string& action) const override;
  std::string state_text(Seat viewer) const override;
  std::vector<Payload> compute_truths(Seat viewer) const override;
  void finalize_truths(Seat viewer, const std::string& action,
                       std::vector<Payload>& truths) const override;
  void apply(Seat seat, const std::string& action, RngStream& env) override;
  std::string reply_for_action(const std::string& action) const override;

  const State& state() const { return st_; }
  void set_state(State s) { st_ = std::move(s); }

 private:
  State st_;
};

}  // namespace arena::negotiation
