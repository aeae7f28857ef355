#include <algorithm>
#include <stdexcept>

#include "arena/agents.hpp"
#include "arena/games/checkers.hpp"
#include "arena/games/line_games.hpp"
#include "arena/games/negotiation.hpp"
#include "arena/games/othello.hpp"
#include "arena/games/pong.hpp"
#include "arena/games/surround.hpp"
#include "arena/protocol.hpp"

namespace arena::agents {

namespace detail {
std::unique_ptr<Agent> make_remote_llm_agent(const AgentSpec& spec);
}

namespace {

bool is_listed(const std::vector<std::string>& legal, const std::string& a) {
  return std::find(legal.begin(), legal.end(), a) != legal.end();
}

std::string grid_coord_action(Coord c) {
  return "(" + std::to_string(c.a) + "," + std::to_string(c.b) + ")";
}

std::string path_action(const MovePath& path) {
  std::string out;
  for (size_t i = 0; i < path.size(); ++i) {
    if (i) out += "->";
    out += grid_coord_action(path[i]);
  }
  return out;
}

// Exhaustive negamax for the 3x3 board; the side to move scores +1 for a
// forced win, 0 for a draw, -1 for a forced loss.
int ttt_negamax(const grid::GridState& s, int alpha, int beta) {
  Outcome o = grid::outcome(s);
  if (o == Outcome::FirstWins || o == Outcome::SecondWins)
    return -1;  // the previous mover completed a line
  CoordSet moves = grid::legal_moves(s);
  if (moves.empty()) return 0;
  for (Coord m : moves) {
    int score = -ttt_negamax(grid::apply(s, m), -beta, -alpha);
    alpha = std::max(alpha, score);
    if (alpha >= beta) break;
  }
  return alpha;
}

Coord ttt_best_move(const grid::GridState& s) {
  CoordSet moves = grid::legal_moves(s);
  Coord best = *moves.begin();
  int best_score = -2;
  for (Coord m : moves) {
    int score = -ttt_negamax(grid::apply(s, m), -1, -best_score);
    if (score > best_score) {
      best_score = score;
      best = m;
    }
  }
  return best;
}

const CoordSet* coord_set_of(const Payload& p) {
  return std::get_if<CoordSet>(&p);
}

std::string scripted_grid_action(const TurnView& view,
                                 const std::vector<Payload>& truths) {
  if (const CoordSet* own = coord_set_of(truths[0]); own && !own->empty())
    return grid_coord_action(*own->begin());
  if (const CoordSet* block = coord_set_of(truths[1]); block && !block->empty())
    return grid_coord_action(*block->begin());
  if (const auto* ttt = dynamic_cast<const grid::TicTacToeGame*>(&view.game))
    return grid_coord_action(ttt_best_move(ttt->state()));
  // Connect4 filler: centermost playable column (strongest simple bias).
  const auto* c4 = dynamic_cast<const grid::Connect4Game*>(&view.game);
  CoordSet moves = grid::legal_moves(c4->state());
  Coord best = *moves.begin();
  auto rank = [](Coord m) { return std::abs(m.b - 3) * 16 + m.b; };
  for (Coord m : moves)
    if (rank(m) < rank(best)) best = m;
  return grid_coord_action(best);
}

std::string scripted_othello_action(const TurnView& view,
                                    const std::vector<Payload>& truths) {
  if (const bool* corner = std::get_if<bool>(&truths[0]); corner && *corner) {
    for (const char* c : {"(A,1)", "(A,8)", "(H,1)", "(H,8)"})
      if (is_listed(view.legal_actions, c)) return c;
  }
  if (const CoordSet* wedges = coord_set_of(truths[1]))
    for (Coord w : *wedges) {
      std::string a = othello::coord_text(w);
      if (is_listed(view.legal_actions, a)) return a;
    }
  return view.legal_actions.front();
}

std::string scripted_checkers_action(const TurnView& view,
                                     const std::vector<Payload>& truths) {
  auto first_listed = [&](const Payload& p) -> std::string {
    if (const PathSet* set = std::get_if<PathSet>(&p))
      for (const MovePath& path : *set) {
        std::string a = path_action(path);
        if (is_listed(view.legal_actions, a)) return a;
      }
    return {};
  };
  // Prefer the tactic shot, then a kinging move, then any move that is
  // not flagged as a worthless die.
  if (std::string a = first_listed(truths[2]); !a.empty()) return a;
  if (std::string a = first_listed(truths[0]); !a.empty()) return a;
  const PathSet* worthless = std::get_if<PathSet>(&truths[1]);
  for (const std::string& a : view.legal_actions) {
    if (!worthless) return a;
    bool flagged = false;
    for (const MovePath& path : *worthless)
      if (path_action(path) == a) flagged = true;
    if (!flagged) return a;
  }
  return view.legal_actions.front();
}

std::string scripted_pong_action(const TurnView& view,
                                 const std::vector<Payload>& truths) {
  const int64_t* target = std::get_if<int64_t>(&truths[1]);
  if (!target) return "0 - Stay Still";
  const auto& game = dynamic_cast<const pong::PongGame&>(view.game);
  int own_y = game.viewer_frames(view.seat).back().right_y;
  int center = own_y + pong::kPaddleHeight / 2;
  if (*target > center + 2) return "1 - Move Up";
  if (*target < center - 2) return "2 - Move Down";
  return "0 - Stay Still";
}

std::string scripted_surround_action(const TurnView& view,
                                     const std::vector<Payload>& truths) {
  if (const SafetyMap* safety = std::get_if<SafetyMap>(&truths[2]))
    for (const auto& [d, safe] : *safety)
      if (safe && is_listed(view.legal_actions, surround::direction_text(d)))
        return surround::direction_text(d);
  return view.legal_actions.front();
}

std::string scripted_holdem_action(const std::vector<Payload>& truths) {
  if (const Percent* win = std::get_if<Percent>(&truths[0]))
    return win->tenths >= 570 ? "Raise Half Pot" : "Check and Call";
  if (const int64_t* category = std::get_if<int64_t>(&truths[1]))
    return *category <= 6 ? "Raise Half Pot" : "Check and Call";
  return "Check and Call";
}

std::string scripted_negotiation_action(const TurnView& view,
                                        const std::vector<Payload>& truths) {
  if (const int64_t* standing = std::get_if<int64_t>(&truths[0]))
    if (*standing >= negotiation::kTotalValue / 2)
      return "Proposal: [Agree]";
  const auto& game = dynamic_cast<const negotiation::NegotiationGame&>(view.game);
  const negotiation::Pool& pool = game.state().pool;
  int me = view.seat == Seat::First ? 0 : 1;
  negotiation::Triple mine{}, theirs{};
  for (int i = 0; i < negotiation::kItemKinds; ++i) {
    mine[i] = pool.values[me][i] > 0 ? pool.counts[i] : 0;
    theirs[i] = pool.counts[i] - mine[i];
  }
  negotiation::Reply r;
  r.proposal = me == 0 ? negotiation::Proposal{mine, theirs}
                       : negotiation::Proposal{theirs, mine};
  return negotiation::reply_text(r);
}

std::string scripted_action(const TurnView& view,
                            const std::vector<Payload>& truths) {
  std::string action;
  switch (view.game.id()) {
    case GameId::Othello: action = scripted_othello_action(view, truths); break;
    case GameId::Pong: action = scripted_pong_action(view, truths); break;
    case GameId::Surround: action = scripted_surround_action(view, truths); break;
    case GameId::Checkers: action = scripted_checkers_action(view, truths); break;
    case GameId::TicTacToe:
    case GameId::Connect4: action = scripted_grid_action(view, truths); break;
    case GameId::Holdem: action = scripted_holdem_action(truths); break;
    case GameId::Negotiation:
      action = scripted_negotiation_action(view, truths);
      break;
  }
  if (!is_listed(view.legal_actions, action)) action = view.legal_actions.front();
  return action;
}

class RandomAgent final : public Agent {
 public:
  explicit RandomAgent(std::string id) : id_(std::move(id)) {}
  const std::string& id() const override { return id_; }
  bool emits_intermediates() const override { return false; }
  std::string reply(const TurnView& view, RngStream& rng) override {
    const std::string& action =
        view.legal_actions[rng.uniform(view.legal_actions.size())];
    return view.game.reply_for_action(action);
  }

 private:
  std::string id_;
};

class OracleScriptedAgent final : public Agent {
 public:
  explicit OracleScriptedAgent(std::string id) : id_(std::move(id)) {}
  const std::string& id() const override { return id_; }
  std::string reply(const TurnView& view, RngStream&) override {
    return oracle_scripted_reply(view);
  }

 private:
  std::string id_;
};

}  // namespace

const char* to_string(AgentKind k) {
  switch (k) {
    case AgentKind::Random: return "random";
    case AgentKind::OracleScripted: return "oracle_scripted";
    case AgentKind::RemoteLLM: return "remote_llm";
  }
  return "?";
}

std::optional<AgentKind> agent_kind_from_string(const std::string& name) {
  if (name == "random") return AgentKind::Random;
  if (name == "oracle_scripted") return AgentKind::OracleScripted;
  if (name == "remote_llm") return AgentKind::RemoteLLM;
  return std::nullopt;
}

std::string random_agent_reply(const std::string&,
                               const std::vector<std::string>& reply_choices,
                               RngStream& rng) {
  if (reply_choices.empty())
    throw std::invalid_argument("no reply choices to draw from");
  return reply_choices[rng.uniform(reply_choices.size())];
}

std::string oracle_scripted_reply(const TurnView& view) {
  const GameMeta& meta = view.game.meta();
  std::vector<Payload> truths = view.game.compute_truths(view.seat);
  std::string action = scripted_action(view, truths);
  view.game.finalize_truths(view.seat, action, truths);
  std::string out;
  for (int i = 0; i < meta.subproblem_count(); ++i) {
    out += "[Intermediate Thinking Results " + std::to_string(i + 1) + ": ";
    out += protocol::format_payload(truths[static_cast<size_t>(i)],
                                    meta.subproblems[static_cast<size_t>(i)].kind);
    out += "]\n";
  }
  out += view.game.reply_for_action(action);
  return out;
}

std::unique_ptr<Agent> make_agent(const AgentSpec& spec) {
  std::string id = spec.id.empty() ? to_string(spec.kind) : spec.id;
  switch (spec.kind) {
    case AgentKind::Random: return std::make_unique<RandomAgent>(id);
    case AgentKind::OracleScripted:
      return std::make_unique<OracleScriptedAgent>(id);
    case AgentKind::RemoteLLM: {
      AgentSpec named = spec;
      named.id = id;
      return detail::make_remote_llm_agent(named);
    }
  }
  throw std::invalid_argument("unknown agent kind");
}

}  // namespace arena::agents
