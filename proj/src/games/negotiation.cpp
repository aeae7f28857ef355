#include "arena/games/negotiation.hpp"

#include <cctype>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace arena::negotiation {

std::vector<Triple> enumerate_valuations(const Triple& counts) {
  std::vector<Triple> out;
  for (int v1 = 0; v1 * counts[0] <= kTotalValue; ++v1) {
    int rest1 = kTotalValue - v1 * counts[0];
    for (int v2 = 0; v2 * counts[1] <= rest1; ++v2) {
      int rest2 = rest1 - v2 * counts[1];
      if (rest2 % counts[2] == 0) out.push_back({v1, v2, rest2 / counts[2]});
    }
  }
  return out;
}

Pool generate_pool(RngStream& rng) {
  for (;;) {
    Pool pool;
    for (int i = 0; i < kItemKinds; ++i)
      pool.counts[i] =
          kMinCount + static_cast<int>(rng.uniform(kMaxCount - kMinCount + 1));
    std::vector<Triple> solutions = enumerate_valuations(pool.counts);
    if (solutions.empty()) continue;  // (4,4,4) cannot split 30
    for (int p = 0; p < 2; ++p)
      pool.values[p] = solutions[rng.uniform(solutions.size())];
    return pool;
  }
}

bool proposal_valid(const Proposal& p, const Triple& counts) {
  for (int i = 0; i < kItemKinds; ++i) {
    if (p.p1[i] < 0 || p.p2[i] < 0) return false;
    if (p.p1[i] + p.p2[i] != counts[i]) return false;
  }
  return true;
}

int proposal_value(const Proposal& p, const Triple& values, int player) {
  const Triple& share = player == 0 ? p.p1 : p.p2;
  int total = 0;
  for (int i = 0; i < kItemKinds; ++i) total += share[i] * values[i];
  return total;
}

void negotiation_step(State& s, const Reply& reply, RngStream& env) {
  if (s.over()) throw std::logic_error("negotiation already over");
  int player = (s.round - 1) % 2;
  if (reply.agree) {
    if (!s.standing()) throw std::invalid_argument("nothing to agree to");
    s.agreed = true;
    return;
  }
  if (!proposal_valid(reply.proposal, s.pool.counts))
    throw std::invalid_argument("proposal does not split the pool");
  s.history.push_back({s.round, player, reply.proposal});
  int completed = s.round;
  s.round += 1;
  if (completed >= kGuaranteedRounds && env.uniform(kEndChanceOutOf) == 0)
    s.timed_out = true;
}

std::string triple_text(const Triple& t) {
  std::ostringstream out;
  out << '[' << t[0] << ',' << t[1] << ',' << t[2] << ']';
  return out.str();
}

std::string proposal_text(const Proposal& p) {
  std::ostringstream out;
  out << "[P1: (" << p.p1[0] << ',' << p.p1[1] << ',' << p.p1[2] << "), P2: ("
      << p.p2[0] << ',' << p.p2[1] << ',' << p.p2[2] << ")]";
  return out.str();
}

std::string reply_text(const Reply& r) {
  return r.agree ? "Proposal: [Agree]" : "Proposal: " + proposal_text(r.proposal);
}

std::optional<Reply> parse_reply(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch)))
      t += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
  if (auto pos = t.rfind("proposal:"); pos != std::string::npos)
    t = t.substr(pos + 9);
  if (t.size() >= 2 && t.front() == '[' && t.back() == ']')
    t = t.substr(1, t.size() - 2);
  if (t == "agree") return Reply{true, {}};
  static const std::regex form(
      R"(p1:\((\d+),(\d+),(\d+)\),p2:\((\d+),(\d+),(\d+)\))");
  std::smatch m;
  if (!std::regex_match(t, m, form)) return std::nullopt;
  Reply r;
  for (int i = 0; i < 3; ++i) {
    r.proposal.p1[i] = std::stoi(m[1 + i]);
    r.proposal.p2[i] = std::stoi(m[4 + i]);
  }
  return r;
}

void NegotiationGame::reset(RngStream& env) {
  st_ = State{};
  st_.pool = generate_pool(env);
}

GameResult NegotiationGame::result() const {
  GameResult r;
  if (!st_.over()) return r;
  r.terminal = true;
  if (st_.agreed) {
    const Proposal& p = *st_.standing();
    r.reward_first = proposal_value(p, st_.pool.values[0], 0);
    r.reward_second = proposal_value(p, st_.pool.values[1], 1);
  }
  r.draw = r.reward_first == r.reward_second;
  return r;
}

Seat NegotiationGame::to_move() const {
  return st_.round % 2 == 1 ? Seat::First : Seat::Second;
}

std::vector<std::string> NegotiationGame::legal_actions(Seat seat) const {
  if (st_.over() || to_move() != seat) return {};
  std::vector<std::string> out;
  if (st_.standing()) out.push_back("Proposal: [Agree]");
  const Triple& n = st_.pool.counts;
  for (int a = 0; a <= n[0]; ++a)
    for (int b = 0; b <= n[1]; ++b)
      for (int c = 0; c <= n[2]; ++c) {
        Proposal p{{a, b, c}, {n[0] - a, n[1] - b, n[2] - c}};
        out.push_back(reply_text(Reply{false, p}));
      }
  return out;
}

std::optional<std::string> NegotiationGame::normalize_action(
    Seat seat, const std::string& action) const {
  if (st_.over() || to_move() != seat) return std::nullopt;
  auto r = parse_reply(action);
  if (!r) return std::nullopt;
  if (r->agree && !st_.standing()) return std::nullopt;
  if (!r->agree && !proposal_valid(r->proposal, st_.pool.counts))
    return std::nullopt;
  return reply_text(*r);
}

std::string NegotiationGame::state_text(Seat viewer) const {
  int me = viewer == Seat::First ? 0 : 1;
  std::ostringstream out;
  out << "Pool: " << triple_text(st_.pool.counts) << "\n";
  out << "Your values: " << triple_text(st_.pool.values[me]) << "\n";
  out << "You are Player " << me + 1 << ".\n";
  out << "Current round: " << st_.round << "\n";
  out << "Negotiation history:\n";
  if (st_.history.empty()) {
    out << "(no proposals yet)\n";
  } else {
    for (const HistoryEntry& e : st_.history)
      out << "Round " << e.round << ", Player " << e.player + 1 << ": "
          << proposal_text(e.proposal) << "\n";
  }
  return out.str();
}

std::vector<Payload> NegotiationGame::compute_truths(Seat viewer) const {
  std::vector<Payload> truths(2, Payload{});
  int me = viewer == Seat::First ? 0 : 1;
  if (const Proposal* p = st_.standing())
    truths[0] = static_cast<int64_t>(
        proposal_value(*p, st_.pool.values[me], me));
  return truths;
}

void NegotiationGame::finalize_truths(Seat viewer, const std::string& action,
                                      std::vector<Payload>& truths) const {
  auto r = parse_reply(action);
  if (!r || r->agree) return;  // agreement leaves slot 2 undefined
  int me = viewer == Seat::First ? 0 : 1;
  truths[1] = static_cast<int64_t>(
      proposal_value(r->proposal, st_.pool.values[me], me));
}

void NegotiationGame::apply(Seat seat, const std::string& action,
                            RngStream& env) {
  if (to_move() != seat) throw std::logic_error("acting out of turn");
  auto r = parse_reply(action);
  if (!r) throw std::invalid_argument("bad negotiation action");
  negotiation_step(st_, *r, env);
}

std::string NegotiationGame::reply_for_action(const std::string& action) const {
  auto r = parse_reply(action);
  return r ? reply_text(*r) : action;
}

}  // namespace arena::negotiation
