#include <algorithm>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "arena/scoring.hpp"

namespace arena::scoring {

namespace {

struct Pool {
  long tp = 0;
  long fp = 0;
  long fn = 0;

  bool empty() const { return tp + fp + fn == 0; }
  double f1() const {
    return 2.0 * tp / static_cast<double>(2 * tp + fp + fn);
  }
};

template <typename Set>
void tally_sets(const Payload& pred, const Set& truth, Pool& pool) {
  static const Set kEmpty;
  const Set* p = std::get_if<Set>(&pred);
  const Set& claimed = p ? *p : kEmpty;
  for (const auto& e : claimed) (truth.count(e) ? pool.tp : pool.fp) += 1;
  for (const auto& e : truth)
    if (!claimed.count(e)) pool.fn += 1;
}

void tally(const Payload& pred, const Payload& truth, Pool& pool) {
  if (const bool* t = std::get_if<bool>(&truth)) {
    const bool* pv = std::get_if<bool>(&pred);
    bool claimed = pv && *pv;  // anything else is a non-positive claim
    if (*t)
      (claimed ? pool.tp : pool.fn) += 1;
    else if (claimed)
      pool.fp += 1;
    return;
  }
  if (const SafetyMap* t = std::get_if<SafetyMap>(&truth)) {
    const SafetyMap* p = std::get_if<SafetyMap>(&pred);
    for (const auto& [dir, safe] : *t) {
      bool claimed = false;
      if (p) {
        auto it = p->find(dir);
        claimed = it != p->end() && it->second;
      }
      if (safe)
        (claimed ? pool.tp : pool.fn) += 1;
      else if (claimed)
        pool.fp += 1;
    }
    return;
  }
  if (const CoordSet* t = std::get_if<CoordSet>(&truth))
    return tally_sets(pred, *t, pool);
  if (const PathSet* t = std::get_if<PathSet>(&truth))
    return tally_sets(pred, *t, pool);
  if (const ActionSet* t = std::get_if<ActionSet>(&truth))
    return tally_sets(pred, *t, pool);
  // Scalar truths act as singleton sets, so F1 degrades to accuracy.
  if (pred == truth) {
    pool.tp += 1;
  } else {
    pool.fn += 1;
    if (is_defined(pred)) pool.fp += 1;
  }
}

std::optional<double> subproblem_score(MetricKind metric,
                                       const std::vector<ScoredPair>& pairs) {
  return metric == MetricKind::Accuracy ? score_accuracy(pairs)
                                        : score_f1(pairs);
}

std::string fmt(double v, const char* spec = "%.3f") {
  char buf[48];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string cell(const std::optional<double>& v, const char* spec = "%.3f") {
  return v ? fmt(*v, spec) : "-";
}

std::string pad(const std::string& s, size_t width) {
  return s.size() >= width ? s : s + std::string(width - s.size(), ' ');
}

std::string lead(const std::string& s, size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

}  // namespace

std::optional<double> score_accuracy(const std::vector<ScoredPair>& pairs) {
  if (pairs.empty()) return std::nullopt;
  long hits = 0;
  for (const auto& [pred, truth] : pairs) hits += pred == truth;
  return static_cast<double>(hits) / static_cast<double>(pairs.size());
}

std::optional<double> score_f1(const std::vector<ScoredPair>& pairs) {
  Pool pool;
  for (const auto& [pred, truth] : pairs) tally(pred, truth, pool);
  if (pool.empty()) return std::nullopt;
  return pool.f1();
}

std::optional<double> score_f1_macro(
    const std::vector<std::vector<ScoredPair>>& groups) {
  double sum = 0.0;
  int present = 0;
  for (const auto& group : groups)
    if (std::optional<double> f1 = score_f1(group)) {
      sum += *f1;
      ++present;
    }
  if (!present) return std::nullopt;
  return sum / present;
}

std::optional<double> compute_outcome_metric(
    const std::vector<MatchRecord>& records, const std::string& agent_id) {
  double rewards = 0.0, caps = 0.0;
  for (const MatchRecord& rec : records) {
    if (rec.agent_ids[0] == agent_id) {
      rewards += rec.reward_first;
      caps += rec.reward_cap;
    }
    if (rec.agent_ids[1] == agent_id) {
      rewards += rec.reward_second;
      caps += rec.reward_cap;
    }
  }
  if (caps == 0.0) return std::nullopt;
  return rewards / caps;
}

double compute_intermediate_metric(const std::vector<double>& per_subproblem) {
  if (per_subproblem.empty())
    throw std::invalid_argument("need at least one subproblem score");
  double sum = 0.0;
  for (double v : per_subproblem) sum += v;
  return sum / static_cast<double>(per_subproblem.size());
}

Scoreboard score_records(const std::vector<MatchRecord>& records) {
  Scoreboard board;
  std::map<std::pair<std::string, int>, size_t> index;
  std::vector<std::vector<std::vector<ScoredPair>>> pools;
  std::vector<double> rewards, caps;

  auto row_of = [&](const std::string& agent, GameId game) {
    auto key = std::make_pair(agent, static_cast<int>(game));
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    const GameMeta& meta = game_meta(game);
    AgentGameScore row;
    row.agent_id = agent;
    row.game_id = game;
    row.subproblems.resize(meta.subproblems.size());
    for (size_t t = 0; t < meta.subproblems.size(); ++t) {
      row.subproblems[t].metric = meta.subproblems[t].metric;
      row.subproblems[t].scored = meta.subproblems[t].scored;
    }
    size_t at = board.rows.size();
    index.emplace(key, at);
    board.rows.push_back(std::move(row));
    pools.emplace_back(meta.subproblems.size());
    rewards.push_back(0.0);
    caps.push_back(0.0);
    return at;
  };

  for (const MatchRecord& rec : records) {
    const GameMeta& meta = game_meta(rec.config.game_id);
    size_t first = row_of(rec.agent_ids[0], rec.config.game_id);
    size_t second = row_of(rec.agent_ids[1], rec.config.game_id);
    board.rows[first].matches += 1;
    board.rows[second].matches += 1;
    rewards[first] += rec.reward_first;
    caps[first] += rec.reward_cap;
    rewards[second] += rec.reward_second;
    caps[second] += rec.reward_cap;

    for (const TurnRecord& turn : rec.turns) {
      if (is_engine_pass(turn)) continue;
      size_t at = turn.seat == Seat::First ? first : second;
      AgentGameScore& row = board.rows[at];
      row.turns += 1;
      row.fallbacks += turn.action_was_fallback;
      for (size_t t = 0; t < meta.subproblems.size(); ++t) {
        const protocol::Extraction* ex =
            t < turn.parsed.intermediates.size() ? &turn.parsed.intermediates[t]
                                                 : nullptr;
        if (ex && (ex->ok || ex->span.end > ex->span.begin))
          row.markers_found += 1;
        if (t >= turn.truths.size() || !is_defined(turn.truths[t])) continue;
        Payload pred = ex && ex->ok ? ex->payload : Payload{};
        pools[at][t].emplace_back(std::move(pred), turn.truths[t]);
      }
    }
  }

  for (size_t at = 0; at < board.rows.size(); ++at) {
    AgentGameScore& row = board.rows[at];
    if (caps[at] > 0.0) row.outcome = rewards[at] / caps[at];
    for (size_t t = 0; t < row.subproblems.size(); ++t)
      row.subproblems[t].pool = static_cast<int>(pools[at][t].size());
    // No marker anywhere means the agent never attempted the subproblems;
    // report absent rather than zero (the paper's "-" rows).
    if (row.markers_found == 0) continue;
    std::vector<double> scored;
    for (size_t t = 0; t < row.subproblems.size(); ++t) {
      SubproblemScore& sub = row.subproblems[t];
      sub.value = subproblem_score(sub.metric, pools[at][t]);
      if (sub.scored && sub.value) scored.push_back(*sub.value);
    }
    if (!scored.empty()) row.intermediate = compute_intermediate_metric(scored);
  }

  std::sort(board.rows.begin(), board.rows.end(),
            [](const AgentGameScore& a, const AgentGameScore& b) {
              if (a.agent_id != b.agent_id) return a.agent_id < b.agent_id;
              return static_cast<int>(a.game_id) < static_cast<int>(b.game_id);
            });
  return board;
}

std::vector<AgentSummary> summarize(const Scoreboard& board) {
  std::vector<AgentSummary> out;
  for (size_t i = 0; i < board.rows.size();) {
    size_t j = i;
    AgentSummary s;
    s.agent_id = board.rows[i].agent_id;
    double o_sum = 0.0, i_sum = 0.0;
    int o_n = 0, i_n = 0;
    for (; j < board.rows.size() && board.rows[j].agent_id == s.agent_id; ++j) {
      if (board.rows[j].outcome) {
        o_sum += *board.rows[j].outcome;
        ++o_n;
      }
      if (board.rows[j].intermediate) {
        i_sum += *board.rows[j].intermediate;
        ++i_n;
      }
    }
    if (o_n) s.avg_outcome = o_sum / o_n;
    if (i_n) s.avg_intermediate = i_sum / i_n;
    if (o_n && i_n)
      s.avg_overall = (*s.avg_outcome + *s.avg_intermediate) / 2.0;
    else if (o_n)
      s.avg_overall = s.avg_outcome;
    else if (i_n)
      s.avg_overall = s.avg_intermediate;
    out.push_back(std::move(s));
    i = j;
  }
  return out;
}

std::string scoreboard_csv(const Scoreboard& board) {
  std::string out =
      "agent,game,matches,turns,fallback_rate,O,I,I_1,I_2,I_3,combined\n";
  auto csv_cell = [](const std::optional<double>& v) {
    return v ? fmt(*v, "%.4f") : std::string();
  };
  for (const AgentGameScore& row : board.rows) {
    out += row.agent_id + ',' + to_string(row.game_id) + ',' +
           std::to_string(row.matches) + ',' + std::to_string(row.turns) +
           ',' + fmt(row.fallback_rate(), "%.4f") + ',' +
           csv_cell(row.outcome) + ',' + csv_cell(row.intermediate);
    for (size_t t = 0; t < 3; ++t)
      out += ',' + (t < row.subproblems.size()
                        ? csv_cell(row.subproblems[t].value)
                        : std::string());
    out += ",\n";
  }
  for (const AgentSummary& s : summarize(board)) {
    out += s.agent_id + ",average,,,," + csv_cell(s.avg_outcome) + ',' +
           csv_cell(s.avg_intermediate) + ",,,," + csv_cell(s.avg_overall) +
           '\n';
  }
  return out;
}

std::string scoreboard_text(const Scoreboard& board) {
  size_t name_w = 5;
  for (const AgentGameScore& row : board.rows)
    name_w = std::max(name_w, row.agent_id.size());
  name_w += 2;

  std::string out;
  out += pad("Agent", name_w) + pad("Game", 13) + lead("Matches", 8) +
         lead("Turns", 7) + lead("Fallback", 10) + lead("O", 8) +
         lead("I", 8) + lead("I_1", 8) + lead("I_2", 8) + lead("I_3", 9) +
         '\n';
  bool diagnostic_seen = false;
  for (const AgentGameScore& row : board.rows) {
    out += pad(row.agent_id, name_w) + pad(to_string(row.game_id), 13) +
           lead(std::to_string(row.matches), 8) +
           lead(std::to_string(row.turns), 7) +
           lead(fmt(row.fallback_rate(), "%.3f"), 10) +
           lead(cell(row.outcome, "%+.3f"), 8) + lead(cell(row.intermediate), 8);
    for (size_t t = 0; t < 3; ++t) {
      std::string v;
      if (t < row.subproblems.size()) {
        v = cell(row.subproblems[t].value);
        if (!row.subproblems[t].scored) {
          v += '*';
          diagnostic_seen = true;
        }
      }
      out += lead(v, t == 2 ? 9 : 8);
    }
    out += '\n';
  }
  if (diagnostic_seen)
    out += "* diagnostic subproblem, logged but excluded from I\n";

  out += '\n';
  out += pad("Agent", name_w) + lead("Avg. O", 8) + lead("Avg. I", 8) +
         lead("Avg.", 8) + '\n';
  for (const AgentSummary& s : summarize(board))
    out += pad(s.agent_id, name_w) + lead(cell(s.avg_outcome, "%+.3f"), 8) +
           lead(cell(s.avg_intermediate), 8) + lead(cell(s.avg_overall), 8) +
           '\n';
  return out;
}

}  // namespace arena::scoring
