#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arena/engine.hpp"

namespace arena::scoring {

// One verifiable turn of one subproblem: what the agent claimed (monostate
// for a missing or unparseable marker) against the defined ground truth.
using ScoredPair = std::pair<Payload, Payload>;  // (predicted, truth)

// Exact-match fraction.  A parse failure can never equal a defined truth,
// so it counts as a mismatch.  Empty input -> absent, not zero.
std::optional<double> score_accuracy(const std::vector<ScoredPair>& pairs);

// Micro-F1 with TP/FP/FN pooled over all pairs.  Set payloads pool their
// elements; booleans use positive class True/Safe; safety maps score each
// truth-side direction as one boolean.  Turns contributing no TP, FP, or
// FN (e.g. both sides empty) leave the pool untouched; an empty pool ->
// absent.  Scalars degrade to singleton sets, making F1 equal accuracy.
std::optional<double> score_f1(const std::vector<ScoredPair>& pairs);

// Macro variant: score_f1 per group (one group per match), averaged over
// groups with a defined value.  Computed for comparison; micro is the
// canonical number everywhere else.
std::optional<double> score_f1_macro(
    const std::vector<std::vector<ScoredPair>>& groups);

// O = sum(R_j) / sum(T_j) over every seat the agent occupied.  Absent
// when the agent is in no record (sum of caps is zero).
std::optional<double> compute_outcome_metric(
    const std::vector<MatchRecord>& records, const std::string& agent_id);

// I = arithmetic mean of the per-subproblem scores.
double compute_intermediate_metric(const std::vector<double>& per_subproblem);

struct SubproblemScore {
  MetricKind metric = MetricKind::Accuracy;
  bool scored = true;           // diagnostic slots stay out of I
  int pool = 0;                 // verifiable (prediction, truth) pairs
  std::optional<double> value;  // I_t; absent when nothing was verifiable
};

struct AgentGameScore {
  std::string agent_id;
  GameId game_id = GameId::Othello;
  int matches = 0;
  int turns = 0;      // agent-consulted turns (engine passes excluded)
  int fallbacks = 0;  // turns resolved by the fallback policy
  int markers_found = 0;
  std::optional<double> outcome;       // O
  std::optional<double> intermediate;  // I over scored subproblems
  std::vector<SubproblemScore> subproblems;

  double fallback_rate() const {
    return turns ? static_cast<double>(fallbacks) / turns : 0.0;
  }
};

// Rows ordered by (agent_id, game id), one per pairing that occurs in
// the records.  An agent that emitted no intermediate marker anywhere in
// a game gets absent I and I_t there: it never attempted the
// subproblems, which is distinct from attempting them and scoring zero.
struct Scoreboard {
  std::vector<AgentGameScore> rows;
};

Scoreboard score_records(const std::vector<MatchRecord>& records);

// Per-agent averages over the games present in the scoreboard.
struct AgentSummary {
  std::string agent_id;
  std::optional<double> avg_outcome;
  std::optional<double> avg_intermediate;
  std::optional<double> avg_overall;  // mean of the two present averages
};

std::vector<AgentSummary> summarize(const Scoreboard& board);

// Deterministic report emission: byte-identical for equal scoreboards.
std::string scoreboard_csv(const Scoreboard& board);
std::string scoreboard_text(const Scoreboard& board);

}  // namespace arena::scoring
