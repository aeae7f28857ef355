#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "arena/agent.hpp"

namespace arena::agents {

enum class AgentKind { Random, OracleScripted, RemoteLLM };

const char* to_string(AgentKind k);
std::optional<AgentKind> agent_kind_from_string(const std::string& name);

struct AgentSpec {
  AgentKind kind = AgentKind::Random;
  std::string id;  // log/report name; defaults to the kind name when empty

  // RemoteLLM transport.  The credential is read from the environment
  // variable named here at construction time and is never logged.
  std::string endpoint;
  std::string model;
  std::string credential_env;
  int max_output_tokens = 4096;
  double timeout_seconds = 120.0;
  int retries = 2;
  int max_in_flight = 4;
};

// Builds an agent; RemoteLLM specs fail here (configuration error)
// when the credential variable is missing or empty.
std::unique_ptr<Agent> make_agent(const AgentSpec& spec);

// Uniform choice among the candidate reply texts; emits nothing else.
std::string random_agent_reply(const std::string& prompt,
                               const std::vector<std::string>& reply_choices,
                               RngStream& rng);

// Every intermediate marker filled with the oracle truth, then a
// deterministic game-appropriate action.
std::string oracle_scripted_reply(const TurnView& view);

// One chat-style completion request with retries.
std::string remote_llm_reply(const AgentSpec& spec, const std::string& prompt);

}  // namespace arena::agents
