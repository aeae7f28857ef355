#include <array>
#include <sstream>
#include <stdexcept>

#include "arena/games/holdem.hpp"
#include "arena/protocol.hpp"

namespace arena::protocol {

namespace {

#include "templates_data.inc"

struct TemplateInfo {
  const char* curated;
  // Everything before this marker is the shared preamble (rules + input
  // description) reused by the GenericCoT and ActionOnly variants.
  const char* cut_marker;
  // Final-action format instruction, restated without the thinking steps.
  const char* action_instruction;
};

const TemplateInfo& info_for(GameId id) {
  static const TemplateInfo othello{
      k_othello_curated, "**Output**",
      "Only output your chosen move. Do not include any other words. The "
      "format is: \"Chosen Move: (X,X)\".\n"};
  static const TemplateInfo pong{
      k_pong_curated, "Your strategy is that",
      "Only output your chosen action. Do not include any other words. The "
      "available actions are: 0 - Stay Still; 1 - Move Up; 2 - Move Down.\n"};
  static const TemplateInfo surround{
      k_surround_curated, "**Output**",
      "Only output your chosen action. Do not include any other words. "
      "Example: \"Move Left\"\n"};
  static const TemplateInfo checkers{
      k_checkers_curated, "**Output**",
      "Only output your chosen move. Do not include any other words. The "
      "format is: \"Chosen Move: (X,X)->(X,X)\".\n"};
  static const TemplateInfo tictactoe{
      k_tictactoe_curated, "**Output**",
      "Only output your chosen move. Do not include any other words. The "
      "format is: \"Chosen Move: (a,b)\", where a (value 0-2) is row, and b "
      "(value 0-2) is column.\n"};
  static const TemplateInfo connect4{
      k_connect4_curated, "**Output**",
      "Only output your chosen move. Do not include any other words. The "
      "format is: \"Chosen Move: (a,b)\", where a is the row number (0-5), "
      "and b is the column number (0-6) where you want to place your "
      "disc.\n"};
  static const TemplateInfo holdem{
      k_holdem_curated, "**Output**",
      "Only output your chosen action. Do not include any other words. The "
      "format is: \"Fold\", \"Check and Call\", \"Raise Half Pot\", \"Raise "
      "Full Pot\", \"All in\".\n"};
  static const TemplateInfo negotiation{
      k_negotiation_curated, "**Output**",
      "Only output your decision. Do not include any other words. If you "
      "agree with the opponent's proposal, output \"Proposal: [Agree]\". If "
      "you do not agree, output your proposed division of the items. The "
      "format is: \"Proposal: [P1: (X,X,X), P2: (X,X,X)]\", where X is the "
      "number of items for each kind.\n"};
  switch (id) {
    case GameId::Othello: return othello;
    case GameId::Pong: return pong;
    case GameId::Surround: return surround;
    case GameId::Checkers: return checkers;
    case GameId::TicTacToe: return tictactoe;
    case GameId::Connect4: return connect4;
    case GameId::Holdem: return holdem;
    case GameId::Negotiation: return negotiation;
  }
  throw std::logic_error("unknown game id");
}

// "AA:84.9%, AKs:67.0%, ..." over all 169 classes, strongest rank first.
std::string preflop_listing() {
  using namespace arena::holdem;
  std::ostringstream out;
  bool first = true;
  for (int hi = 12; hi >= 0; --hi) {
    for (int lo = hi; lo >= 0; --lo) {
      for (int idx : lo == hi
                         ? std::vector<int>{hi * 13 + hi}
                         : std::vector<int>{lo * 13 + hi, hi * 13 + lo}) {
        if (!first) out << ", ";
        first = false;
        int tenths = kPreflopWinTenths[idx];
        out << hand_class_name(idx) << ':' << tenths / 10 << '.'
            << tenths % 10 << '%';
      }
    }
  }
  return out.str();
}

std::string replace_all(std::string text, const std::string& slot,
                        const std::string& value) {
  size_t pos = 0;
  while ((pos = text.find(slot, pos)) != std::string::npos) {
    text.replace(pos, slot.size(), value);
    pos += value.size();
  }
  return text;
}

constexpr char kFooter[] = "\nInput:\n\n{state}\nOutput:\n";

std::string build_template(GameId id, PromptVariant variant) {
  const TemplateInfo& info = info_for(id);
  std::string curated = info.curated;
  if (id == GameId::Holdem)
    curated = replace_all(curated, "{preflop_table}", preflop_listing());
  if (variant == PromptVariant::CuratedCoT) return curated + kFooter;

  size_t cut = curated.find(info.cut_marker);
  if (cut == std::string::npos) throw std::logic_error("missing cut marker");
  std::string body = curated.substr(0, cut);
  body += "**Output**\n";
  if (variant == PromptVariant::GenericCoT)
    body +=
        "Think step by step about the best choice before answering, then "
        "give your final answer in the exact format below.\n";
  body += info.action_instruction;
  return body + kFooter;
}

}  // namespace

const char* to_string(PromptVariant v) {
  switch (v) {
    case PromptVariant::CuratedCoT: return "curated_cot";
    case PromptVariant::GenericCoT: return "generic_cot";
    case PromptVariant::ActionOnly: return "action_only";
  }
  return "?";
}

std::optional<PromptVariant> prompt_variant_from_string(
    const std::string& name) {
  if (name == "curated_cot" || name == "CuratedCoT")
    return PromptVariant::CuratedCoT;
  if (name == "generic_cot" || name == "GenericCoT")
    return PromptVariant::GenericCoT;
  if (name == "action_only" || name == "ActionOnly")
    return PromptVariant::ActionOnly;
  return std::nullopt;
}

const std::string& prompt_template(GameId id, PromptVariant variant) {
  static const std::array<std::array<std::string, 3>, 8> all = [] {
    std::array<std::array<std::string, 3>, 8> t;
    for (int g = 0; g < 8; ++g)
      for (int v = 0; v < 3; ++v)
        t[g][v] = build_template(static_cast<GameId>(g),
                                 static_cast<PromptVariant>(v));
    return t;
  }();
  return all[static_cast<int>(id)][static_cast<int>(variant)];
}

std::string render_prompt(GameId id, PromptVariant variant,
                          const std::string& state_text) {
  const std::string& tmpl = prompt_template(id, variant);
  size_t slot = tmpl.find("{state}");
  if (slot == std::string::npos) throw std::logic_error("missing state slot");
  std::string out = tmpl;
  out.replace(slot, 7, state_text);
  return out;
}

}  // namespace arena::protocol
