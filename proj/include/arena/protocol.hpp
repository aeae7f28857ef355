#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arena/game.hpp"

namespace arena::protocol {

// CuratedCoT carries the full guided thinking process with intermediate
// markers; GenericCoT swaps that for a bare think-step-by-step line;
// ActionOnly requests nothing but the final action.
enum class PromptVariant { CuratedCoT, GenericCoT, ActionOnly };

const char* to_string(PromptVariant v);
std::optional<PromptVariant> prompt_variant_from_string(
    const std::string& name);

// The assembled template for a game/variant; contains a "{state}" slot.
const std::string& prompt_template(GameId id, PromptVariant variant);

// Substitutes the state block into the template.  Byte-stable: the same
// inputs always produce the same prompt.
std::string render_prompt(GameId id, PromptVariant variant,
                          const std::string& state_text);

// Character range in the source reply an extraction came from.
struct Span {
  size_t begin = 0;
  size_t end = 0;

  bool operator==(const Span&) const = default;
};

// One intermediate-marker extraction.  `ok` false means the marker was
// missing or its payload unparseable (a ParseFailure: scored as wrong
// when the truth is defined).
struct Extraction {
  bool ok = false;
  Payload payload;
  Span span;

  bool operator==(const Extraction&) const = default;
};

struct ActionExtraction {
  bool ok = false;
  std::string text;
  Span span;

  bool operator==(const ActionExtraction&) const = default;
};

// Canonical text for a payload of the given wire kind; monostate and
// empty sets render as "None".
std::string format_payload(const Payload& p, PayloadKind kind);

// Parses payload text.  Lenient mode tolerates case, spacing, trailing
// '%', and yes/no booleans; strict mode additionally requires the text
// to be in canonical form.  nullopt = unparseable.
std::optional<Payload> parse_payload(const std::string& text,
                                     PayloadKind kind, bool strict);

// Scans for "[Intermediate Thinking Results N: ...]" markers (case
// insensitive, singular "Result" accepted); the last occurrence of each
// N wins.  Returns one slot per declared subproblem of the game.
std::vector<Extraction> extract_intermediates(const std::string& text,
                                              GameId id, bool strict);

// Finds the final action by the game's terminal pattern; the last match
// in the text wins.
ActionExtraction extract_action(const std::string& text, GameId id);

}  // namespace arena::protocol
