#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clozeforge/cloze.hpp"
#include "clozeforge/plugin.hpp"
#include "clozeforge/rng.hpp"

namespace clozeforge {

enum class TranslateMethod : std::uint8_t { IDENTITY, NOISY, EXTERNAL };
enum class WhMode : std::uint8_t { HEURISTIC, RANDOM };

std::string_view method_name(TranslateMethod m);
std::string_view wh_mode_name(WhMode m);

inline constexpr std::array<std::string_view, 6> kWhWords = {"Who",  "What",     "Where",
                                                             "When", "How much", "How many"};

// word dropout / bounded permutation / word masking parameters
struct NoiseConfig {
  double p_drop = 0.1;
  std::size_t shuffle_window = 3;  // max token displacement
  double p_mask = 0.1;
  std::string mask_placeholder = "_";
};

struct Provenance {
  std::string doc_id;
  std::size_t para_index = 0;
};

struct NaturalQuestion {
  std::string text;  // always ends with "?"
  std::string wh_word;
  TranslateMethod method = TranslateMethod::IDENTITY;
  Provenance source_cloze;
};

// HEURISTIC: PERSON/NORP/ORG->Who, PLACE->Where, THING->What, TEMPORAL->When,
// NUMERIC-> one of {How much, How many}; GENERIC falls back to RANDOM.
std::string_view wh_for_category(AnswerCategory cat, WhMode mode, Rng& rng);

// Replaces the mask token with a wh* word and appends " ?".
NaturalQuestion identity_translate(const ClozeQuestion& cloze, WhMode mode, Rng& rng);

// Provenance for one token that survived the noise.
struct NoisyToken {
  std::string text;
  std::size_t source_index;  // index into the input token list
  bool masked;
};

// Dropout, bounded-displacement permutation, masking — in that order.
// Inactive stages consume no randomness.
std::vector<NoisyToken> apply_noise(const std::vector<std::string>& tokens, const NoiseConfig& cfg,
                                    Rng& rng);

// Deletes the mask token, applies the noise function, prepends a wh* word
// and appends " ?".
NaturalQuestion noisy_translate(const ClozeQuestion& cloze, const NoiseConfig& cfg, WhMode mode,
                                Rng& rng);

struct ExternalTranslation {
  std::vector<NaturalQuestion> questions;
  std::size_t repaired = 0;  // responses that needed a "?" appended
};

// One NaturalQuestion per input cloze, order preserved, method EXTERNAL.
ExternalTranslation external_translate(const std::vector<ClozeQuestion>& clozes,
                                       ProcessTranslator& translator);

// Detects which of the six wh* words a question starts with (case-insensitive,
// word-boundary aware). Returns the canonical capitalized form.
std::optional<std::string> wh_prefix(std::string_view text);

std::optional<AnswerCategory> category_for_wh(std::string_view wh);

// "<category mask token> " + question, used when exporting question corpora
// for external translator training. nullopt when the question does not start
// with the wh* word mapped from the category.
std::optional<std::string> prepend_category_token(std::string_view question, AnswerCategory cat);

}  // namespace clozeforge
