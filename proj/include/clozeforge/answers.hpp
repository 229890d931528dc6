#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "clozeforge/corpus.hpp"
#include "clozeforge/rng.hpp"

namespace clozeforge {

enum class AnswerCategory : std::uint8_t { PERSON_NORP_ORG, PLACE, THING, TEMPORAL, NUMERIC, GENERIC };
enum class AnswerSource : std::uint8_t { NE, NP };

// Stable identifier, e.g. "PERSON_NORP_ORG". Used in configs and JSON.
std::string_view category_id(AnswerCategory cat);
std::optional<AnswerCategory> category_from_id(std::string_view id);

// The typed mask token written into clozes: "PERSON/NORP/ORG", "PLACE",
// "THING", "TEMPORAL", "NUMERIC"; GENERIC uses the single token "MASK".
std::string_view category_mask_token(AnswerCategory cat);

// High-level category for a named-entity label. nullopt = unknown label,
// the caller decides to drop the span.
std::optional<AnswerCategory> categorize(std::string_view ne_label);

// All labels categorize() accepts (both WORKOFART and WORK_OF_ART spellings).
const std::vector<std::string>& known_ne_labels();

struct AnswerSpan {
  std::size_t char_start = 0;
  std::size_t char_end = 0;  // exclusive, code points into the paragraph
  std::string text;
  AnswerSource source = AnswerSource::NP;
  std::string ne_label;  // empty unless source == NE
  AnswerCategory category = AnswerCategory::GENERIC;

  bool operator==(const AnswerSpan&) const = default;
};

// Raw span exchanged with tagging plug-ins.
struct TaggedSpan {
  std::size_t char_start = 0;
  std::size_t char_end = 0;
  std::string label;
};

// Built-in lexicon + suffix coarse POS tagger. Sentence boundaries are used
// to treat sentence-initial capitalization conservatively.
void tag_pos(std::vector<Token>& tokens, const std::vector<Sentence>& sentences);

// Maximal non-overlapping chunks matching DET? (ADJ|NUM)* (NOUN|PROPN)+.
// Every token must carry a coarse_pos.
std::vector<AnswerSpan> extract_noun_phrases(const Paragraph& paragraph, const std::vector<Token>& tokens);

// Tagging plug-in handle. Implementations: BuiltinTagger, ProcessTagger.
class Tagger {
 public:
  virtual ~Tagger() = default;
  virtual std::vector<TaggedSpan> tag(const std::string& request_id, const std::string& text) = 0;
  virtual std::string name() const = 0;
};

// Deterministic pattern tagger: years and month dates, numbers, percent and
// currency amounts, capitalized name runs against bundled gazetteers.
std::vector<TaggedSpan> builtin_tagger(const Paragraph& paragraph);

class BuiltinTagger final : public Tagger {
 public:
  std::vector<TaggedSpan> tag(const std::string& request_id, const std::string& text) override;
  std::string name() const override { return "builtin"; }
};

struct NeExtraction {
  std::vector<AnswerSpan> spans;
  std::size_t dropped_unmappable = 0;
};

NeExtraction extract_named_entities(const Paragraph& paragraph, Tagger& tagger);

// Uniform draw from a non-empty candidate list.
AnswerSpan sample_answer(const std::vector<AnswerSpan>& candidates, Rng& rng);

namespace lex {
bool is_given_name(std::string_view word);        // capitalized form
bool is_place_name(std::string_view joined_run);  // full-run match, capitalized form
bool is_month_name(std::string_view word);
}  // namespace lex

}  // namespace clozeforge
