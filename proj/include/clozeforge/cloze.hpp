#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "clozeforge/answers.hpp"
#include "clozeforge/corpus.hpp"

namespace clozeforge {

enum class ClozeBoundary : std::uint8_t { SENTENCE, SUBCLAUSE };

std::string_view boundary_name(ClozeBoundary b);

inline constexpr std::size_t kMaxClozeTokens = 40;

struct ClozeQuestion {
  std::vector<std::string> tokens;  // mask token included
  std::size_t mask_index = 0;
  std::string mask_token;
  ClozeBoundary boundary = ClozeBoundary::SENTENCE;
  AnswerSpan answer;
  std::string doc_id;
  std::size_t para_index = 0;

  std::string joined() const;  // tokens joined with single spaces
};

enum class ClozeReject : std::uint8_t { CROSS_SENTENCE, TOO_LONG };

struct TokenRange {
  std::size_t begin = 0;
  std::size_t end = 0;  // exclusive

  bool operator==(const TokenRange&) const = default;
};

// Splits the sentence at clause delimiters (",", ";", ":", "—" and lowercase
// subordinators/coordinators), keeping a split only when both sides contain a
// VERB token, and returns the minimal segment containing the answer with
// delimiters excluded. No valid split -> the whole sentence.
TokenRange extract_subclause(const std::vector<Token>& tokens, const Sentence& sentence,
                             TokenRange answer_range);

// Builds the masked statement for (paragraph, answer), bounded by the
// containing sentence or its sub-clause. Rejects answers that cross sentence
// boundaries and clozes longer than kMaxClozeTokens.
std::variant<ClozeQuestion, ClozeReject> make_cloze(const Paragraph& paragraph,
                                                    const std::vector<Sentence>& sentences,
                                                    const std::vector<Token>& tokens,
                                                    const AnswerSpan& answer, ClozeBoundary boundary);

}  // namespace clozeforge
