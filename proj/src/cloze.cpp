#include "clozeforge/cloze.hpp"

#include <algorithm>

#include "clozeforge/errors.hpp"

namespace clozeforge {

std::string_view boundary_name(ClozeBoundary b) {
  return b == ClozeBoundary::SENTENCE ? "SENTENCE" : "SUBCLAUSE";
}

std::string ClozeQuestion::joined() const {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out += ' ';
    out += tokens[i];
  }
  return out;
}

namespace {

const std::vector<std::string>& clause_delimiters() {
  static const std::vector<std::string> delims = {",", ";", ":", "—"};
  return delims;
}

const std::vector<std::string>& clause_connectives() {
  static const std::vector<std::string> words = {"because", "although", "while", "but",  "and",
                                                 "which",   "who",      "that",  "when", "where",
                                                 "after",   "before",   "since", "if"};
  return words;
}

bool is_clause_delimiter(const Token& t) {
  const auto& delims = clause_delimiters();
  if (std::find(delims.begin(), delims.end(), t.text) != delims.end()) return true;
  const auto& words = clause_connectives();
  return std::find(words.begin(), words.end(), t.text) != words.end();
}

bool has_verb(const std::vector<Token>& tokens, std::size_t begin, std::size_t end) {
  for (std::size_t i = begin; i < end; ++i) {
    if (tokens[i].coarse_pos == CoarsePos::VERB) return true;
  }
  return false;
}

}  // namespace

TokenRange extract_subclause(const std::vector<Token>& tokens, const Sentence& sentence,
                             TokenRange answer_range) {
  std::vector<TokenRange> segments = {{sentence.token_begin, sentence.token_end}};
  for (std::size_t p = sentence.token_begin; p < sentence.token_end; ++p) {
    if (p >= answer_range.begin && p < answer_range.end) continue;
    if (!is_clause_delimiter(tokens[p])) continue;
    auto seg = std::find_if(segments.begin(), segments.end(), [&](const TokenRange& r) {
      return r.begin <= p && p < r.end;
    });
    if (seg == segments.end()) continue;  // delimiter already excluded by an earlier split
    const TokenRange left{seg->begin, p};
    const TokenRange right{p + 1, seg->end};
    if (!has_verb(tokens, left.begin, left.end) || !has_verb(tokens, right.begin, right.end)) {
      continue;
    }
    *seg = left;
    segments.insert(std::next(seg), right);
  }
  for (const TokenRange& r : segments) {
    if (r.begin <= answer_range.begin && answer_range.end <= r.end) return r;
  }
  return {sentence.token_begin, sentence.token_end};
}

std::variant<ClozeQuestion, ClozeReject> make_cloze(const Paragraph& paragraph,
                                                    const std::vector<Sentence>& sentences,
                                                    const std::vector<Token>& tokens,
                                                    const AnswerSpan& answer, ClozeBoundary boundary) {
  const Sentence* home = nullptr;
  for (const Sentence& s : sentences) {
    if (s.char_start <= answer.char_start && answer.char_end <= s.char_end) {
      home = &s;
      break;
    }
  }
  if (home == nullptr) return ClozeReject::CROSS_SENTENCE;

  // Tokens overlapping the answer's character range; contiguous by construction.
  TokenRange answer_range{home->token_end, home->token_end};
  for (std::size_t i = home->token_begin; i < home->token_end; ++i) {
    const Token& t = tokens[i];
    if (t.char_end > answer.char_start && t.char_start < answer.char_end) {
      if (answer_range.begin == home->token_end) answer_range.begin = i;
      answer_range.end = i + 1;
    }
  }
  if (answer_range.begin >= answer_range.end) return ClozeReject::CROSS_SENTENCE;

  TokenRange segment{home->token_begin, home->token_end};
  if (boundary == ClozeBoundary::SUBCLAUSE) {
    segment = extract_subclause(tokens, *home, answer_range);
  }

  ClozeQuestion cloze;
  cloze.boundary = boundary;
  cloze.answer = answer;
  cloze.doc_id = paragraph.doc_id;
  cloze.para_index = paragraph.para_index;
  cloze.mask_token = answer.source == AnswerSource::NP
                         ? "MASK"
                         : std::string(category_mask_token(answer.category));

  for (std::size_t i = segment.begin; i < segment.end; ++i) {
    if (i == answer_range.begin) {
      cloze.mask_index = cloze.tokens.size();
      cloze.tokens.push_back(cloze.mask_token);
    }
    if (i >= answer_range.begin && i < answer_range.end) continue;
    cloze.tokens.push_back(tokens[i].text);
  }

  // Clozes are statements; drop one trailing punctuation token.
  if (cloze.tokens.size() > 1 && cloze.tokens.size() - 1 != cloze.mask_index) {
    const std::size_t last = segment.end - 1;
    if (last >= answer_range.end && tokens[last].coarse_pos == CoarsePos::PUNCT) {
      cloze.tokens.pop_back();
    }
  }

  if (cloze.tokens.size() > kMaxClozeTokens) return ClozeReject::TOO_LONG;
  return cloze;
}

}  // namespace clozeforge
