#include "clozeforge/answers.hpp"

#include <algorithm>
#include <cctype>

#include "clozeforge/errors.hpp"
#include "clozeforge/utf8.hpp"
#include "lexicon.hpp"

namespace clozeforge {

std::string_view category_id(AnswerCategory cat) {
  switch (cat) {
    case AnswerCategory::PERSON_NORP_ORG: return "PERSON_NORP_ORG";
    case AnswerCategory::PLACE: return "PLACE";
    case AnswerCategory::THING: return "THING";
    case AnswerCategory::TEMPORAL: return "TEMPORAL";
    case AnswerCategory::NUMERIC: return "NUMERIC";
    case AnswerCategory::GENERIC: return "GENERIC";
  }
  return "GENERIC";
}

std::optional<AnswerCategory> category_from_id(std::string_view id) {
  if (id == "PERSON_NORP_ORG") return AnswerCategory::PERSON_NORP_ORG;
  if (id == "PLACE") return AnswerCategory::PLACE;
  if (id == "THING") return AnswerCategory::THING;
  if (id == "TEMPORAL") return AnswerCategory::TEMPORAL;
  if (id == "NUMERIC") return AnswerCategory::NUMERIC;
  if (id == "GENERIC") return AnswerCategory::GENERIC;
  return std::nullopt;
}

std::string_view category_mask_token(AnswerCategory cat) {
  switch (cat) {
    case AnswerCategory::PERSON_NORP_ORG: return "PERSON/NORP/ORG";
    case AnswerCategory::PLACE: return "PLACE";
    case AnswerCategory::THING: return "THING";
    case AnswerCategory::TEMPORAL: return "TEMPORAL";
    case AnswerCategory::NUMERIC: return "NUMERIC";
    case AnswerCategory::GENERIC: return "MASK";
  }
  return "MASK";
}

std::optional<AnswerCategory> categorize(std::string_view ne_label) {
  if (ne_label == "PERSON" || ne_label == "NORP" || ne_label == "ORG") {
    return AnswerCategory::PERSON_NORP_ORG;
  }
  if (ne_label == "GPE" || ne_label == "LOC" || ne_label == "FAC") return AnswerCategory::PLACE;
  if (ne_label == "PRODUCT" || ne_label == "EVENT" || ne_label == "WORKOFART" ||
      ne_label == "WORK_OF_ART" || ne_label == "LAW" || ne_label == "LANGUAGE") {
    return AnswerCategory::THING;
  }
  if (ne_label == "TIME" || ne_label == "DATE") return AnswerCategory::TEMPORAL;
  if (ne_label == "PERCENT" || ne_label == "MONEY" || ne_label == "QUANTITY" ||
      ne_label == "ORDINAL" || ne_label == "CARDINAL") {
    return AnswerCategory::NUMERIC;
  }
  return std::nullopt;
}

const std::vector<std::string>& known_ne_labels() {
  static const std::vector<std::string> labels = {
      "PERSON", "NORP", "ORG", "GPE", "LOC", "FAC", "PRODUCT", "EVENT", "WORKOFART",
      "WORK_OF_ART", "LAW", "LANGUAGE", "TIME", "DATE", "PERCENT", "MONEY", "QUANTITY",
      "ORDINAL", "CARDINAL"};
  return labels;
}

namespace {

std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool all_punct(const Token& t) {
  const auto cps = utf8::decode_or_throw(t.text, "token");
  return !cps.empty() &&
         std::all_of(cps.begin(), cps.end(), [](char32_t c) { return utf8::is_punct(c); });
}

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return c >= '0' && c <= '9';
  });
}

// "1st", "22nd", "3rd", "44th"
bool is_digit_ordinal(std::string_view s) {
  if (s.size() < 3) return false;
  const std::string_view tail = s.substr(s.size() - 2);
  if (tail != "st" && tail != "nd" && tail != "rd" && tail != "th") return false;
  return all_digits(s.substr(0, s.size() - 2));
}

bool is_capitalized(const Token& t) {
  if (t.text.empty()) return false;
  const auto cps = utf8::decode_or_throw(t.text, "token");
  const char32_t c = cps[0];
  if (c >= U'A' && c <= U'Z') return true;
  return (c >= 0x00C0 && c <= 0x00DE && c != 0x00D7);  // Latin-1 uppercase letters
}

}  // namespace

void tag_pos(std::vector<Token>& tokens, const std::vector<Sentence>& sentences) {
  // First non-punctuation token of each sentence counts as sentence-initial.
  std::vector<bool> sentence_initial(tokens.size(), false);
  for (const Sentence& s : sentences) {
    for (std::size_t i = s.token_begin; i < s.token_end; ++i) {
      if (!all_punct(tokens[i])) {
        sentence_initial[i] = true;
        break;
      }
    }
  }
  if (sentences.empty() && !tokens.empty()) sentence_initial[0] = true;

  for (std::size_t i = 0; i < tokens.size(); ++i) {
    Token& t = tokens[i];
    if (all_punct(t)) {
      t.coarse_pos = CoarsePos::PUNCT;
      continue;
    }
    const std::string lower = to_lower(t.text);
    if (all_digits(t.text) || is_digit_ordinal(t.text) || lex::is_number_word(lower) ||
        lex::is_ordinal_word(lower)) {
      t.coarse_pos = CoarsePos::NUM;
      continue;
    }
    if (lex::is_determiner(lower)) {
      t.coarse_pos = CoarsePos::DET;
      continue;
    }
    if (lex::is_function_word(lower)) {
      t.coarse_pos = CoarsePos::OTHER;
      continue;
    }
    if (lex::is_verb_form(lower)) {
      t.coarse_pos = CoarsePos::VERB;
      continue;
    }
    if (lex::is_adjective(lower)) {
      t.coarse_pos = CoarsePos::ADJ;
      continue;
    }
    if (is_capitalized(t)) {
      if (!sentence_initial[i]) {
        t.coarse_pos = CoarsePos::PROPN;
      } else if (lex::is_given_name(t.text) || lex::is_place_name(t.text) ||
                 lex::is_month_name(t.text)) {
        t.coarse_pos = CoarsePos::PROPN;
      } else {
        t.coarse_pos = CoarsePos::NOUN;
      }
      continue;
    }
    if (lower.size() > 3 && lower.ends_with("ly")) {
      t.coarse_pos = CoarsePos::OTHER;  // adverb
      continue;
    }
    t.coarse_pos = CoarsePos::NOUN;
  }
}

std::vector<AnswerSpan> extract_noun_phrases(const Paragraph& paragraph, const std::vector<Token>& tokens) {
  for (const Token& t : tokens) {
    if (!t.coarse_pos.has_value()) throw DataError("extract_noun_phrases: token without coarse_pos");
  }
  std::vector<AnswerSpan> spans;
  const std::size_t n = tokens.size();
  std::size_t i = 0;
  auto pos = [&](std::size_t k) { return *tokens[k].coarse_pos; };
  while (i < n) {
    std::size_t j = i;
    if (j < n && pos(j) == CoarsePos::DET) ++j;
    while (j < n && (pos(j) == CoarsePos::ADJ || pos(j) == CoarsePos::NUM)) ++j;
    std::size_t k = j;
    while (k < n && (pos(k) == CoarsePos::NOUN || pos(k) == CoarsePos::PROPN)) ++k;
    if (k > j) {
      AnswerSpan span;
      span.char_start = tokens[i].char_start;
      span.char_end = tokens[k - 1].char_end;
      span.text = utf8::substr(paragraph.text, span.char_start, span.char_end);
      span.source = AnswerSource::NP;
      span.category = AnswerCategory::GENERIC;
      spans.push_back(std::move(span));
      i = k;
    } else {
      ++i;
    }
  }
  return spans;
}

namespace {

struct SpanCandidate {
  std::size_t tok_begin;
  std::size_t tok_end;  // exclusive
  std::string label;
  int priority;  // lower wins on exact start+length ties
};

bool adjacent(const std::vector<Token>& tokens, std::size_t a, std::size_t b) {
  return tokens[a].char_end == tokens[b].char_start;
}

bool is_year(std::string_view s) {
  return s.size() == 4 && all_digits(s) && (s[0] == '1' || s[0] == '2');
}

bool is_day_number(std::string_view s) {
  if (!all_digits(s) || s.empty() || s.size() > 2) return false;
  const int v = std::stoi(std::string(s));
  return v >= 1 && v <= 31;
}

// Digits possibly glued by interior "." or "," : "2.30", "15,000".
std::size_t number_group_end(const std::vector<Token>& tokens, std::size_t i) {
  std::size_t end = i + 1;
  while (end + 1 < tokens.size() && (tokens[end].text == "." || tokens[end].text == ",") &&
         all_digits(tokens[end + 1].text) && adjacent(tokens, end - 1, end) &&
         adjacent(tokens, end, end + 1)) {
    end += 2;
  }
  return end;
}

bool is_currency_symbol(std::string_view s) {
  return s == "$" || s == "£" || s == "€" || s == "¥";
}

}  // namespace

std::vector<TaggedSpan> builtin_tagger(const Paragraph& paragraph) {
  std::vector<Token> tokens = tokenize(paragraph.text);
  const std::vector<Sentence> sentences = split_sentences(paragraph, tokens);

  std::vector<bool> sentence_initial(tokens.size(), false);
  for (const Sentence& s : sentences) {
    for (std::size_t i = s.token_begin; i < s.token_end; ++i) {
      if (!all_punct(tokens[i])) {
        sentence_initial[i] = true;
        break;
      }
    }
  }

  std::vector<SpanCandidate> candidates;
  const std::size_t n = tokens.size();

  // Dates: month-name patterns and 4-digit years.
  for (std::size_t i = 0; i < n; ++i) {
    if (lex::is_month_name(tokens[i].text)) {
      std::size_t begin = i;
      std::size_t end = i + 1;
      if (i > 0 && is_day_number(tokens[i - 1].text)) begin = i - 1;  // "12 January"
      if (end < n && is_day_number(tokens[end].text)) {
        ++end;  // "January 12"
        if (end + 1 < n && tokens[end].text == "," && is_year(tokens[end + 1].text)) end += 2;
      } else if (end < n && is_year(tokens[end].text)) {
        ++end;  // "January 2018"
      }
      candidates.push_back({begin, end, "DATE", 0});
    } else if (is_year(tokens[i].text)) {
      candidates.push_back({i, i + 1, "DATE", 0});
    }
  }

  // Money, percent, cardinal number groups.
  for (std::size_t i = 0; i < n; ++i) {
    if (!all_digits(tokens[i].text)) continue;
    const std::size_t group_end = number_group_end(tokens, i);
    std::size_t begin = i;
    std::size_t end = group_end;
    std::string label = "CARDINAL";
    if (i > 0 && is_currency_symbol(tokens[i - 1].text)) {
      begin = i - 1;
      label = "MONEY";
      if (end < n && lex::is_magnitude_word(to_lower(tokens[end].text))) ++end;
    } else if (end < n && tokens[end].text == "%" && adjacent(tokens, end - 1, end)) {
      ++end;
      label = "PERCENT";
    } else if (end < n && to_lower(tokens[end].text) == "percent") {
      ++end;
      label = "PERCENT";
    } else {
      std::size_t probe = end;
      if (probe < n && lex::is_magnitude_word(to_lower(tokens[probe].text))) ++probe;
      if (probe < n && lex::is_currency_word(to_lower(tokens[probe].text))) {
        end = probe + 1;
        label = "MONEY";  // "86 million dollars"
      } else if (probe > end) {
        end = probe;  // "86 million"
      }
    }
    candidates.push_back({begin, end, std::move(label), 1});
    i = group_end - 1;
  }

  // Spelled ordinals: "second", "fourth".
  for (std::size_t i = 0; i < n; ++i) {
    if (lex::is_ordinal_word(to_lower(tokens[i].text)) || is_digit_ordinal(tokens[i].text)) {
      candidates.push_back({i, i + 1, "ORDINAL", 2});
    }
  }

  // Capitalized runs against the gazetteers. A run may only start at a
  // sentence-initial token when the gazetteers know the word.
  for (std::size_t i = 0; i < n; ++i) {
    if (!is_capitalized(tokens[i])) continue;
    if (lex::is_month_name(tokens[i].text)) continue;
    if (sentence_initial[i] && !lex::is_given_name(tokens[i].text) &&
        !lex::is_place_name(tokens[i].text)) {
      continue;
    }
    std::size_t end = i + 1;
    while (end < n && is_capitalized(tokens[end]) && !lex::is_month_name(tokens[end].text)) ++end;
    std::string joined;
    for (std::size_t k = i; k < end; ++k) {
      if (k > i) joined += ' ';
      joined += tokens[k].text;
    }
    std::string label;
    if (lex::is_place_name(joined)) {
      label = "GPE";
    } else if (lex::is_given_name(tokens[i].text)) {
      label = "PERSON";
    } else if (end - i == 1 && lex::is_place_name(tokens[i].text)) {
      label = "GPE";
    } else {
      label = "ORG";
    }
    candidates.push_back({i, end, std::move(label), 3});
    i = end - 1;
  }

  // Leftmost-longest overlap resolution, priority breaking exact ties.
  std::sort(candidates.begin(), candidates.end(), [](const SpanCandidate& a, const SpanCandidate& b) {
    if (a.tok_begin != b.tok_begin) return a.tok_begin < b.tok_begin;
    if (a.tok_end != b.tok_end) return a.tok_end > b.tok_end;
    return a.priority < b.priority;
  });
  std::vector<TaggedSpan> out;
  std::size_t covered_until = 0;
  for (const SpanCandidate& c : candidates) {
    if (c.tok_begin < covered_until) continue;
    out.push_back({tokens[c.tok_begin].char_start, tokens[c.tok_end - 1].char_end, c.label});
    covered_until = c.tok_end;
  }
  return out;
}

std::vector<TaggedSpan> BuiltinTagger::tag(const std::string& request_id, const std::string& text) {
  (void)request_id;
  Paragraph p;
  p.text = text;
  return builtin_tagger(p);
}

NeExtraction extract_named_entities(const Paragraph& paragraph, Tagger& tagger) {
  const std::string request_id = paragraph.doc_id + ":" + std::to_string(paragraph.para_index);
  std::vector<TaggedSpan> tagged = tagger.tag(request_id, paragraph.text);

  const std::size_t text_len = utf8::length(paragraph.text);
  for (const TaggedSpan& s : tagged) {
    if (s.char_start >= s.char_end || s.char_end > text_len) {
      throw PluginError("tagger '" + tagger.name() + "' returned an out-of-range span [" +
                        std::to_string(s.char_start) + ", " + std::to_string(s.char_end) + ") for " +
                        request_id);
    }
  }
  // External taggers may emit overlapping spans; resolve leftmost-longest.
  std::sort(tagged.begin(), tagged.end(), [](const TaggedSpan& a, const TaggedSpan& b) {
    if (a.char_start != b.char_start) return a.char_start < b.char_start;
    return a.char_end > b.char_end;
  });

  NeExtraction result;
  std::size_t covered_until = 0;
  for (const TaggedSpan& s : tagged) {
    if (s.char_start < covered_until) continue;
    const auto category = categorize(s.label);
    if (!category.has_value()) {
      ++result.dropped_unmappable;
      continue;
    }
    AnswerSpan span;
    span.char_start = s.char_start;
    span.char_end = s.char_end;
    span.text = utf8::substr(paragraph.text, s.char_start, s.char_end);
    span.source = AnswerSource::NE;
    span.ne_label = s.label;
    span.category = *category;
    result.spans.push_back(std::move(span));
    covered_until = s.char_end;
  }
  return result;
}

AnswerSpan sample_answer(const std::vector<AnswerSpan>& candidates, Rng& rng) {
  if (candidates.empty()) throw DataError("no answer candidates");
  return candidates[static_cast<std::size_t>(rng.below(candidates.size()))];
}

}  // namespace clozeforge
