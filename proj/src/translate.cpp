#include "clozeforge/translate.hpp"

#include <algorithm>
#include <cctype>

#include "clozeforge/errors.hpp"

namespace clozeforge {

std::string_view method_name(TranslateMethod m) {
  switch (m) {
    case TranslateMethod::IDENTITY: return "IDENTITY";
    case TranslateMethod::NOISY: return "NOISY";
    case TranslateMethod::EXTERNAL: return "EXTERNAL";
  }
  return "IDENTITY";
}

std::string_view wh_mode_name(WhMode m) { return m == WhMode::HEURISTIC ? "HEURISTIC" : "RANDOM"; }

std::string_view wh_for_category(AnswerCategory cat, WhMode mode, Rng& rng) {
  if (mode == WhMode::HEURISTIC) {
    switch (cat) {
      case AnswerCategory::PERSON_NORP_ORG: return "Who";
      case AnswerCategory::PLACE: return "Where";
      case AnswerCategory::THING: return "What";
      case AnswerCategory::TEMPORAL: return "When";
      case AnswerCategory::NUMERIC: return rng.below(2) == 0 ? "How much" : "How many";
      case AnswerCategory::GENERIC: break;  // no heuristic wh* word; fall back to RANDOM
    }
  }
  return kWhWords[static_cast<std::size_t>(rng.below(kWhWords.size()))];
}

NaturalQuestion identity_translate(const ClozeQuestion& cloze, WhMode mode, Rng& rng) {
  const std::string_view wh = wh_for_category(cloze.answer.category, mode, rng);
  NaturalQuestion q;
  q.wh_word = std::string(wh);
  q.method = TranslateMethod::IDENTITY;
  q.source_cloze = {cloze.doc_id, cloze.para_index};
  std::string text;
  for (std::size_t i = 0; i < cloze.tokens.size(); ++i) {
    if (!text.empty()) text += ' ';
    text += (i == cloze.mask_index) ? q.wh_word : cloze.tokens[i];
  }
  text += text.empty() ? "?" : " ?";
  q.text = std::move(text);
  return q;
}

std::vector<NoisyToken> apply_noise(const std::vector<std::string>& tokens, const NoiseConfig& cfg,
                                    Rng& rng) {
  std::vector<NoisyToken> kept;
  kept.reserve(tokens.size());
  if (cfg.p_drop > 0.0) {
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (!rng.bernoulli(cfg.p_drop)) kept.push_back({tokens[i], i, false});
    }
  } else {
    for (std::size_t i = 0; i < tokens.size(); ++i) kept.push_back({tokens[i], i, false});
  }

  if (cfg.shuffle_window > 0 && kept.size() > 1) {
    // Key i + u_i with u_i uniform on [0, k]; a stable sort then moves every
    // token at most k positions.
    std::vector<double> keys(kept.size());
    for (std::size_t i = 0; i < kept.size(); ++i) {
      keys[i] = static_cast<double>(i) + rng.uniform(static_cast<double>(cfg.shuffle_window));
    }
    std::vector<std::size_t> order(kept.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
    std::vector<NoisyToken> shuffled;
    shuffled.reserve(kept.size());
    for (std::size_t idx : order) shuffled.push_back(std::move(kept[idx]));
    kept = std::move(shuffled);
  }

  if (cfg.p_mask > 0.0) {
    for (NoisyToken& t : kept) {
      if (rng.bernoulli(cfg.p_mask)) {
        t.text = cfg.mask_placeholder;
        t.masked = true;
      }
    }
  }
  return kept;
}

NaturalQuestion noisy_translate(const ClozeQuestion& cloze, const NoiseConfig& cfg, WhMode mode,
                                Rng& rng) {
  std::vector<std::string> body;
  body.reserve(cloze.tokens.size());
  for (std::size_t i = 0; i < cloze.tokens.size(); ++i) {
    if (i != cloze.mask_index) body.push_back(cloze.tokens[i]);
  }
  const std::vector<NoisyToken> noisy = apply_noise(body, cfg, rng);
  const std::string_view wh = wh_for_category(cloze.answer.category, mode, rng);

  NaturalQuestion q;
  q.wh_word = std::string(wh);
  q.method = TranslateMethod::NOISY;
  q.source_cloze = {cloze.doc_id, cloze.para_index};
  std::string text(wh);
  for (const NoisyToken& t : noisy) {
    text += ' ';
    text += t.text;
  }
  text += " ?";
  q.text = std::move(text);
  return q;
}

ExternalTranslation external_translate(const std::vector<ClozeQuestion>& clozes,
                                       ProcessTranslator& translator) {
  ExternalTranslation result;
  if (clozes.empty()) return result;

  std::vector<ProcessTranslator::Request> requests;
  requests.reserve(clozes.size());
  for (std::size_t i = 0; i < clozes.size(); ++i) {
    requests.push_back({std::to_string(i), clozes[i].joined(),
                        std::string(category_id(clozes[i].answer.category))});
  }
  const std::vector<ProcessTranslator::Response> responses = translator.translate(requests);

  result.questions.reserve(responses.size());
  for (std::size_t i = 0; i < responses.size(); ++i) {
    NaturalQuestion q;
    q.method = TranslateMethod::EXTERNAL;
    q.source_cloze = {clozes[i].doc_id, clozes[i].para_index};
    q.text = responses[i].question;
    while (!q.text.empty() && std::isspace(static_cast<unsigned char>(q.text.back()))) {
      q.text.pop_back();
    }
    if (q.text.empty() || q.text.back() != '?') {
      q.text += q.text.empty() ? "?" : " ?";
      ++result.repaired;
    }
    q.wh_word = wh_prefix(q.text).value_or("");
    result.questions.push_back(std::move(q));
  }
  return result;
}

namespace {

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i]))) {
      return false;
    }
  }
  return true;
}

bool word_boundary_at(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) return true;
  const unsigned char c = static_cast<unsigned char>(text[pos]);
  return !(std::isalnum(c) || c >= 0x80);
}

}  // namespace

std::optional<std::string> wh_prefix(std::string_view text) {
  std::size_t start = 0;
  while (start < text.size() && std::isspace(static_cast<unsigned char>(text[start]))) ++start;
  const std::string_view trimmed = text.substr(start);
  // Two-word forms first so "How much" is not shadowed.
  static const std::array<std::string_view, 6> ordered = {"How much", "How many", "What",
                                                          "When",     "Where",    "Who"};
  for (std::string_view wh : ordered) {
    if (trimmed.size() >= wh.size() && iequals(trimmed.substr(0, wh.size()), wh) &&
        word_boundary_at(trimmed, wh.size())) {
      return std::string(wh);
    }
  }
  return std::nullopt;
}

std::optional<AnswerCategory> category_for_wh(std::string_view wh) {
  if (iequals(wh, "Who")) return AnswerCategory::PERSON_NORP_ORG;
  if (iequals(wh, "Where")) return AnswerCategory::PLACE;
  if (iequals(wh, "What")) return AnswerCategory::THING;
  if (iequals(wh, "When")) return AnswerCategory::TEMPORAL;
  if (iequals(wh, "How much") || iequals(wh, "How many")) return AnswerCategory::NUMERIC;
  return std::nullopt;
}

std::optional<std::string> prepend_category_token(std::string_view question, AnswerCategory cat) {
  const auto wh = wh_prefix(question);
  if (!wh.has_value()) return std::nullopt;
  const auto wh_cat = category_for_wh(*wh);
  if (!wh_cat.has_value() || *wh_cat != cat) return std::nullopt;
  return std::string(category_mask_token(cat)) + " " + std::string(question);
}

}  // namespace clozeforge
