#include "clozeforge/corpus.hpp"

#include <fstream>

#include "clozeforge/errors.hpp"
#include "clozeforge/hashing.hpp"
#include "clozeforge/rng.hpp"
#include "clozeforge/utf8.hpp"
#include "json.hpp"

namespace clozeforge {

std::string_view coarse_pos_name(CoarsePos pos) {
  switch (pos) {
    case CoarsePos::DET: return "DET";
    case CoarsePos::ADJ: return "ADJ";
    case CoarsePos::NOUN: return "NOUN";
    case CoarsePos::PROPN: return "PROPN";
    case CoarsePos::VERB: return "VERB";
    case CoarsePos::NUM: return "NUM";
    case CoarsePos::PUNCT: return "PUNCT";
    case CoarsePos::OTHER: return "OTHER";
  }
  return "OTHER";
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> tokens;
  if (text.empty()) return tokens;
  const std::vector<char32_t> cps = utf8::decode_or_throw(text, "tokenize input");
  std::size_t i = 0;
  const std::size_t n = cps.size();
  while (i < n) {
    if (utf8::is_space(cps[i])) {
      ++i;
      continue;
    }
    if (utf8::is_punct(cps[i])) {
      tokens.push_back({utf8::encode(cps[i]), i, i + 1, std::nullopt});
      ++i;
      continue;
    }
    std::size_t start = i;
    std::string word;
    while (i < n && !utf8::is_space(cps[i]) && !utf8::is_punct(cps[i])) {
      utf8::append(word, cps[i]);
      ++i;
    }
    tokens.push_back({std::move(word), start, i, std::nullopt});
  }
  return tokens;
}

const std::set<std::string>& default_abbreviations() {
  static const std::set<std::string> abbrevs = {
      "Mr.",  "Mrs.", "Ms.",  "Dr.",   "Prof.", "St.",  "Mt.",  "Jr.",  "Sr.",   "vs.",
      "etc.", "e.g.", "i.e.", "No.",   "no.",   "Inc.", "Ltd.", "Co.",  "Corp.", "Gen.",
      "Col.", "Capt.", "Sgt.", "Lt.",  "Rev.",  "Hon.", "Fig.", "fig.", "Jan.",  "Feb.",
      "Mar.", "Apr.", "Jun.", "Jul.",  "Aug.",  "Sep.", "Sept.", "Oct.", "Nov.", "Dec.",
      "a.m.", "p.m.", "ca.",  "approx."};
  return abbrevs;
}

namespace {

bool is_terminal_punct(const Token& t) { return t.text == "." || t.text == "!" || t.text == "?"; }

bool starts_lowercase(const Token& t) {
  if (t.text.empty()) return false;
  const char c = t.text[0];
  return c >= 'a' && c <= 'z';
}

bool ends_with_digit(const Token& t) {
  if (t.text.empty()) return false;
  const char c = t.text.back();
  return c >= '0' && c <= '9';
}

bool starts_with_digit(const Token& t) {
  if (t.text.empty()) return false;
  const char c = t.text[0];
  return c >= '0' && c <= '9';
}

// Single letters close initials like "J." or the inner dots of "U.S.".
bool is_single_letter(const Token& t) { return utf8::length(t.text) == 1 && !starts_with_digit(t); }

bool is_closing_mark(const Token& t) {
  return t.text == "\"" || t.text == "'" || t.text == ")" || t.text == "]" || t.text == "”" ||
         t.text == "’";
}

}  // namespace

std::vector<Sentence> split_sentences(const Paragraph& paragraph, const std::vector<Token>& tokens,
                                      const std::set<std::string>& abbreviations) {
  (void)paragraph;
  std::vector<Sentence> sentences;
  if (tokens.empty()) return sentences;

  const std::size_t n = tokens.size();
  std::size_t begin = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Token& t = tokens[i];
    if (!is_terminal_punct(t)) continue;

    if (t.text == "." && i > 0) {
      const Token& prev = tokens[i - 1];
      const bool adjacent = prev.char_end == t.char_start;
      if (adjacent && abbreviations.count(prev.text + ".") > 0) continue;
      if (adjacent && is_single_letter(prev)) continue;
      // Decimal point, e.g. the "." inside "2.30".
      if (adjacent && ends_with_digit(prev) && i + 1 < n && starts_with_digit(tokens[i + 1]) &&
          t.char_end == tokens[i + 1].char_start) {
        continue;
      }
    }
    // Defer the boundary to the last of a run like "?!" or "...".
    if (i + 1 < n && is_terminal_punct(tokens[i + 1])) continue;

    std::size_t end = i + 1;
    if (end < n && is_closing_mark(tokens[end]) && tokens[end].char_start == tokens[end - 1].char_end) {
      ++end;
    }
    if (end < n && starts_lowercase(tokens[end])) continue;

    sentences.push_back({begin, end, tokens[begin].char_start, tokens[end - 1].char_end});
    begin = end;
    i = end - 1;
  }
  if (begin < n) {
    sentences.push_back({begin, n, tokens[begin].char_start, tokens[n - 1].char_end});
  }
  return sentences;
}

std::vector<Paragraph> split_paragraphs(const Document& doc) {
  std::vector<Paragraph> out;
  const std::vector<char32_t> cps = utf8::decode_or_throw(doc.text, "document " + doc.doc_id);
  const std::size_t n = cps.size();
  std::size_t i = 0;
  std::size_t index = 0;
  while (i < n) {
    std::size_t end = i;
    while (end < n && cps[end] != U'\n') ++end;
    std::size_t a = i;
    std::size_t b = end;
    while (a < b && utf8::is_space(cps[a])) ++a;
    while (b > a && utf8::is_space(cps[b - 1])) --b;
    if (a < b) {
      std::string text;
      for (std::size_t k = a; k < b; ++k) utf8::append(text, cps[k]);
      out.push_back({doc.doc_id, index++, std::move(text), a});
    }
    i = end + 1;
  }
  return out;
}

struct JsonlDocumentSource::Impl {
  std::string path;
  std::ifstream in;
  std::size_t line_no = 0;
  std::set<std::string> seen_ids;
};

JsonlDocumentSource::JsonlDocumentSource(std::string path) : impl_(std::make_unique<Impl>()) {
  impl_->path = std::move(path);
  impl_->in.open(impl_->path);
  if (!impl_->in) throw DataError("cannot open corpus file: " + impl_->path);
}

JsonlDocumentSource::~JsonlDocumentSource() = default;

std::optional<Document> JsonlDocumentSource::next() {
  std::string line;
  while (std::getline(impl_->in, line)) {
    ++impl_->line_no;
    if (line.empty()) continue;
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      throw DataError(impl_->path + ":" + std::to_string(impl_->line_no) + ": invalid JSON document line");
    }
    Document doc;
    if (!j.contains("id") || !j["id"].is_string() || j["id"].get<std::string>().empty()) {
      throw DataError(impl_->path + ":" + std::to_string(impl_->line_no) + ": missing or empty \"id\"");
    }
    doc.doc_id = j["id"].get<std::string>();
    if (!impl_->seen_ids.insert(doc.doc_id).second) {
      throw DataError(impl_->path + ":" + std::to_string(impl_->line_no) + ": duplicate doc id \"" +
                      doc.doc_id + "\"");
    }
    if (j.contains("title") && j["title"].is_string()) doc.title = j["title"].get<std::string>();
    if (!j.contains("text") || !j["text"].is_string()) {
      throw DataError(impl_->path + ":" + std::to_string(impl_->line_no) + ": missing \"text\"");
    }
    doc.text = j["text"].get<std::string>();
    return doc;
  }
  if (impl_->in.bad()) throw DataError("I/O error reading " + impl_->path);
  return std::nullopt;
}

std::vector<Paragraph> sample_paragraphs(DocumentSource& corpus, std::size_t n, const LengthBounds& bounds,
                                         std::uint64_t seed, SampleStats* stats,
                                         const std::function<void(const Document&)>& on_document) {
  Rng rng(hash_combine(seed, std::uint64_t{0x70617261}));  // distinct stream per purpose
  std::vector<Paragraph> reservoir;
  reservoir.reserve(n);
  SampleStats local;
  while (auto doc = corpus.next()) {
    ++local.documents;
    if (on_document) on_document(*doc);
    for (Paragraph& p : split_paragraphs(*doc)) {
      ++local.paragraphs_seen;
      const std::size_t n_tokens = tokenize(p.text).size();
      if (n_tokens < bounds.min_tokens || n_tokens > bounds.max_tokens) continue;
      if (n > 0) {
        if (reservoir.size() < n) {
          reservoir.push_back(std::move(p));
        } else {
          const std::uint64_t j = rng.below(local.eligible + 1);
          if (j < n) reservoir[static_cast<std::size_t>(j)] = std::move(p);
        }
      }
      ++local.eligible;
    }
  }
  local.shortfall = local.eligible < n ? n - local.eligible : 0;
  if (stats) *stats = local;
  return reservoir;
}

}  // namespace clozeforge
