#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace clozeforge {

enum class CoarsePos : std::uint8_t { DET, ADJ, NOUN, PROPN, VERB, NUM, PUNCT, OTHER };

std::string_view coarse_pos_name(CoarsePos pos);

struct Document {
  std::string doc_id;
  std::string title;
  std::string text;
};

// A contiguous slice of a document. Offsets are code-point indices.
struct Paragraph {
  std::string doc_id;
  std::size_t para_index = 0;
  std::string text;
  std::size_t char_offset_in_doc = 0;
};

struct Token {
  std::string text;
  std::size_t char_start = 0;
  std::size_t char_end = 0;  // exclusive
  std::optional<CoarsePos> coarse_pos;
};

// Half-open token index range plus the covered character range.
struct Sentence {
  std::size_t token_begin = 0;
  std::size_t token_end = 0;
  std::size_t char_start = 0;
  std::size_t char_end = 0;
};

// Whitespace + punctuation tokenizer. Every punctuation character is its own
// token; offsets are code-point indices into `text`.
std::vector<Token> tokenize(std::string_view text);

const std::set<std::string>& default_abbreviations();

// Boundaries go after sentence-final {. ! ?} unless the next token starts
// with a lowercase letter, the dot closes a known abbreviation or initial,
// or the dot sits between adjacent digits (a decimal point).
std::vector<Sentence> split_sentences(const Paragraph& paragraph, const std::vector<Token>& tokens,
                                      const std::set<std::string>& abbreviations = default_abbreviations());

// One paragraph per non-empty line, trimmed of surrounding blanks.
std::vector<Paragraph> split_paragraphs(const Document& doc);

struct LengthBounds {
  std::size_t min_tokens = 40;
  std::size_t max_tokens = 550;
};

// Pull-based document stream so corpora never need to fit in memory.
class DocumentSource {
 public:
  virtual ~DocumentSource() = default;
  virtual std::optional<Document> next() = 0;
};

class VectorDocumentSource final : public DocumentSource {
 public:
  explicit VectorDocumentSource(std::vector<Document> docs) : docs_(std::move(docs)) {}
  std::optional<Document> next() override {
    if (pos_ >= docs_.size()) return std::nullopt;
    return docs_[pos_++];
  }

 private:
  std::vector<Document> docs_;
  std::size_t pos_ = 0;
};

// One JSON object per line: {"id": ..., "title": ..., "text": ...}.
// Enforces non-empty, unique ids.
class JsonlDocumentSource final : public DocumentSource {
 public:
  explicit JsonlDocumentSource(std::string path);
  ~JsonlDocumentSource() override;
  std::optional<Document> next() override;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

struct SampleStats {
  std::size_t documents = 0;
  std::size_t paragraphs_seen = 0;
  std::size_t eligible = 0;
  std::size_t shortfall = 0;  // > 0 when fewer eligible paragraphs than requested
};

// Uniform reservoir sample of n eligible paragraphs (token count within
// bounds). Pure function of (corpus order, n, bounds, seed).
std::vector<Paragraph> sample_paragraphs(DocumentSource& corpus, std::size_t n, const LengthBounds& bounds,
                                         std::uint64_t seed, SampleStats* stats = nullptr,
                                         const std::function<void(const Document&)>& on_document = {});

}  // namespace clozeforge
