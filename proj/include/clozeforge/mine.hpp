#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <string>
#include <unordered_set>
#include <vector>

#include "clozeforge/translate.hpp"

namespace clozeforge {

struct MinedQuestion {
  std::string text;  // whitespace-normalized
  std::string wh_word;
  std::string source_id;

  bool operator==(const MinedQuestion&) const = default;
};

// Collapses whitespace runs to single spaces and trims; also the dedup key.
std::string normalize_question_line(std::string_view line);

// True iff the trimmed line starts (case-insensitive) with one of
// {how much, how many, what, when, where, who}, ends in "?", contains no
// "??" or "?!", and tokenizes to at most 20 tokens.
bool is_candidate_question(std::string_view line);

// Content-hash dedup store (FNV-1a over the normalized text).
class DedupStore {
 public:
  // True when the text was not seen before.
  bool insert(std::string_view normalized);
  std::size_t size() const { return hashes_.size(); }

 private:
  std::unordered_set<std::uint64_t> hashes_;
};

struct MineCounts {
  std::map<std::string, std::size_t> accepted_per_wh;
  std::size_t lines_seen = 0;
  std::size_t accepted = 0;
  std::size_t duplicates = 0;
};

// Filters a line stream; every accepted line passes is_candidate_question,
// exact duplicates are emitted once. Counts are accumulated into `counts`.
void mine_questions(std::istream& lines, const std::string& source_id,
                    const std::function<void(const MinedQuestion&)>& sink, DedupStore& dedup,
                    MineCounts& counts);

struct BalanceResult {
  std::vector<MinedQuestion> sample;
  std::map<std::string, std::size_t> shortfall;  // wh word -> missing count
};

// Per-wh reservoir sampling of floor(n_total/6) questions per class;
// classes with insufficient supply yield what they have.
class BalanceSampler {
 public:
  BalanceSampler(std::size_t n_total, std::uint64_t seed);
  void observe(const MinedQuestion& q);
  BalanceResult finish();

 private:
  std::size_t per_class_;
  std::uint64_t seed_;
  std::map<std::string, std::size_t> seen_per_wh_;
  std::map<std::string, std::vector<std::pair<std::size_t, MinedQuestion>>> reservoirs_;
  std::map<std::string, Rng> rngs_;
};

}  // namespace clozeforge
