#include "clozeforge/mine.hpp"

#include <algorithm>
#include <cctype>

#include "clozeforge/corpus.hpp"
#include "clozeforge/errors.hpp"
#include "clozeforge/hashing.hpp"

namespace clozeforge {

std::string normalize_question_line(std::string_view line) {
  std::string out;
  out.reserve(line.size());
  bool in_space = true;  // leading blanks dropped
  for (char c : line) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      in_space = true;
      continue;
    }
    if (in_space && !out.empty()) out += ' ';
    in_space = false;
    out += c;
  }
  return out;
}

bool is_candidate_question(std::string_view line) {
  const std::string norm = normalize_question_line(line);
  if (norm.empty()) return false;
  if (!wh_prefix(norm).has_value()) return false;
  if (norm.back() != '?') return false;
  if (norm.find("??") != std::string::npos) return false;
  if (norm.find("?!") != std::string::npos) return false;
  return tokenize(norm).size() <= 20;
}

bool DedupStore::insert(std::string_view normalized) {
  return hashes_.insert(fnv1a64(normalized)).second;
}

void mine_questions(std::istream& lines, const std::string& source_id,
                    const std::function<void(const MinedQuestion&)>& sink, DedupStore& dedup,
                    MineCounts& counts) {
  std::string line;
  while (std::getline(lines, line)) {
    ++counts.lines_seen;
    if (!is_candidate_question(line)) continue;
    std::string norm = normalize_question_line(line);
    if (!dedup.insert(norm)) {
      ++counts.duplicates;
      continue;
    }
    MinedQuestion q;
    q.wh_word = *wh_prefix(norm);
    q.text = std::move(norm);
    q.source_id = source_id;
    counts.accepted_per_wh[q.wh_word] += 1;
    ++counts.accepted;
    sink(q);
  }
  if (lines.bad()) {
    throw DataError("I/O error reading " + source_id + " at line " +
                    std::to_string(counts.lines_seen));
  }
}

BalanceSampler::BalanceSampler(std::size_t n_total, std::uint64_t seed)
    : per_class_(n_total / kWhWords.size()), seed_(seed) {}

void BalanceSampler::observe(const MinedQuestion& q) {
  if (per_class_ == 0) return;
  auto [it, inserted] = rngs_.try_emplace(q.wh_word, Rng(hash_combine(seed_, q.wh_word)));
  Rng& rng = it->second;
  std::size_t& seen = seen_per_wh_[q.wh_word];
  auto& reservoir = reservoirs_[q.wh_word];
  if (reservoir.size() < per_class_) {
    reservoir.emplace_back(seen, q);
  } else {
    const std::uint64_t j = rng.below(seen + 1);
    if (j < per_class_) reservoir[static_cast<std::size_t>(j)] = {seen, q};
  }
  ++seen;
}

BalanceResult BalanceSampler::finish() {
  BalanceResult result;
  for (std::string_view wh : kWhWords) {
    const std::string key(wh);
    auto it = reservoirs_.find(key);
    const std::size_t have = it == reservoirs_.end() ? 0 : it->second.size();
    if (have < per_class_) result.shortfall[key] = per_class_ - have;
    if (it == reservoirs_.end()) continue;
    // Arrival order within each class keeps the output stable and readable.
    std::sort(it->second.begin(), it->second.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [arrival, q] : it->second) {
      (void)arrival;
      result.sample.push_back(std::move(q));
    }
  }
  return result;
}

}  // namespace clozeforge
