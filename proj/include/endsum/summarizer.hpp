#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "endsum/corpus.hpp"
#include "endsum/scoring.hpp"

namespace endsum {

struct EnDConfig {
  double alpha = 0.5;  // weight of entropy
  double beta = 0.5;   // weight of diversity
  double gamma = 0.5;  // entropy exponent
  std::uint32_t summary_length = 1;

  // Throws ConfigError unless alpha, beta >= 0, alpha + beta > 0,
  // gamma > 0 and summary_length >= 1.
  void validate() const;
};

struct Pick {
  std::uint32_t index = 0;
  double entropy = 0.0;
  double diversity = 0.0;  // against the union at selection time
  double score = 0.0;
};

struct SummaryState {
  std::vector<Pick> picks;     // in selection order
  KeywordUnion keyword_union;  // distinct keywords of all picks
  std::uint32_t target_length = 0;

  std::vector<std::uint32_t> selected() const;
  bool contains(std::uint32_t index) const;
};

double combined_score(double entropy, double diversity, const EnDConfig& config);

// Index of the unselected candidate maximizing the combined score; ties go
// to the lowest index. Throws DataError when no candidate remains.
std::uint32_t select_next(const SummaryState& state, const Corpus& corpus,
                          const EntropyScores& entropies, const EnDConfig& config);

// Greedy loop: picks min(summary_length, candidate count) tweets, growing
// the keyword union after each pick. Entropies stay fixed throughout.
SummaryState summarize(const Corpus& corpus, const EntropyScores& entropies,
                       const EnDConfig& config);
SummaryState summarize(const Corpus& corpus, const EnDConfig& config);

// Comparison baseline: rank tweets by mean document frequency of their
// keywords, take the top L. No diversity term.
SummaryState baseline_frequency(const Corpus& corpus, std::uint32_t summary_length);

// One JSON object per selected tweet:
// {"rank","id","text","entropy","diversity_at_selection","score"}.
void write_summary_jsonl(std::ostream& out, const SummaryState& summary,
                         const Corpus& corpus);

}  // namespace endsum
