#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "endsum/corpus.hpp"
#include "endsum/simgraph.hpp"

namespace endsum {

using KeywordUnion = std::unordered_set<std::string>;

struct EntropyScores {
  std::vector<double> values;  // one per tweet index, >= 0
  double gamma = 0.5;
};

struct DiversityScore {
  double sim = 0.0;
  double diversity = 1.0;  // always 1 - sim
};

// Sum over the row of |−p^γ · log2 p|. Empty row gives 0.
// Throws ConfigError unless gamma > 0.
double karci_entropy(const ProbabilityRow& row, double gamma);

// karci_entropy applied to every row. Static per corpus: the greedy loop
// never recomputes these.
EntropyScores entropy_scores(const OverlapTable& table, double gamma);

// Distinct keywords across the selected tweets.
KeywordUnion summary_keyword_union(std::span<const std::uint32_t> selected,
                                   const Corpus& corpus);

// sim = |keywords ∩ summary| / |keywords|; diversity = 1 - sim.
// Throws std::invalid_argument on a keywordless tweet (excluded at ingestion).
DiversityScore diversity(const ProcessedTweet& tweet,
                         const KeywordUnion& summary_keywords);

// Debug dump: "index,id,entropy" sorted by index.
void write_entropy_csv(std::ostream& out, const EntropyScores& scores,
                       const Corpus& corpus);

}  // namespace endsum
