#include "endsum/scoring.hpp"

#include <cmath>
#include <stdexcept>

#include "endsum/errors.hpp"
#include "endsum/format.hpp"

namespace endsum {

double karci_entropy(const ProbabilityRow& row, double gamma) {
  if (!(gamma > 0.0)) throw ConfigError("gamma must be > 0");
  double sum = 0.0;
  for (const auto& [j, p] : row.entries) {
    sum += std::fabs(std::pow(p, gamma) * std::log2(p));
  }
  return sum;
}

EntropyScores entropy_scores(const OverlapTable& table, double gamma) {
  EntropyScores scores;
  scores.gamma = gamma;
  scores.values.reserve(table.size());
  for (std::uint32_t i = 0; i < table.size(); ++i) {
    scores.values.push_back(karci_entropy(probability_row(table, i), gamma));
  }
  return scores;
}

KeywordUnion summary_keyword_union(std::span<const std::uint32_t> selected,
                                   const Corpus& corpus) {
  KeywordUnion keywords;
  for (std::uint32_t i : selected) {
    const ProcessedTweet& tweet = corpus.tweets.at(i);
    keywords.insert(tweet.keywords.begin(), tweet.keywords.end());
  }
  return keywords;
}

DiversityScore diversity(const ProcessedTweet& tweet,
                         const KeywordUnion& summary_keywords) {
  if (tweet.keywords.empty()) {
    throw std::invalid_argument("diversity of a keywordless tweet");
  }
  std::size_t inter = 0;
  for (const std::string& kw : tweet.keywords) {
    if (summary_keywords.contains(kw)) ++inter;
  }
  DiversityScore score;
  score.sim = static_cast<double>(inter) / static_cast<double>(tweet.keywords.size());
  score.diversity = 1.0 - score.sim;
  return score;
}

void write_entropy_csv(std::ostream& out, const EntropyScores& scores,
                       const Corpus& corpus) {
  out << "index,id,entropy\n";
  for (std::uint32_t i = 0; i < corpus.size(); ++i) {
    out << i << ',' << corpus.tweets[i].id << ',' << fixed6(scores.values[i]) << '\n';
  }
}

}  // namespace endsum
