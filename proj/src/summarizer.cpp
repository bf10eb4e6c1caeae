#include "endsum/summarizer.hpp"

#include <algorithm>

#include "endsum/errors.hpp"
#include "endsum/format.hpp"
#include "json.hpp"

namespace endsum {

void EnDConfig::validate() const {
  if (!(alpha >= 0.0)) throw ConfigError("alpha must be >= 0");
  if (!(beta >= 0.0)) throw ConfigError("beta must be >= 0");
  if (!(alpha + beta > 0.0)) throw ConfigError("alpha + beta must be > 0");
  if (!(gamma > 0.0)) throw ConfigError("gamma must be > 0");
  if (summary_length < 1) throw ConfigError("summary length must be >= 1");
}

std::vector<std::uint32_t> SummaryState::selected() const {
  std::vector<std::uint32_t> indices;
  indices.reserve(picks.size());
  for (const Pick& pick : picks) indices.push_back(pick.index);
  return indices;
}

bool SummaryState::contains(std::uint32_t index) const {
  return std::any_of(picks.begin(), picks.end(),
                     [index](const Pick& p) { return p.index == index; });
}

double combined_score(double entropy, double diversity, const EnDConfig& config) {
  return config.alpha * entropy + config.beta * diversity;
}

std::uint32_t select_next(const SummaryState& state, const Corpus& corpus,
                          const EntropyScores& entropies, const EnDConfig& config) {
  bool found = false;
  std::uint32_t best_index = 0;
  double best_score = 0.0;
  for (std::uint32_t i = 0; i < corpus.size(); ++i) {
    if (state.contains(i)) continue;
    DiversityScore d = diversity(corpus.tweets[i], state.keyword_union);
    double score = combined_score(entropies.values[i], d.diversity, config);
    if (!found || score > best_score) {
      found = true;
      best_index = i;
      best_score = score;
    }
  }
  if (!found) throw DataError("no candidates remaining");
  return best_index;
}

SummaryState summarize(const Corpus& corpus, const EntropyScores& entropies,
                       const EnDConfig& config) {
  config.validate();
  if (corpus.size() == 0) throw DataError("no candidates after preprocessing");

  SummaryState state;
  state.target_length = config.summary_length;
  const std::uint32_t rounds =
      std::min<std::uint32_t>(config.summary_length, corpus.size());
  for (std::uint32_t round = 0; round < rounds; ++round) {
    std::uint32_t index = select_next(state, corpus, entropies, config);
    const ProcessedTweet& tweet = corpus.tweets[index];
    DiversityScore d = diversity(tweet, state.keyword_union);
    Pick pick;
    pick.index = index;
    pick.entropy = entropies.values[index];
    pick.diversity = d.diversity;
    pick.score = combined_score(pick.entropy, pick.diversity, config);
    state.picks.push_back(pick);
    state.keyword_union.insert(tweet.keywords.begin(), tweet.keywords.end());
  }
  return state;
}

SummaryState summarize(const Corpus& corpus, const EnDConfig& config) {
  config.validate();
  if (corpus.size() == 0) throw DataError("no candidates after preprocessing");
  OverlapTable table = build_overlap_table(corpus);
  return summarize(corpus, entropy_scores(table, config.gamma), config);
}

SummaryState baseline_frequency(const Corpus& corpus, std::uint32_t summary_length) {
  if (summary_length < 1) throw ConfigError("summary length must be >= 1");
  if (corpus.size() == 0) throw DataError("no candidates after preprocessing");

  std::unordered_map<std::string_view, std::uint32_t> doc_freq;
  for (const ProcessedTweet& tweet : corpus.tweets) {
    for (const std::string& kw : tweet.keywords) ++doc_freq[kw];
  }

  std::vector<std::pair<double, std::uint32_t>> ranked;  // (-score, index)
  ranked.reserve(corpus.size());
  for (const ProcessedTweet& tweet : corpus.tweets) {
    std::uint64_t sum = 0;
    for (const std::string& kw : tweet.keywords) sum += doc_freq[kw];
    double score = static_cast<double>(sum) / static_cast<double>(tweet.keywords.size());
    ranked.emplace_back(-score, tweet.index);
  }
  std::sort(ranked.begin(), ranked.end());

  SummaryState state;
  state.target_length = summary_length;
  const std::uint32_t rounds = std::min<std::uint32_t>(summary_length, corpus.size());
  for (std::uint32_t r = 0; r < rounds; ++r) {
    const auto& [neg_score, index] = ranked[r];
    Pick pick;
    pick.index = index;
    pick.score = -neg_score;
    state.picks.push_back(pick);
    const ProcessedTweet& tweet = corpus.tweets[index];
    state.keyword_union.insert(tweet.keywords.begin(), tweet.keywords.end());
  }
  return state;
}

void write_summary_jsonl(std::ostream& out, const SummaryState& summary,
                         const Corpus& corpus) {
  int rank = 0;
  for (const Pick& pick : summary.picks) {
    const ProcessedTweet& tweet = corpus.tweets.at(pick.index);
    out << "{\"rank\":" << ++rank
        << ",\"id\":" << nlohmann::json(tweet.id).dump()
        << ",\"text\":" << nlohmann::json(tweet.raw_text).dump()
        << ",\"entropy\":" << fixed6(pick.entropy)
        << ",\"diversity_at_selection\":" << fixed6(pick.diversity)
        << ",\"score\":" << fixed6(pick.score) << "}\n";
  }
}

}  // namespace endsum
