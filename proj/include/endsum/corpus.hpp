#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace endsum {

enum class KeywordMode {
  kPosFilter,         // keep tokens tagged NOUN/VERB/ADJ; unknown tokens kept
  kStopwordFallback,  // keep non-stopword tokens of length >= 2
};

enum class PosTag { kNoun, kVerb, kAdj, kOther };

struct NormalizerConfig {
  KeywordMode keyword_mode = KeywordMode::kStopwordFallback;
  std::optional<std::filesystem::path> lemma_lexicon;
  std::optional<std::filesystem::path> stopword_list;  // nullopt: built-in list
  std::optional<std::filesystem::path> pos_lexicon;    // required for kPosFilter
};

struct RawTweet {
  std::string id;
  std::string text;
  std::optional<std::int64_t> timestamp;
};

struct ProcessedTweet {
  std::uint32_t index = 0;
  std::string id;
  std::string raw_text;
  std::vector<std::string> tokens;    // normalized, in text order
  std::vector<std::string> keywords;  // distinct, sorted
  bool droppable() const { return tokens.empty(); }
};

struct Corpus {
  std::vector<ProcessedTweet> tweets;
  std::uint32_t size() const { return static_cast<std::uint32_t>(tweets.size()); }
};

struct SkipReport {
  std::uint32_t retweets = 0;
  std::uint32_t empty = 0;        // no tokens left after normalization
  std::uint32_t keywordless = 0;  // tokens but no keywords; unusable as candidates
  std::uint32_t total() const { return retweets + empty + keywordless; }
};

struct ParseResult {
  Corpus corpus;
  SkipReport skipped;
};

// Text normalization plus keyword extraction with the lexicons loaded
// into memory. All methods are pure; one instance may be shared freely.
class Normalizer {
 public:
  // Loads the lexicon files named by the config. Throws ConfigError on
  // unreadable or malformed files, or when kPosFilter lacks a lexicon.
  explicit Normalizer(const NormalizerConfig& config);

  // Test seam: build from in-memory tables instead of files.
  static Normalizer from_tables(KeywordMode mode,
                                std::unordered_map<std::string, std::string> lemmas,
                                std::unordered_set<std::string> stopwords,
                                std::unordered_map<std::string, PosTag> pos);

  const NormalizerConfig& config() const { return config_; }

  // lowercase -> drop URL and @mention chunks -> strip '#' -> tokenize on
  // whitespace/punctuation -> lemma map -> drop numeric/punctuation tokens.
  std::vector<std::string> normalize_tokens(std::string_view text) const;

  std::vector<std::string> extract_keywords(std::span<const std::string> tokens) const;

  ProcessedTweet preprocess(const RawTweet& raw) const;

 private:
  Normalizer() = default;

  NormalizerConfig config_;
  std::unordered_map<std::string, std::string> lemmas_;
  std::unordered_set<std::string> stopwords_;
  std::unordered_map<std::string, PosTag> pos_;
};

// True iff the text, after leading whitespace, starts with the token "RT"
// (any case) followed by whitespace or '@'.
bool is_retweet(std::string_view text);

// Reads JSON Lines ({"id","text","timestamp"?}) into a corpus, dropping
// retweets and tweets that normalize to nothing. Throws ParseError with a
// 1-based line number on malformed records and on duplicate ids.
ParseResult parse_corpus(std::istream& input, const Normalizer& normalizer);

}  // namespace endsum
