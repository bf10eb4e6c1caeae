#include "endsum/corpus.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <functional>
#include <utility>

#include "endsum/errors.hpp"
#include "json.hpp"

namespace endsum {
namespace {

// Default stopword list for kStopwordFallback when no file is given.
constexpr std::array<std::string_view, 127> kBuiltinStopwords = {
    "a",      "about",  "above",   "after",  "again",   "against", "all",
    "am",     "an",     "and",     "any",    "are",     "as",      "at",
    "be",     "because", "been",   "before", "being",   "below",   "between",
    "both",   "but",    "by",      "could",  "did",     "do",      "does",
    "doing",  "down",   "during",  "each",   "few",     "for",     "from",
    "further", "had",   "has",     "have",   "having",  "he",      "her",
    "here",   "hers",   "herself", "him",    "himself", "his",     "how",
    "i",      "if",     "in",      "into",   "is",      "it",      "its",
    "itself", "just",   "me",      "more",   "most",    "my",      "myself",
    "no",     "nor",    "not",     "now",    "of",      "off",     "on",
    "once",   "only",   "or",      "other",  "our",     "ours",    "ourselves",
    "out",    "over",   "own",     "same",   "she",     "should",  "so",
    "some",   "such",   "than",    "that",   "the",     "their",   "theirs",
    "them",   "themselves", "then", "there", "these",   "they",    "this",
    "those",  "through", "to",     "too",    "under",   "until",   "up",
    "very",   "was",    "we",      "were",   "what",    "when",    "where",
    "which",  "while",  "who",     "whom",   "why",     "will",    "with",
    "would",  "you",    "your",    "yours",  "yourself", "yourselves", "rt",
};

bool is_ascii_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

bool is_space_cp(char32_t c) {
  if (c < 0x80) return is_ascii_space(static_cast<char>(c));
  return c == 0x00A0 || c == 0x1680 || (c >= 0x2000 && c <= 0x200A) ||
         c == 0x2028 || c == 0x2029 || c == 0x202F || c == 0x205F || c == 0x3000;
}

// Punctuation and symbol ranges that break tokens. ASCII is handled
// separately; for the rest this covers the blocks that actually show up
// in short social-media text (general punctuation, CJK punctuation,
// fullwidth forms, arrows/symbols/emoji).
bool is_punct_cp(char32_t c) {
  if (c < 0x80) {
    char ch = static_cast<char>(c);
    bool word = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') ||
                (ch >= '0' && ch <= '9');
    return !word && !is_ascii_space(ch);
  }
  return (c >= 0x00A1 && c <= 0x00BF) || c == 0x00D7 || c == 0x00F7 ||
         (c >= 0x2000 && c <= 0x206F) || (c >= 0x2190 && c <= 0x2BFF) ||
         (c >= 0x2E00 && c <= 0x2E7F) || (c >= 0x3001 && c <= 0x303F) ||
         (c >= 0xFE00 && c <= 0xFE0F) || (c >= 0xFE10 && c <= 0xFE6F) ||
         (c >= 0xFF01 && c <= 0xFF0F) || (c >= 0xFF1A && c <= 0xFF20) ||
         (c >= 0xFF3B && c <= 0xFF40) || (c >= 0xFF5B && c <= 0xFF65) ||
         (c >= 0x1F000 && c <= 0x1FBFF);
}

bool is_separator_cp(char32_t c) { return is_space_cp(c) || is_punct_cp(c); }

// Decodes one UTF-8 code point at [i, text.size()). Malformed bytes come
// back as U+FFFD with length 1, which classifies as a separator.
std::pair<char32_t, std::size_t> decode_utf8(std::string_view text, std::size_t i) {
  const auto byte = [&](std::size_t k) { return static_cast<unsigned char>(text[k]); };
  unsigned char b0 = byte(i);
  if (b0 < 0x80) return {b0, 1};
  auto cont = [&](std::size_t k) {
    return k < text.size() && (byte(k) & 0xC0) == 0x80;
  };
  if ((b0 & 0xE0) == 0xC0 && cont(i + 1)) {
    char32_t cp = (char32_t(b0 & 0x1F) << 6) | (byte(i + 1) & 0x3F);
    return {cp >= 0x80 ? cp : 0xFFFD, 2};
  }
  if ((b0 & 0xF0) == 0xE0 && cont(i + 1) && cont(i + 2)) {
    char32_t cp = (char32_t(b0 & 0x0F) << 12) | (char32_t(byte(i + 1) & 0x3F) << 6) |
                  (byte(i + 2) & 0x3F);
    return {cp >= 0x800 ? cp : 0xFFFD, 3};
  }
  if ((b0 & 0xF8) == 0xF0 && cont(i + 1) && cont(i + 2) && cont(i + 3)) {
    char32_t cp = (char32_t(b0 & 0x07) << 18) | (char32_t(byte(i + 1) & 0x3F) << 12) |
                  (char32_t(byte(i + 2) & 0x3F) << 6) | (byte(i + 3) & 0x3F);
    return {cp >= 0x10000 && cp <= 0x10FFFF ? cp : 0xFFFD, 4};
  }
  return {0xFFFD, 1};
}

void ascii_lower_inplace(std::string& s) {
  for (char& c : s) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c + ('a' - 'A'));
  }
}

std::vector<std::string> split_whitespace(std::string_view text) {
  std::vector<std::string> chunks;
  std::string current;
  std::size_t i = 0;
  while (i < text.size()) {
    auto [cp, len] = decode_utf8(text, i);
    if (is_space_cp(cp)) {
      if (!current.empty()) chunks.push_back(std::move(current)), current.clear();
    } else {
      current.append(text.substr(i, len));
    }
    i += len;
  }
  if (!current.empty()) chunks.push_back(std::move(current));
  return chunks;
}

bool pure_numeric(std::string_view token) {
  if (token.empty()) return false;
  return std::all_of(token.begin(), token.end(),
                     [](char c) { return c >= '0' && c <= '9'; });
}

bool pure_punctuation(std::string_view token) {
  std::size_t i = 0;
  while (i < token.size()) {
    auto [cp, len] = decode_utf8(token, i);
    if (!is_punct_cp(cp)) return false;
    i += len;
  }
  return !token.empty();
}

std::size_t codepoint_length(std::string_view token) {
  std::size_t n = 0, i = 0;
  while (i < token.size()) {
    i += decode_utf8(token, i).second;
    ++n;
  }
  return n;
}

std::string trim(std::string_view s) {
  std::size_t begin = s.find_first_not_of(" \t\r\n\f\v");
  if (begin == std::string_view::npos) return {};
  std::size_t end = s.find_last_not_of(" \t\r\n\f\v");
  return std::string(s.substr(begin, end - begin + 1));
}

PosTag parse_pos_tag(std::string_view tag, const std::filesystem::path& file,
                     std::size_t line_no) {
  if (tag == "NOUN") return PosTag::kNoun;
  if (tag == "VERB") return PosTag::kVerb;
  if (tag == "ADJ") return PosTag::kAdj;
  if (tag == "OTHER") return PosTag::kOther;
  throw ConfigError(file.string() + ":" + std::to_string(line_no) +
                    ": unknown POS tag \"" + std::string(tag) + "\"");
}

std::ifstream open_lexicon(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open lexicon file: " + path.string());
  return in;
}

// token<TAB>value lines; blank lines ignored.
void for_each_tsv_line(const std::filesystem::path& path,
                       const std::function<void(std::string_view, std::string_view,
                                                std::size_t)>& fn) {
  std::ifstream in = open_lexicon(path);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;
    std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size()) {
      throw ConfigError(path.string() + ":" + std::to_string(line_no) +
                        ": expected token<TAB>value");
    }
    fn(std::string_view(line).substr(0, tab), std::string_view(line).substr(tab + 1),
       line_no);
  }
}

}  // namespace

Normalizer::Normalizer(const NormalizerConfig& config) {
  config_ = config;
  if (config.keyword_mode == KeywordMode::kPosFilter && !config.pos_lexicon) {
    throw ConfigError("keyword mode POS_FILTER requires a POS lexicon");
  }
  if (config.lemma_lexicon) {
    for_each_tsv_line(*config.lemma_lexicon,
                      [&](std::string_view token, std::string_view lemma, std::size_t) {
                        lemmas_[std::string(token)] = std::string(lemma);
                      });
  }
  if (config.pos_lexicon) {
    for_each_tsv_line(*config.pos_lexicon, [&](std::string_view token,
                                               std::string_view tag, std::size_t line_no) {
      pos_[std::string(token)] = parse_pos_tag(tag, *config.pos_lexicon, line_no);
    });
  }
  if (config.stopword_list) {
    std::ifstream in = open_lexicon(*config.stopword_list);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::string word = trim(line);
      if (!word.empty()) stopwords_.insert(std::move(word));
    }
  } else {
    for (std::string_view word : kBuiltinStopwords) stopwords_.emplace(word);
  }
}

Normalizer Normalizer::from_tables(KeywordMode mode,
                                   std::unordered_map<std::string, std::string> lemmas,
                                   std::unordered_set<std::string> stopwords,
                                   std::unordered_map<std::string, PosTag> pos) {
  Normalizer n;
  n.config_.keyword_mode = mode;
  n.lemmas_ = std::move(lemmas);
  n.stopwords_ = std::move(stopwords);
  n.pos_ = std::move(pos);
  return n;
}

std::vector<std::string> Normalizer::normalize_tokens(std::string_view text) const {
  std::string lowered(text);
  ascii_lower_inplace(lowered);

  std::string cleaned;  // chunks that survive, '#' removed, space separated
  for (std::string& chunk : split_whitespace(lowered)) {
    if (chunk.starts_with("http") || chunk.starts_with("www.")) continue;
    if (chunk.starts_with('@')) continue;
    std::erase(chunk, '#');
    if (chunk.empty()) continue;
    if (!cleaned.empty()) cleaned += ' ';
    cleaned += chunk;
  }

  std::vector<std::string> tokens;
  std::string current;
  std::size_t i = 0;
  while (i <= cleaned.size()) {
    bool flush = i == cleaned.size();
    std::size_t len = 1;
    if (!flush) {
      auto [cp, cp_len] = decode_utf8(cleaned, i);
      len = cp_len;
      if (is_separator_cp(cp)) {
        flush = true;
      } else {
        current.append(cleaned.substr(i, len));
      }
    }
    if (flush && !current.empty()) {
      auto it = lemmas_.find(current);
      std::string mapped = it != lemmas_.end() ? it->second : std::move(current);
      current.clear();
      if (!mapped.empty() && !pure_numeric(mapped) && !pure_punctuation(mapped)) {
        tokens.push_back(std::move(mapped));
      }
    }
    i += len;
  }
  return tokens;
}

std::vector<std::string> Normalizer::extract_keywords(
    std::span<const std::string> tokens) const {
  std::vector<std::string> keywords;
  for (const std::string& token : tokens) {
    bool keep = false;
    if (config_.keyword_mode == KeywordMode::kPosFilter) {
      auto it = pos_.find(token);
      keep = it == pos_.end() || it->second == PosTag::kNoun ||
             it->second == PosTag::kVerb || it->second == PosTag::kAdj;
    } else {
      keep = !stopwords_.contains(token) && codepoint_length(token) >= 2;
    }
    if (keep) keywords.push_back(token);
  }
  std::sort(keywords.begin(), keywords.end());
  keywords.erase(std::unique(keywords.begin(), keywords.end()), keywords.end());
  return keywords;
}

ProcessedTweet Normalizer::preprocess(const RawTweet& raw) const {
  ProcessedTweet tweet;
  tweet.id = raw.id;
  tweet.raw_text = raw.text;
  tweet.tokens = normalize_tokens(raw.text);
  tweet.keywords = extract_keywords(tweet.tokens);
  return tweet;
}

bool is_retweet(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size()) {
    auto [cp, len] = decode_utf8(text, i);
    if (!is_space_cp(cp)) break;
    i += len;
  }
  if (i + 2 >= text.size()) return false;
  char r = text[i], t = text[i + 1];
  if (r != 'r' && r != 'R') return false;
  if (t != 't' && t != 'T') return false;
  char next = text[i + 2];
  if (next == '@') return true;
  auto [cp, len] = decode_utf8(text, i + 2);
  (void)len;
  return is_space_cp(cp);
}

namespace {

RawTweet parse_record(const nlohmann::json& record, std::size_t line_no) {
  const auto malformed = [&]() -> ParseError {
    return ParseError("line " + std::to_string(line_no) + ": malformed record");
  };
  if (!record.is_object()) throw malformed();
  auto id_it = record.find("id");
  auto text_it = record.find("text");
  if (id_it == record.end() || !id_it->is_string()) throw malformed();
  if (text_it == record.end() || !text_it->is_string()) throw malformed();
  RawTweet raw;
  raw.id = id_it->get<std::string>();
  raw.text = text_it->get<std::string>();
  if (raw.id.empty() || raw.text.empty()) throw malformed();
  auto ts_it = record.find("timestamp");
  if (ts_it != record.end()) {
    if (!ts_it->is_number_integer()) throw malformed();
    raw.timestamp = ts_it->get<std::int64_t>();
  }
  return raw;
}

}  // namespace

ParseResult parse_corpus(std::istream& input, const Normalizer& normalizer) {
  ParseResult result;
  std::unordered_set<std::string> seen_ids;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(input, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (trim(line).empty()) continue;

    nlohmann::json record = nlohmann::json::parse(line, nullptr, false);
    if (record.is_discarded()) {
      throw ParseError("line " + std::to_string(line_no) + ": malformed record");
    }
    RawTweet raw = parse_record(record, line_no);
    if (!seen_ids.insert(raw.id).second) {
      throw ParseError("line " + std::to_string(line_no) + ": duplicate id \"" +
                       raw.id + "\"");
    }
    if (is_retweet(raw.text)) {
      ++result.skipped.retweets;
      continue;
    }
    ProcessedTweet tweet = normalizer.preprocess(raw);
    if (tweet.droppable()) {
      ++result.skipped.empty;
      continue;
    }
    if (tweet.keywords.empty()) {
      ++result.skipped.keywordless;
      continue;
    }
    tweet.index = result.corpus.size();
    result.corpus.tweets.push_back(std::move(tweet));
  }
  return result;
}

}  // namespace endsum
