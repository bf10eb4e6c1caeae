#include "endsum/rouge.hpp"

#include <algorithm>
#include <unordered_map>
#include <vector>

#include "endsum/errors.hpp"
#include "endsum/format.hpp"

namespace endsum {
namespace {

// n-gram key: tokens joined on a byte that cannot occur inside a token.
std::unordered_map<std::string, std::uint32_t> ngram_counts(
    std::span<const std::string> tokens, int n) {
  std::unordered_map<std::string, std::uint32_t> counts;
  if (tokens.size() < static_cast<std::size_t>(n)) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::string key = tokens[i];
    for (int k = 1; k < n; ++k) {
      key += '\x1f';
      key += tokens[i + k];
    }
    ++counts[std::move(key)];
  }
  return counts;
}

RougeScore from_match(std::size_t matched, std::size_t candidate_total,
                      std::size_t reference_total) {
  RougeScore score;
  if (candidate_total > 0) {
    score.precision = static_cast<double>(matched) / static_cast<double>(candidate_total);
  }
  if (reference_total > 0) {
    score.recall = static_cast<double>(matched) / static_cast<double>(reference_total);
  }
  if (score.precision + score.recall > 0.0) {
    score.f1 = 2.0 * score.precision * score.recall / (score.precision + score.recall);
  }
  return score;
}

std::size_t lcs_length(std::span<const std::string> a, std::span<const std::string> b) {
  if (a.empty() || b.empty()) return 0;
  std::vector<std::size_t> prev(b.size() + 1, 0), curr(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      curr[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], curr[j - 1]);
    }
    std::swap(prev, curr);
  }
  return prev[b.size()];
}

}  // namespace

RougeScore rouge_n(std::span<const std::string> candidate,
                   std::span<const std::string> reference, int n) {
  if (n < 1) throw ConfigError("ROUGE-N order must be >= 1");
  auto cand = ngram_counts(candidate, n);
  auto ref = ngram_counts(reference, n);
  std::size_t cand_total = 0, ref_total = 0, matched = 0;
  for (const auto& [key, count] : cand) cand_total += count;
  for (const auto& [key, count] : ref) ref_total += count;
  for (const auto& [key, count] : cand) {
    auto it = ref.find(key);
    if (it != ref.end()) matched += std::min(count, it->second);
  }
  return from_match(matched, cand_total, ref_total);
}

RougeScore rouge_l(std::span<const std::string> candidate,
                   std::span<const std::string> reference) {
  return from_match(lcs_length(candidate, reference), candidate.size(),
                    reference.size());
}

RougeReport evaluate(const std::string& candidate_text,
                     const std::string& reference_text,
                     const Normalizer& normalizer) {
  std::vector<std::string> cand = normalizer.normalize_tokens(candidate_text);
  std::vector<std::string> ref = normalizer.normalize_tokens(reference_text);
  if (cand.empty()) throw DataError("candidate text is empty after normalization");
  if (ref.empty()) throw DataError("reference text is empty after normalization");
  RougeReport report;
  report.candidate_tokens = cand.size();
  report.reference_tokens = ref.size();
  report.rouge1 = rouge_n(cand, ref, 1);
  report.rouge2 = rouge_n(cand, ref, 2);
  report.rougeL = rouge_l(cand, ref);
  return report;
}

std::string to_json(const RougeReport& report) {
  const auto block = [](const char* name, const RougeScore& s) {
    return std::string("\"") + name + "\":{\"p\":" + fixed6(s.precision) +
           ",\"r\":" + fixed6(s.recall) + ",\"f1\":" + fixed6(s.f1) + "}";
  };
  return "{" + block("rouge1", report.rouge1) + "," + block("rouge2", report.rouge2) +
         "," + block("rougeL", report.rougeL) + "}";
}

}  // namespace endsum
