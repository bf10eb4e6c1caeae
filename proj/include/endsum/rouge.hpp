#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "endsum/corpus.hpp"

namespace endsum {

struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

struct RougeReport {
  RougeScore rouge1;
  RougeScore rouge2;
  RougeScore rougeL;
  std::size_t candidate_tokens = 0;
  std::size_t reference_tokens = 0;
};

// Clipped n-gram precision/recall/F1. Throws ConfigError when n < 1.
RougeScore rouge_n(std::span<const std::string> candidate,
                   std::span<const std::string> reference, int n);

// Longest-common-subsequence precision/recall/F1 over the flattened
// token sequences.
RougeScore rouge_l(std::span<const std::string> candidate,
                   std::span<const std::string> reference);

// Normalizes both texts with the corpus pipeline (no keyword filtering)
// and reports ROUGE-1/2/L. Throws DataError naming the side that is empty
// after normalization.
RougeReport evaluate(const std::string& candidate_text,
                     const std::string& reference_text,
                     const Normalizer& normalizer);

// {"rouge1":{"p":..,"r":..,"f1":..},"rouge2":{...},"rougeL":{...}},
// fixed six-decimal values, no trailing newline.
std::string to_json(const RougeReport& report);

}  // namespace endsum
