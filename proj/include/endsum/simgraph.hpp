#pragma once

#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "endsum/corpus.hpp"

namespace endsum {

struct OverlapEntry {
  std::uint32_t index;  // the other tweet
  std::uint32_t count;  // shared distinct keywords, always > 0
};

// Sparse symmetric table of pairwise keyword overlaps. Rows hold only
// positive entries, ascending by index; self pairs are excluded.
class OverlapTable {
 public:
  std::uint32_t size() const { return static_cast<std::uint32_t>(row_sums_.size()); }

  std::span<const OverlapEntry> neighbors(std::uint32_t i) const;
  std::uint64_t row_sum(std::uint32_t i) const;
  std::uint32_t overlap(std::uint32_t i, std::uint32_t j) const;

  // Debug dump: "i,j,overlap" for every positive entry, sorted by (i, j).
  void write_csv(std::ostream& out) const;

 private:
  friend OverlapTable build_overlap_table(const Corpus& corpus);

  std::vector<std::size_t> offsets_;     // size m + 1
  std::vector<OverlapEntry> entries_;    // rows back to back
  std::vector<std::uint64_t> row_sums_;  // size m
};

// |a ∩ b| for sorted, duplicate-free keyword vectors.
std::uint32_t keyword_overlap(std::span<const std::string> a,
                              std::span<const std::string> b);

// Builds the full table through an inverted keyword index, so the work
// scales with actual co-occurrence rather than all m^2 pairs.
OverlapTable build_overlap_table(const Corpus& corpus);

// Row i of the overlap table normalized to probabilities. Empty when the
// tweet shares no keyword with any other tweet.
struct ProbabilityRow {
  std::vector<std::pair<std::uint32_t, double>> entries;  // (j, p_ij), sum 1
};

// Throws std::out_of_range when i >= table.size().
ProbabilityRow probability_row(const OverlapTable& table, std::uint32_t i);

}  // namespace endsum
