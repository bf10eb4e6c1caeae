#include "endsum/simgraph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace endsum {

std::span<const OverlapEntry> OverlapTable::neighbors(std::uint32_t i) const {
  if (i >= size()) throw std::out_of_range("overlap row out of range");
  return {entries_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
}

std::uint64_t OverlapTable::row_sum(std::uint32_t i) const {
  if (i >= size()) throw std::out_of_range("overlap row out of range");
  return row_sums_[i];
}

std::uint32_t OverlapTable::overlap(std::uint32_t i, std::uint32_t j) const {
  if (i == j) return 0;
  auto row = neighbors(i);
  if (j >= size()) throw std::out_of_range("overlap column out of range");
  auto it = std::lower_bound(row.begin(), row.end(), j,
                             [](const OverlapEntry& e, std::uint32_t jj) {
                               return e.index < jj;
                             });
  return it != row.end() && it->index == j ? it->count : 0;
}

void OverlapTable::write_csv(std::ostream& out) const {
  out << "i,j,overlap\n";
  for (std::uint32_t i = 0; i < size(); ++i) {
    for (const OverlapEntry& e : neighbors(i)) {
      out << i << ',' << e.index << ',' << e.count << '\n';
    }
  }
}

std::uint32_t keyword_overlap(std::span<const std::string> a,
                              std::span<const std::string> b) {
  std::uint32_t count = 0;
  std::size_t ia = 0, ib = 0;
  while (ia < a.size() && ib < b.size()) {
    int cmp = a[ia].compare(b[ib]);
    if (cmp == 0) {
      ++count, ++ia, ++ib;
    } else if (cmp < 0) {
      ++ia;
    } else {
      ++ib;
    }
  }
  return count;
}

OverlapTable build_overlap_table(const Corpus& corpus) {
  const std::uint32_t m = corpus.size();

  // keyword -> tweets containing it, in ascending index order.
  std::unordered_map<std::string_view, std::vector<std::uint32_t>> postings;
  for (const ProcessedTweet& tweet : corpus.tweets) {
    for (const std::string& kw : tweet.keywords) postings[kw].push_back(tweet.index);
  }

  OverlapTable table;
  table.offsets_.assign(m + 1, 0);
  table.row_sums_.assign(m, 0);

  // Per-row scratch counts: counts[j] = shared keywords between i and j.
  std::vector<std::uint32_t> counts(m, 0);
  std::vector<std::uint32_t> touched;
  for (std::uint32_t i = 0; i < m; ++i) {
    touched.clear();
    for (const std::string& kw : corpus.tweets[i].keywords) {
      for (std::uint32_t j : postings.find(kw)->second) {
        if (j == i) continue;
        if (counts[j]++ == 0) touched.push_back(j);
      }
    }
    std::sort(touched.begin(), touched.end());
    table.offsets_[i + 1] = table.offsets_[i] + touched.size();
    std::uint64_t sum = 0;
    for (std::uint32_t j : touched) {
      table.entries_.push_back({j, counts[j]});
      sum += counts[j];
      counts[j] = 0;
    }
    table.row_sums_[i] = sum;
  }
  return table;
}

ProbabilityRow probability_row(const OverlapTable& table, std::uint32_t i) {
  if (i >= table.size()) throw std::out_of_range("probability row out of range");
  ProbabilityRow row;
  const std::uint64_t rs = table.row_sum(i);
  if (rs == 0) return row;
  auto nbrs = table.neighbors(i);
  row.entries.reserve(nbrs.size());
  for (const OverlapEntry& e : nbrs) {
    row.entries.emplace_back(e.index, static_cast<double>(e.count) / static_cast<double>(rs));
  }
  return row;
}

}  // namespace endsum
