#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "endsum/errors.hpp"
#include "endsum/scoring.hpp"
#include "test_util.hpp"

using namespace endsum;
using testutil::brute_entropies;
using testutil::make_corpus;
using testutil::random_corpus;

namespace {

ProbabilityRow row_of(std::vector<double> ps) {
  ProbabilityRow row;
  for (std::size_t j = 0; j < ps.size(); ++j) {
    row.entries.emplace_back(static_cast<std::uint32_t>(j), ps[j]);
  }
  return row;
}

double direct_entropy(const std::vector<double>& ps, double gamma) {
  double sum = 0.0;
  for (double p : ps) sum += std::fabs(-std::pow(p, gamma) * std::log2(p));
  return sum;
}

}  // namespace

TEST_CASE("karci_entropy known values") {
  CHECK(karci_entropy(row_of({1.0}), 0.5) == 0.0);
  CHECK(std::abs(karci_entropy(row_of({0.5, 0.5}), 0.5) - 1.4142135623730951) < 1e-12);
  CHECK(std::abs(karci_entropy(row_of({0.25, 0.75}), 0.5) - 1.3594330178986445) < 1e-12);
  CHECK(karci_entropy(ProbabilityRow{}, 0.5) == 0.0);
}

TEST_CASE("karci_entropy rejects non-positive gamma") {
  CHECK_THROWS_AS(karci_entropy(row_of({1.0}), 0.0), ConfigError);
  CHECK_THROWS_AS(karci_entropy(row_of({1.0}), -1.0), ConfigError);
}

TEST_CASE("karci_entropy is non-negative on random rows") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(0.01, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<int> n_dist(1, 12);
    int n = n_dist(rng);
    std::vector<double> raw(n);
    double total = 0.0;
    for (double& x : raw) total += (x = dist(rng));
    for (double& x : raw) x /= total;
    double e = karci_entropy(row_of(raw), 0.5);
    CHECK(e >= 0.0);
    CHECK(std::abs(e - direct_entropy(raw, 0.5)) < 1e-12);
  }
}

TEST_CASE("uniform rows maximize entropy for fixed support") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> dist(0.01, 1.0);
  for (int n = 2; n <= 10; ++n) {
    std::vector<double> uniform(n, 1.0 / n);
    double e_uniform = karci_entropy(row_of(uniform), 0.5);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<double> raw(n);
      double total = 0.0;
      for (double& x : raw) total += (x = dist(rng));
      for (double& x : raw) x /= total;
      CHECK(e_uniform >= karci_entropy(row_of(raw), 0.5) - 1e-12);
    }
  }
}

TEST_CASE("entropy_scores trivial corpora") {
  Corpus disjoint = make_corpus({{"a"}, {"b"}, {"c"}});
  EntropyScores scores = entropy_scores(build_overlap_table(disjoint), 0.5);
  for (double v : scores.values) CHECK(v == 0.0);

  // two tweets with one shared keyword: both rows are [1.0]
  Corpus pair = make_corpus({{"a", "b"}, {"a", "c"}});
  EntropyScores pair_scores = entropy_scores(build_overlap_table(pair), 0.5);
  CHECK(pair_scores.values[0] == 0.0);
  CHECK(pair_scores.values[1] == 0.0);
}

TEST_CASE("entropy_scores equals direct per-row evaluation") {
  std::mt19937 rng(20240812);
  for (int trial = 0; trial < 30; ++trial) {
    Corpus corpus = random_corpus(rng, 50, 25, 6);
    EntropyScores scores = entropy_scores(build_overlap_table(corpus), 0.5);
    std::vector<double> expected = brute_entropies(corpus, 0.5);
    REQUIRE(scores.values.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
      CHECK(std::abs(scores.values[i] - expected[i]) <= 1e-12);
      CHECK(scores.values[i] >= 0.0);
    }
  }
}

TEST_CASE("summary_keyword_union examples") {
  Corpus corpus = make_corpus({{"a", "b"}, {"b", "c"}});
  CHECK(summary_keyword_union({}, corpus).empty());

  std::vector<std::uint32_t> first{0};
  KeywordUnion single = summary_keyword_union(first, corpus);
  CHECK(single == KeywordUnion{"a", "b"});

  std::vector<std::uint32_t> both{0, 1};
  CHECK(summary_keyword_union(both, corpus) == KeywordUnion{"a", "b", "c"});
}

TEST_CASE("diversity examples") {
  ProcessedTweet ab = testutil::make_tweet(0, {"a", "b"});
  DiversityScore vs_empty = diversity(ab, {});
  CHECK(vs_empty.sim == 0.0);
  CHECK(vs_empty.diversity == 1.0);

  DiversityScore contained = diversity(ab, {"a", "b", "c"});
  CHECK(contained.sim == 1.0);
  CHECK(contained.diversity == 0.0);

  ProcessedTweet abcd = testutil::make_tweet(1, {"a", "b", "c", "d"});
  DiversityScore half = diversity(abcd, {"a", "c", "x"});
  CHECK(half.sim == 0.5);
  CHECK(half.diversity == 0.5);
}

TEST_CASE("diversity rejects keywordless tweets") {
  ProcessedTweet bare;
  bare.tokens = {"the"};
  CHECK_THROWS_AS(diversity(bare, {}), std::invalid_argument);
}

TEST_CASE("diversity is monotone as the union grows") {
  ProcessedTweet tweet = testutil::make_tweet(0, {"a", "b", "c"});
  KeywordUnion grow;
  double last = diversity(tweet, grow).diversity;
  for (const char* kw : {"x", "a", "y", "b", "c"}) {
    grow.insert(kw);
    double d = diversity(tweet, grow).diversity;
    CHECK(d <= last);
    CHECK(d + diversity(tweet, grow).sim == 1.0);
    last = d;
  }
  CHECK(last == 0.0);

  // diversity = 1 iff no keyword is shared
  CHECK(diversity(tweet, {"p", "q"}).diversity == 1.0);
  CHECK(diversity(tweet, {"p", "a"}).diversity < 1.0);
}

TEST_CASE("entropy csv dump") {
  Corpus corpus = make_corpus({{"a", "b"}, {"a", "c"}});
  EntropyScores scores = entropy_scores(build_overlap_table(corpus), 0.5);
  std::ostringstream out;
  write_entropy_csv(out, scores, corpus);
  CHECK(out.str() == "index,id,entropy\n0,t0,0.000000\n1,t1,0.000000\n");
}
