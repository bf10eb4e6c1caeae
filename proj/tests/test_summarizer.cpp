#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "endsum/errors.hpp"
#include "endsum/summarizer.hpp"
#include "test_util.hpp"

using namespace endsum;
using testutil::brute_greedy;
using testutil::make_corpus;
using testutil::random_corpus;

namespace {

EnDConfig config_of(double alpha, double beta, double gamma, std::uint32_t length) {
  EnDConfig config;
  config.alpha = alpha;
  config.beta = beta;
  config.gamma = gamma;
  config.summary_length = length;
  return config;
}

// fire/rescue fixture: entropies E0 > E1 = E3 > E2 = 0; greedy order 0,3,1,2.
Corpus four_tweets() {
  return make_corpus({{"fire", "downtown", "building"},
                      {"fire", "rescue"},
                      {"flood", "river"},
                      {"fire", "rescue", "bridge"}});
}

Corpus golden_corpus() {
  NormalizerConfig config;
  config.keyword_mode = KeywordMode::kPosFilter;
  config.lemma_lexicon = std::string(ENDSUM_FIXTURES_DIR) + "/lemmas.tsv";
  config.pos_lexicon = std::string(ENDSUM_FIXTURES_DIR) + "/pos.tsv";
  Normalizer n(config);
  std::ifstream in(std::string(ENDSUM_FIXTURES_DIR) + "/corpus30.jsonl");
  REQUIRE(in.good());
  return parse_corpus(in, n).corpus;
}

}  // namespace

TEST_CASE("combined_score examples") {
  CHECK(combined_score(2.0, 1.0, config_of(0.5, 0.5, 0.5, 1)) == 1.5);
  CHECK(combined_score(0.0, 0.0, config_of(0.7, 0.3, 0.5, 1)) == 0.0);
  CHECK(combined_score(3.0, 0.4, config_of(1.0, 0.0, 0.5, 1)) == 3.0);
}

TEST_CASE("config validation") {
  CHECK_NOTHROW(config_of(0.5, 0.5, 0.5, 1).validate());
  CHECK_THROWS_AS(config_of(0.5, 0.5, 0.5, 0).validate(), ConfigError);
  CHECK_THROWS_AS(config_of(0.0, 0.0, 0.5, 1).validate(), ConfigError);
  CHECK_THROWS_AS(config_of(-0.1, 0.5, 0.5, 1).validate(), ConfigError);
  CHECK_THROWS_AS(config_of(0.5, -0.1, 0.5, 1).validate(), ConfigError);
  CHECK_THROWS_AS(config_of(0.5, 0.5, 0.0, 1).validate(), ConfigError);
  CHECK_THROWS_AS(config_of(0.5, 0.5, -1.0, 1).validate(), ConfigError);
}

TEST_CASE("select_next picks argmax entropy from an empty state") {
  Corpus corpus = four_tweets();
  EntropyScores entropies = entropy_scores(build_overlap_table(corpus), 0.5);
  SummaryState state;
  state.target_length = 2;
  CHECK(select_next(state, corpus, entropies, config_of(0.5, 0.5, 0.5, 2)) == 0);
}

TEST_CASE("select_next breaks ties toward the lower index") {
  // identical keyword sets -> identical entropies and diversities
  Corpus corpus = make_corpus({{"a", "b"}, {"a", "b"}});
  EntropyScores entropies = entropy_scores(build_overlap_table(corpus), 0.5);
  REQUIRE(entropies.values[0] == entropies.values[1]);
  SummaryState state;
  CHECK(select_next(state, corpus, entropies, config_of(0.5, 0.5, 0.5, 1)) == 0);
}

TEST_CASE("select_next signals exhaustion") {
  Corpus corpus = make_corpus({{"a"}});
  EntropyScores entropies = entropy_scores(build_overlap_table(corpus), 0.5);
  SummaryState state;
  state.picks.push_back({0, 0.0, 1.0, 0.5});
  CHECK_THROWS_AS(select_next(state, corpus, entropies, config_of(0.5, 0.5, 0.5, 2)),
                  DataError);
}

TEST_CASE("four-tweet fixture trace") {
  Corpus corpus = four_tweets();

  SummaryState two = summarize(corpus, config_of(0.5, 0.5, 0.5, 2));
  CHECK(two.selected() == std::vector<std::uint32_t>{0, 3});
  CHECK(two.selected() == brute_greedy(corpus, 0.5, 0.5, 0.5, 2));

  SummaryState three = summarize(corpus, config_of(0.5, 0.5, 0.5, 3));
  CHECK(three.selected() == std::vector<std::uint32_t>{0, 3, 1});

  // L >= m exhausts the corpus in greedy order
  SummaryState all = summarize(corpus, config_of(0.5, 0.5, 0.5, 10));
  CHECK(all.selected() == std::vector<std::uint32_t>{0, 3, 1, 2});
  CHECK(all.picks.size() == 4);

  // L = 1 reduces to the first pick
  SummaryState one = summarize(corpus, config_of(0.5, 0.5, 0.5, 1));
  CHECK(one.selected() == std::vector<std::uint32_t>{0});

  // the union tracks every selected tweet's keywords
  CHECK(three.keyword_union ==
        KeywordUnion{"fire", "downtown", "building", "rescue", "bridge"});
}

TEST_CASE("summarize rejects an empty corpus") {
  Corpus corpus;
  CHECK_THROWS_AS(summarize(corpus, config_of(0.5, 0.5, 0.5, 1)), DataError);
}

TEST_CASE("golden 30-tweet fixture selection") {
  Corpus corpus = golden_corpus();
  REQUIRE(corpus.size() == 30);
  SummaryState summary = summarize(corpus, config_of(0.5, 0.5, 0.5, 5));
  CHECK(summary.selected() == std::vector<std::uint32_t>{17, 26, 22, 14, 12});

  const char* expected_ids[] = {"q18", "q27", "q23", "q15", "q13"};
  const double expected_entropy[] = {8.419404125489, 8.379711025503, 8.419404125489,
                                     7.363961030679, 7.329033246652};
  const double expected_diversity[] = {1.0, 1.0, 0.875, 0.7777777777777778,
                                       0.7777777777777778};
  REQUIRE(summary.picks.size() == 5);
  for (std::size_t s = 0; s < 5; ++s) {
    CHECK(corpus.tweets[summary.picks[s].index].id == expected_ids[s]);
    CHECK(std::abs(summary.picks[s].entropy - expected_entropy[s]) < 1e-9);
    CHECK(std::abs(summary.picks[s].diversity - expected_diversity[s]) < 1e-12);
    CHECK(summary.picks[s].score ==
          combined_score(summary.picks[s].entropy, summary.picks[s].diversity,
                         config_of(0.5, 0.5, 0.5, 5)));
  }
}

TEST_CASE("greedy matches the exhaustive oracle on random corpora") {
  std::mt19937 rng(20240813);
  std::uniform_int_distribution<std::uint32_t> len_dist(1, 5);
  for (int trial = 0; trial < 25; ++trial) {
    Corpus corpus = random_corpus(rng, 20, 12, 5);
    std::uint32_t length = len_dist(rng);
    SummaryState summary = summarize(corpus, config_of(0.5, 0.5, 0.5, length));
    CHECK(summary.selected() == brute_greedy(corpus, 0.5, 0.5, 0.5, length));
  }
}

TEST_CASE("first pick and scaling invariance") {
  std::mt19937 rng(20240814);
  for (int trial = 0; trial < 20; ++trial) {
    Corpus corpus = random_corpus(rng, 25, 10, 5);
    EntropyScores entropies = entropy_scores(build_overlap_table(corpus), 0.5);

    // first selected index = argmax entropy (lowest index on ties)
    SummaryState first = summarize(corpus, entropies, config_of(0.7, 0.3, 0.5, 1));
    std::uint32_t argmax = 0;
    for (std::uint32_t i = 1; i < corpus.size(); ++i) {
      if (entropies.values[i] > entropies.values[argmax]) argmax = i;
    }
    CHECK(first.selected().front() == argmax);

    // scaling both weights leaves the sequence unchanged
    SummaryState base = summarize(corpus, entropies, config_of(0.5, 0.5, 0.5, 5));
    SummaryState scaled = summarize(corpus, entropies, config_of(1.5, 1.5, 0.5, 5));
    CHECK(base.selected() == scaled.selected());
  }
}

TEST_CASE("summarize is deterministic and duplicate-free") {
  std::mt19937 rng(20240815);
  for (int trial = 0; trial < 10; ++trial) {
    Corpus corpus = random_corpus(rng, 30, 12, 5);
    SummaryState a = summarize(corpus, config_of(0.5, 0.5, 0.5, 8));
    SummaryState b = summarize(corpus, config_of(0.5, 0.5, 0.5, 8));
    CHECK(a.selected() == b.selected());
    CHECK(a.selected().size() == std::min<std::size_t>(8, corpus.size()));
    auto indices = a.selected();
    std::sort(indices.begin(), indices.end());
    CHECK(std::adjacent_find(indices.begin(), indices.end()) == indices.end());

    // every step's score beats or ties every remaining candidate
    KeywordUnion taken;
    EntropyScores entropies = entropy_scores(build_overlap_table(corpus), 0.5);
    EnDConfig config = config_of(0.5, 0.5, 0.5, 8);
    std::vector<bool> used(corpus.size(), false);
    for (const Pick& pick : a.picks) {
      for (std::uint32_t i = 0; i < corpus.size(); ++i) {
        if (used[i] || i == pick.index) continue;
        double rival = combined_score(entropies.values[i],
                                      diversity(corpus.tweets[i], taken).diversity,
                                      config);
        CHECK(pick.score >= rival);
      }
      used[pick.index] = true;
      taken.insert(corpus.tweets[pick.index].keywords.begin(),
                   corpus.tweets[pick.index].keywords.end());
    }
  }
}

TEST_CASE("baseline_frequency hand-computed fixture") {
  Corpus corpus = make_corpus(
      {{"fire", "rescue"}, {"fire", "damage"}, {"flood"}, {"fire"}, {"flood", "damage"}});
  SummaryState summary = baseline_frequency(corpus, 3);
  CHECK(summary.selected() == std::vector<std::uint32_t>{3, 1, 0});
  CHECK(summary.picks[0].score == 3.0);
  CHECK(summary.picks[1].score == 2.5);
  CHECK(summary.picks[2].score == 2.0);
}

TEST_CASE("baseline_frequency uniform keyword contribution") {
  // "x" appears in all three tweets, so each score includes a term of 3
  Corpus corpus = make_corpus({{"x"}, {"x", "solo"}, {"x", "duo", "trio"}});
  SummaryState summary = baseline_frequency(corpus, 1);
  CHECK(summary.selected() == std::vector<std::uint32_t>{0});
  CHECK(summary.picks[0].score == 3.0);
}

TEST_CASE("baseline_frequency validation") {
  Corpus corpus = make_corpus({{"a"}});
  CHECK_THROWS_AS(baseline_frequency(corpus, 0), ConfigError);
  Corpus empty;
  CHECK_THROWS_AS(baseline_frequency(empty, 1), DataError);
  CHECK(baseline_frequency(corpus, 5).selected() == std::vector<std::uint32_t>{0});
}

TEST_CASE("summary jsonl format") {
  Corpus corpus = make_corpus({{"fire"}, {"fire", "flood"}});
  corpus.tweets[0].raw_text = "Fire \"alert\" downtown";
  SummaryState summary = summarize(corpus, config_of(0.5, 0.5, 0.5, 1));
  std::ostringstream out;
  write_summary_jsonl(out, summary, corpus);
  CHECK(out.str() ==
        "{\"rank\":1,\"id\":\"t0\",\"text\":\"Fire \\\"alert\\\" downtown\","
        "\"entropy\":0.000000,\"diversity_at_selection\":1.000000,"
        "\"score\":0.500000}\n");
}
