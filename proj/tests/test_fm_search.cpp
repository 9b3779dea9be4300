#include <doctest.h>

#include <random>

#include "tagix/error.hpp"
#include "tagix/fm_search.hpp"
#include "test_support.hpp"

using namespace tagix;
using tagix::testing::count_occurrences;
using tagix::testing::sample_corpus;

TEST_CASE("backward_extend and backward_search on the toy alignment") {
  const auto ix = SuffixIndex::build(sample_corpus());
  const FmIndex fm(ix);
  CHECK(fm.backward_extend(fm.full(), '#') == Interval{0, 1});
  CHECK(fm.backward_extend(Interval{0, 1}, 'Z').empty());
  CHECK(fm.backward_search("AT").width() == 10);
  CHECK(fm.backward_search("AT").width() == count_occurrences(ix.text(), "AT"));
  CHECK(fm.backward_search("") == Interval{0, 45});
  CHECK(fm.backward_search("GATTACAT").width() == 1);
  CHECK(fm.backward_search("GATTACATT").empty());
  CHECK(fm.locate(fm.backward_search("GATTACAT")) == std::vector<std::size_t>{0});
}

TEST_CASE("rank index counts") {
  std::mt19937_64 rng(51);
  const std::string bwt = tagix::testing::random_string(rng, 1000, "ACGT$#");
  const RankIndex rank(bwt);
  CHECK(rank.sigma() == 6);
  for (const char c : std::string("ACGT$#Z")) {
    std::size_t running = 0;
    for (std::size_t i = 0; i <= bwt.size(); ++i) {
      CHECK(rank.occ(static_cast<std::uint8_t>(c), i) == running);
      if (i < bwt.size()) running += bwt[i] == c;
    }
  }
  // Exact multiple of the block size exercises the trailing sample.
  const RankIndex exact(std::string(2 * RankIndex::kBlock, 'A'));
  CHECK(exact.occ('A', 2 * RankIndex::kBlock) == 2 * RankIndex::kBlock);
}

TEST_CASE("find_mems examples") {
  const auto ix = SuffixIndex::build(sample_corpus());
  const FmIndex fm(ix);
  const auto mems = fm.find_mems("GATTAGAT", 4);
  REQUIRE(mems.size() == 1);
  CHECK(mems[0].p_start == 0);
  CHECK(mems[0].p_end == 8);
  CHECK(mems[0].interval.width() == 2);
  auto occ = fm.locate(mems[0].interval);
  std::sort(occ.begin(), occ.end());
  CHECK(occ == std::vector<std::size_t>{26, 35});

  CHECK(fm.find_mems("XXXX", 1).empty());
  const auto whole = fm.find_mems("GATTACAT", 8);
  REQUIRE(whole.size() == 1);
  CHECK(whole[0].length() == 8);
  CHECK(fm.find_mems("", 1).empty());
  CHECK_THROWS_AS(fm.find_mems("GATT", 0), ValidationError);
  CHECK(fm.find_mems("GATTAGAT", 4) == tagix::testing::naive_mems(ix.text(), "GATTAGAT", 4));
}

TEST_CASE("property: backward_search width equals substring count") {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 200; ++trial) {
    const Corpus c = tagix::testing::random_corpus(rng, 500);
    const auto ix = SuffixIndex::build(c);
    const FmIndex fm(ix);
    for (int q = 0; q < 10; ++q) {
      std::string p;
      if (rng() % 2) {
        const std::size_t at = rng() % c.size();
        p = c.text().substr(at, 1 + rng() % 20);
      } else {
        p = tagix::testing::random_string(rng, 1 + rng() % 20, "ACGT");
      }
      const Interval iv = fm.backward_search(p);
      CHECK(iv.width() == count_occurrences(c.text(), p));
      for (const auto pos : fm.locate(iv)) CHECK(c.text().compare(pos, p.size(), p) == 0);
    }
  }
}

TEST_CASE("property: find_mems equals the brute-force oracle") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 200; ++trial) {
    const Corpus c = tagix::testing::random_corpus(rng, 300);
    const auto ix = SuffixIndex::build(c);
    const FmIndex fm(ix);
    std::string pattern;
    if (rng() % 2) {
      const std::size_t at = rng() % c.size();
      pattern = c.text().substr(at, 1 + rng() % 20);
      for (auto& ch : pattern) {
        if (rng() % 6 == 0) ch = "ACGT"[rng() % 4];
      }
    } else {
      pattern = tagix::testing::random_string(rng, 1 + rng() % 20, "ACGT");
    }
    const std::size_t min_len = 1 + rng() % 6;
    const auto mems = fm.find_mems(pattern, min_len);
    REQUIRE(mems == tagix::testing::naive_mems(c.text(), pattern, min_len));
    for (const auto& m : mems) {
      const std::string slice = pattern.substr(m.p_start, m.length());
      for (const auto pos : fm.locate(m.interval)) CHECK(c.text().compare(pos, slice.size(), slice) == 0);
    }
  }
}
