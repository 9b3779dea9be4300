#include <doctest.h>

#include <random>
#include <set>

#include "tagix/error.hpp"
#include "tagix/query.hpp"
#include "test_support.hpp"

using namespace tagix;
using tagix::testing::sample_corpus;

namespace {

struct Fixture {
  Corpus corpus = sample_corpus();
  SuffixIndex index = SuffixIndex::build(corpus);
  FmIndex fm{index};

  RunLengthTagArray tags(SchemeKind kind) const {
    return RunLengthTagArray::encode(to_bwt_order(index, assign_tags(corpus, {kind}, &index)).values);
  }
};

// Documents whose text contains `s`, by direct substring search.
std::vector<Tag> docs_containing(const Corpus& c, const std::string& s) {
  std::vector<Tag> out;
  for (std::size_t d = 0; d < c.doc_count(); ++d) {
    if (c.doc_text(d).find(s) != std::string_view::npos) out.push_back(static_cast<Tag>(d));
  }
  return out;
}

}  // namespace

TEST_CASE("mem_tag_report") {
  const Fixture f;
  SUBCASE("column tags of ACAT occurrences") {
    const auto report = mem_tag_report(f.fm, f.tags(SchemeKind::kColumn), "ACAT", 4);
    REQUIRE(report.size() == 1);
    std::set<Tag> cols;
    const auto& text = f.corpus.text();
    for (std::size_t p = text.find("ACAT"); p != std::string::npos; p = text.find("ACAT", p + 1)) {
      cols.insert(f.corpus.column_of()[p]);
    }
    CHECK(report[0].tags == std::vector<Tag>(cols.begin(), cols.end()));
    CHECK(report[0].tags == std::vector<Tag>{5});
  }
  SUBCASE("document tags of ACAT") {
    const auto report = mem_tag_report(f.fm, f.tags(SchemeKind::kDocument), "ACAT", 4);
    REQUIRE(report.size() == 1);
    CHECK(report[0].tags == docs_containing(f.corpus, "ACAT"));
  }
  CHECK(mem_tag_report(f.fm, f.tags(SchemeKind::kDocument), "ACGTACGT", 6).empty());
  CHECK_THROWS_AS(mem_tag_report(f.fm, RunLengthTagArray::encode(std::vector<Tag>{1, 2}), "ACAT", 4),
                  ValidationError);
}

TEST_CASE("classify") {
  Fixture f;
  SUBCASE("self match, one label per document") {
    f.corpus.set_labels({"d0", "d1", "d2", "d3", "d4"});
    const auto c = classify(f.fm, f.tags(SchemeKind::kLabel), "r", "GATTAGATA", 4);
    REQUIRE(c.verdict.has_value());
    CHECK(*c.verdict == 4);
    CHECK(c.score == 9);
  }
  SUBCASE("unclassified") {
    const auto c = classify(f.fm, f.tags(SchemeKind::kDocument), "r", "XXXX", 4);
    CHECK_FALSE(c.verdict.has_value());
    CHECK(c.score == 0);
  }
  SUBCASE("two-group labels") {
    f.corpus.set_labels({"L0", "L0", "L0", "L1", "L1"});
    CHECK(docs_containing(f.corpus, "GATTAG") == std::vector<Tag>{3, 4});
    const auto c = classify(f.fm, f.tags(SchemeKind::kLabel), "r", "GATTAG", 6);
    REQUIRE(c.verdict.has_value());
    CHECK(label_codes(f.corpus.labels()).names[static_cast<std::size_t>(*c.verdict)] == "L1");
  }
  SUBCASE("ties go to the smallest tag") {
    // ACAT occurs in documents 0, 1 and 2 with equal support.
    const auto c = classify(f.fm, f.tags(SchemeKind::kDocument), "r", "ACAT", 4);
    CHECK(*c.verdict == 0);
    CHECK(c.scores.size() == 3);
  }
}

TEST_CASE("property: report tags equal an interval scan; verdict invariant under recoding") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    Corpus c = tagix::testing::random_corpus(rng, 400);
    std::vector<std::string> labels;
    for (std::size_t d = 0; d < c.doc_count(); ++d) labels.push_back("L" + std::to_string(rng() % 3));
    c.set_labels(labels);
    const auto ix = SuffixIndex::build(c);
    const FmIndex fm(ix);
    const auto values = to_bwt_order(ix, assign_tags(c, {SchemeKind::kLabel}, &ix)).values;
    const auto rle = RunLengthTagArray::encode(values);
    const std::size_t at = rng() % c.size();
    const std::string read = c.text().substr(at, 5 + rng() % 20);
    const std::string clean = read.substr(0, read.find_first_of("$#"));
    for (const auto& entry : mem_tag_report(fm, rle, clean, 3)) {
      std::set<Tag> scan(values.begin() + static_cast<std::ptrdiff_t>(entry.mem.interval.lo),
                         values.begin() + static_cast<std::ptrdiff_t>(entry.mem.interval.hi));
      CHECK(entry.tags == std::vector<Tag>(scan.begin(), scan.end()));
    }
    // Order-preserving recoding (t -> 10t + 7) keeps tie order, so the verdict maps through it.
    std::vector<Tag> recoded(values);
    for (auto& t : recoded) t = 10 * t + 7;
    const auto a = classify(fm, rle, "r", clean, 3);
    const auto b = classify(fm, RunLengthTagArray::encode(recoded), "r", clean, 3);
    CHECK(a.verdict.has_value() == b.verdict.has_value());
    if (a.verdict) {
      CHECK(*b.verdict == 10 * *a.verdict + 7);
      CHECK(a.score == b.score);
    }
  }
}

TEST_CASE("classify_batch keeps input order across threads") {
  const Fixture f;
  const auto tags = f.tags(SchemeKind::kDocument);
  std::vector<Read> reads;
  for (std::size_t d = 0; d < f.corpus.doc_count(); ++d) {
    const auto body = f.corpus.doc_text(d);
    reads.push_back(Read{"r" + std::to_string(d), std::string(body.substr(0, body.size() - 1))});
  }
  reads.push_back(Read{"none", "XXXX"});
  const auto serial = classify_batch(f.fm, tags, reads, 4, 1);
  const auto parallel = classify_batch(f.fm, tags, reads, 4, 4);
  REQUIRE(serial.size() == reads.size());
  for (std::size_t i = 0; i < reads.size(); ++i) {
    CHECK(parallel[i].read_name == reads[i].name);
    CHECK(parallel[i].verdict == serial[i].verdict);
    CHECK(parallel[i].score == serial[i].score);
  }
  CHECK(*serial[0].verdict == 0);
  CHECK_FALSE(serial.back().verdict.has_value());
}
